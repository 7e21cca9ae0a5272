import io
import json
from fractions import Fraction

import pytest

from cli_cases import CASES, FIX
from supersingular import jsonio
from supersingular.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_mu_example():
    code, out, _ = call("mu", "--curve", str(FIX / "121c2.json"), "--p", "11")
    assert code == 0 and json.loads(out) == {"mu": "1/3"}


def test_spectrum_example():
    code, out, _ = call("spectrum", "--p", "3", "--n", "2", "--mu", "1/5", "--x-coords")
    assert code == 0
    doc = json.loads(out)
    assert jsonio.multiset_from_json(doc["x_coordinates"]) == [
        (Fraction(-2, 15), 3),
        (Fraction(-1, 15), 6),
        (Fraction(-1, 135), 27),
    ]


def test_precondition_exit_code():
    code, out, err = call("sporadic-check", "--N", "30")
    assert code == 1 and out == ""
    assert "PreconditionViolated" in err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nope"],
        ["mu", "--p", "11"],
        ["mu", "--curve", "x.json", "--p", "12"],
        ["spectrum", "--p", "3", "--n", "0", "--mu", "1/5"],
    ],
)
def test_usage_errors_print_synopsis(argv, capsys):
    code, out, _ = call(*argv)
    assert code == 1
    assert "usage:" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "--p", "3", "--mu", "0"],
        ["spectrum", "--p", "3", "--mu", "abc"],
        ["spectrum", "--p", "3"],
        ["mu", "--curve", str(FIX / "ordinary5.json"), "--p", "5"],
        ["mu", "--curve", str(FIX / "9tors.json"), "--p", "5"],
        ["mu", "--curve", "/nonexistent.json", "--p", "5"],
        ["divpoly", "--curve", str(FIX / "9tors.json")],
        ["mintors-degree", "--factorization", "4^1"],
        ["sporadic-check", "--N", "35", "--p", "5"],
    ],
)
def test_validation_errors_exit_one(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == "" and err


def test_bad_curve_files(tmp_path):
    cases = {
        "unknown_key": {"field": {"kind": "rational"}, "a": [["0"]] * 4 + [["1"]], "colour": "red"},
        "singular": {"field": {"kind": "rational"}, "a": [["0"]] * 5},
        "short_list": {"field": {"kind": "rational"}, "a": [["0"]] * 4},
        "wrong_tag": {"field": {"kind": "rational"}, "a": [["0"]] * 4 + [["1"]], "j_class": "j1728"},
        "reducible": {"field": {"kind": "radical", "r": 8, "e": 3}, "a": [["0"]] * 4 + [["1"]]},
    }
    for name, doc in cases.items():
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(doc))
        code, _, err = call("mu", "--curve", str(path), "--p", "5")
        assert code == 1, name
        assert err, name


def test_curve_file_roundtrip():
    for path in sorted(FIX.glob("*.json")):
        cf = jsonio.load_curve(path)
        assert jsonio.CurveFile.from_json(cf.to_json()) == cf


def test_oracle_mismatch_exits_two(monkeypatch):
    import supersingular.cli as cli

    monkeypatch.setattr(cli, "oracle_spectrum", lambda *a: [(Fraction(1), 1)])
    code, out, err = call("oracle-compare", "--curve", str(FIX / "9tors.json"), "--p", "3")
    assert code == 2
    assert json.loads(out)["status"] == "FAIL"
    assert "FAIL" in err


def test_inexact_division_exits_two(monkeypatch):
    import supersingular.cli as cli
    from supersingular.errors import InexactDivision

    def boom(*a):
        raise InexactDivision("remainder is nonzero")

    monkeypatch.setattr(cli, "primitive_part", boom)
    code, _, err = call("polygon", "--curve", str(FIX / "9tors.json"), "--p", "3")
    assert code == 2 and "InexactDivision" in err


READERS = {
    "mu": lambda d: jsonio.parse_rat(d["mu"]),
    "polygon": jsonio.polygon_from_json,
    "sporadic-check": jsonio.verdict_from_json,
    "ramification": jsonio.report_from_json,
    "divpoly": jsonio.poly_from_json,
}


@pytest.mark.parametrize("argv", [c for c in CASES if "tsv" not in c], ids=lambda a: " ".join(a[:1] + a[2:3]))
def test_json_documents_reparse(argv):
    code, out, _ = call(*argv)
    assert code == 0
    doc = json.loads(out)
    assert jsonio.dumps(doc) == out
    cmd = argv[0]
    if cmd == "spectrum" and "entries" in doc:
        spectrum = jsonio.spectrum_from_json(doc)
        assert jsonio.spectrum_to_json(spectrum) == {k: doc[k] for k in ("p", "n", "mu", "entries")}
        assert jsonio.regime_to_json(jsonio.regime_from_json(doc["regime"])) == doc["regime"]
        assert jsonio.report_to_json(jsonio.report_from_json(doc["ramification"])) == doc["ramification"]
    elif cmd == "polygon":
        assert jsonio.polygon_to_json(jsonio.polygon_from_json(doc)) == doc
    elif cmd == "sporadic-check":
        assert jsonio.verdict_to_json(jsonio.verdict_from_json(doc)) == doc
    elif cmd == "ramification":
        assert jsonio.report_to_json(jsonio.report_from_json(doc)) == doc
    elif cmd == "divpoly":
        f = jsonio.poly_from_json(doc)
        assert jsonio.poly_to_json(f) == {k: doc[k] for k in ("field", "coeffs")}
    elif cmd == "oracle-compare":
        assert jsonio.multiset_from_json(doc["oracle"]) == jsonio.multiset_from_json(doc["closed_form"])


@pytest.mark.parametrize("argv", CASES, ids=lambda a: " ".join(a[:1] + a[2:3]))
def test_cases_are_deterministic(argv):
    first, second = call(*argv), call(*argv)
    assert first[0] == 0
    assert first == second


def test_svg_output():
    code, out, _ = call("polygon", "--curve", str(FIX / "121c2.json"), "--p", "11", "--format", "svg")
    assert code == 0
    assert out.startswith("<svg") and 'viewBox="0 0 840 480"' in out


def test_svg_is_polygon_only():
    code, _, _ = call("mu", "--curve", str(FIX / "121c2.json"), "--p", "11", "--format", "svg")
    assert code == 1
