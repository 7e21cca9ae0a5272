"""JSON encodings.  Rationals are always strings "num/den" (infinity is
"inf"), so every document is exact and byte-stable."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .algebra import INF, RATIONAL, FieldDescriptor, FieldElement, as_rational
from .curve import CurveModel
from .errors import InvalidInput, SupersingularError
from .poly import NewtonPolygon, Poly
from .spectrum import CanonicalRegime, RamificationReport, SpectrumEntry, ValuationSpectrum
from .sporadic import Decision, JClass, SporadicVerdict

__all__ = [
    "dumps",
    "rat",
    "parse_rat",
    "CurveFile",
    "load_curve",
]


class CurveFileError(InvalidInput):
    pass


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def rat(x) -> str:
    if x is INF:
        return "inf"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s):
    if isinstance(s, bool):
        raise InvalidInput(f"not a rational: {s!r}")
    try:
        return as_rational(s)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InvalidInput(f"not a rational: {s!r}") from exc


# -- fields and elements ----------------------------------------------------------


def descriptor_to_json(d: FieldDescriptor) -> dict:
    if d.kind == "rational":
        return {"kind": "rational"}
    return {"kind": "radical", "r": d.r, "e": d.e}


def descriptor_from_json(doc) -> FieldDescriptor:
    if not isinstance(doc, dict):
        raise CurveFileError("field must be an object")
    kind = doc.get("kind")
    if kind == "rational":
        if set(doc) != {"kind"}:
            raise CurveFileError(f"unexpected keys in rational field: {sorted(set(doc) - {'kind'})}")
        return RATIONAL
    if kind == "radical":
        if set(doc) != {"kind", "r", "e"}:
            raise CurveFileError("radical field needs exactly the keys kind, r, e")
        r, e = doc["r"], doc["e"]
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (r, e)):
            raise CurveFileError("r and e must be integers")
        return FieldDescriptor.radical(r, e)
    raise CurveFileError(f"unknown field kind {kind!r}")


def element_to_json(x: FieldElement) -> list:
    return [rat(c) for c in x.coords]


def element_from_json(d: FieldDescriptor, doc) -> FieldElement:
    if not isinstance(doc, list) or not doc or len(doc) > d.e:
        raise CurveFileError(f"field element must be a list of 1..{d.e} coordinates, got {doc!r}")
    coords = []
    for c in doc:
        v = parse_rat(c)
        if v is INF:
            raise CurveFileError("coordinates must be finite")
        coords.append(v)
    return FieldElement(d, coords)


def poly_to_json(f: Poly) -> dict:
    return {"field": descriptor_to_json(f.descriptor), "coeffs": [element_to_json(c) for c in f.coeffs]}


def poly_from_json(doc) -> Poly:
    d = descriptor_from_json(doc["field"])
    return Poly(d, [element_from_json(d, c) for c in doc["coeffs"]])


# -- curves -----------------------------------------------------------------------

_CURVE_KEYS = {"field", "a", "label", "j_class"}


@dataclass(frozen=True)
class CurveFile:
    descriptor: FieldDescriptor
    a: tuple
    label: Optional[str] = None
    j_class: Optional[JClass] = None

    def to_model(self) -> CurveModel:
        return CurveModel(*self.a, label=self.label)

    @classmethod
    def from_json(cls, doc) -> "CurveFile":
        if not isinstance(doc, dict):
            raise CurveFileError("curve file must hold a JSON object")
        unknown = set(doc) - _CURVE_KEYS
        if unknown:
            raise CurveFileError(f"unknown keys in curve file: {sorted(unknown)}")
        if "field" not in doc or "a" not in doc:
            raise CurveFileError("curve file needs 'field' and 'a'")
        d = descriptor_from_json(doc["field"])
        a = doc["a"]
        if not isinstance(a, list) or len(a) != 5:
            raise CurveFileError("'a' must list the five invariants [a1, a2, a3, a4, a6]")
        elems = tuple(element_from_json(d, x) for x in a)
        label = doc.get("label")
        if label is not None and not isinstance(label, str):
            raise CurveFileError("label must be a string")
        j_class = doc.get("j_class")
        if j_class is not None:
            try:
                j_class = JClass(j_class)
            except ValueError as exc:
                raise CurveFileError(f"unknown j_class {j_class!r}") from exc
        cf = cls(d, elems, label, j_class)
        model = cf.to_model()  # validates nonsingularity
        if j_class is not None and JClass.of_curve(model) is not j_class:
            raise CurveFileError(f"j_class tag {j_class.value} contradicts the model ({JClass.of_curve(model).value})")
        return cf

    def to_json(self) -> dict:
        doc = {"field": descriptor_to_json(self.descriptor), "a": [element_to_json(x) for x in self.a]}
        if self.label is not None:
            doc["label"] = self.label
        if self.j_class is not None:
            doc["j_class"] = self.j_class.value
        return doc


def load_curve(path) -> CurveFile:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise CurveFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CurveFileError(f"{path} is not valid JSON: {exc}") from exc
    try:
        return CurveFile.from_json(doc)
    except SupersingularError:
        raise
    except (ValueError, TypeError) as exc:
        raise CurveFileError(str(exc)) from exc


# -- polygons, spectra, reports, verdicts -----------------------------------------


def polygon_to_json(poly: NewtonPolygon) -> dict:
    return {
        "vertices": [[i, rat(v)] for i, v in poly.vertices],
        "segments": [[rat(s), length] for s, length in poly.segments],
    }


def polygon_from_json(doc) -> NewtonPolygon:
    return NewtonPolygon(
        tuple((int(i), parse_rat(v)) for i, v in doc["vertices"]),
        tuple((parse_rat(s), int(length)) for s, length in doc["segments"]),
    )


def multiset_to_json(pairs) -> list:
    return [[rat(v), c] for v, c in pairs]


def multiset_from_json(doc) -> list:
    return [(parse_rat(v), c) for v, c in doc]


def regime_to_json(r: CanonicalRegime) -> dict:
    return {"kind": r.kind, "s": r.s}


def regime_from_json(doc) -> CanonicalRegime:
    return CanonicalRegime(doc["kind"], doc["s"])


def spectrum_to_json(spectrum: ValuationSpectrum) -> dict:
    return {
        "p": spectrum.p,
        "n": spectrum.n,
        "mu": rat(spectrum.mu),
        "entries": [
            {
                "valuation": rat(e.valuation),
                "count": e.count,
                "above_canonical": e.above_canonical,
                "tag": e.tag,
                "layer": e.layer,
            }
            for e in spectrum.entries
        ],
    }


def spectrum_from_json(doc) -> ValuationSpectrum:
    entries = tuple(
        SpectrumEntry(parse_rat(e["valuation"]), e["count"], e["above_canonical"], e["tag"], e["layer"])
        for e in doc["entries"]
    )
    return ValuationSpectrum(doc["p"], doc["n"], parse_rat(doc["mu"]), entries)


def report_to_json(r: RamificationReport) -> dict:
    return {
        "e_P_lower": r.e_P_lower,
        "e_P_strict": r.e_P_strict,
        "e_p_lower": r.e_p_lower,
        "e_p_divisibility": r.e_p_divisibility,
        "lcm_denominators": r.lcm_denominators,
    }


def report_from_json(doc) -> RamificationReport:
    return RamificationReport(**doc)


def verdict_to_json(v: SporadicVerdict) -> dict:
    return {
        "decision": v.decision.value,
        "degree_lower_bound": rat(v.degree_lower_bound),
        "gonality_bound": rat(v.gonality_bound),
        "rationale": v.rationale,
        "level": v.level,
    }


def verdict_from_json(doc) -> SporadicVerdict:
    return SporadicVerdict(
        Decision(doc["decision"]),
        parse_rat(doc["degree_lower_bound"]),
        parse_rat(doc["gonality_bound"]),
        doc["rationale"],
        doc["level"],
    )
