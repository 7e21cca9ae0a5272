"""Command-line front end.

Exit status: 0 on success, 1 on invalid input or unmet preconditions,
2 on internal inconsistencies (inexact division, oracle disagreement).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from sympy import factorint, isprime

from . import jsonio
from .divpoly import division_polynomial, mu as compute_mu, primitive_part
from .errors import InvalidInput, OracleMismatch, SupersingularError
from .formalgroup import default_precision, multiplication_series, oracle_spectrum
from .poly import newton_polygon
from .render import polygon_svg
from .spectrum import canonical_regime, minimal_torsion_field_degree, ramification_bounds, torsion_spectrum, x_coordinate_spectrum
from .sporadic import JClass, composite_gate, custom_gate, primepower_gate

SUBCOMMANDS = ("divpoly", "mu", "spectrum", "polygon", "oracle-compare", "ramification", "sporadic-check", "mintors-degree")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _prime(s: str) -> int:
    p = int(s)
    if not isprime(p):
        raise argparse.ArgumentTypeError(f"{s} is not prime")
    return p


def _positive(s: str) -> int:
    n = int(s)
    if n < 1:
        raise argparse.ArgumentTypeError(f"{s} is not a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="supersingular", description="Torsion valuations of supersingular elliptic curves.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_, fmt=("json", "tsv")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=fmt, default="json")
        return sp

    sp = add("divpoly", "coefficients of Psi_m, or of the primitive part Psi_{p^n}/Psi_{p^(n-1)}")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--m", type=_positive)
    sp.add_argument("--p", type=_prime)
    sp.add_argument("--n", type=_positive, default=1)

    sp = add("mu", "the canonical-subgroup invariant mu")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--p", type=_prime, required=True)

    for name, help_ in (("spectrum", "valuations of exact-order-p^n elements"), ("ramification", "forced ramification")):
        sp = add(name, help_)
        sp.add_argument("--p", type=_prime, required=True)
        sp.add_argument("--n", type=_positive, default=1)
        sp.add_argument("--mu")
        sp.add_argument("--curve")
        if name == "spectrum":
            sp.add_argument("--x-coords", action="store_true")

    sp = add("polygon", "Newton polygon of the primitive part", fmt=("json", "tsv", "svg"))
    sp.add_argument("--curve", required=True)
    sp.add_argument("--p", type=_prime, required=True)
    sp.add_argument("--n", type=_positive, default=1)
    sp.add_argument("--monic", action="store_true", help="normalize to prod (x - x(P))")

    sp = add("oracle-compare", "closed-form spectrum vs formal-group fiber oracle")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--p", type=_prime, required=True)
    sp.add_argument("--n", type=_positive, default=1)
    sp.add_argument("--precision", type=_positive)

    sp = add("sporadic-check", "degree gate against the gonality bound of X_1(N)")
    sp.add_argument("--N", type=_positive)
    sp.add_argument("--p", type=_prime)
    sp.add_argument("--n", type=_positive, default=1)
    sp.add_argument("--mu")
    sp.add_argument("--curve")
    sp.add_argument("--j-class", choices=[j.value for j in JClass])
    sp.add_argument("--reduction-factor", type=_positive)
    sp.add_argument("--aut-order", type=_positive)

    sp = add("mintors-degree", "degree of a minimal N-torsion point field")
    sp.add_argument("--N", type=_positive)
    sp.add_argument("--factorization", help="e.g. 5^1,7^1")
    return parser


# -- helpers --------------------------------------------------------------------


def _resolve_mu(args):
    """mu from --mu or computed from --curve at --p."""
    if args.mu is not None and args.curve is not None:
        raise InvalidInput("give --mu or --curve, not both")
    if args.mu is not None:
        return jsonio.parse_rat(args.mu)
    if args.curve is not None:
        return compute_mu(jsonio.load_curve(args.curve).to_model(), args.p)
    raise InvalidInput("one of --mu or --curve is required")


def _tsv(rows) -> str:
    return "".join("\t".join(str(c) for c in row) + "\n" for row in rows)


def _emit(args, doc, rows) -> str:
    return jsonio.dumps(doc) if args.format == "json" else _tsv(rows)


# -- subcommands ----------------------------------------------------------------


def cmd_divpoly(args) -> str:
    curve = jsonio.load_curve(args.curve).to_model()
    if (args.m is None) == (args.p is None):
        raise InvalidInput("give exactly one of --m or --p")
    if args.m is not None:
        dp = division_polynomial(curve, args.m)
        doc = {"m": dp.m, "has_psi2_factor": dp.has_psi2_factor, **jsonio.poly_to_json(dp.xpart)}
        f = dp.xpart
    else:
        f = primitive_part(curve, args.p, args.n)
        doc = {"p": args.p, "n": args.n, "primitive_part": True, **jsonio.poly_to_json(f)}
    rows = [("degree", "coefficient")] + [(i, ",".join(jsonio.element_to_json(c))) for i, c in enumerate(f.coeffs)]
    return _emit(args, doc, rows)


def cmd_mu(args) -> str:
    curve = jsonio.load_curve(args.curve).to_model()
    value = compute_mu(curve, args.p)
    return _emit(args, {"mu": jsonio.rat(value)}, [("mu", jsonio.rat(value))])


def cmd_spectrum(args) -> str:
    mu = _resolve_mu(args)
    spectrum = torsion_spectrum(args.p, args.n, mu)
    regime = canonical_regime(args.p, mu)
    report = ramification_bounds(args.p, args.n, regime, spectrum)
    if args.x_coords:
        pairs = x_coordinate_spectrum(spectrum)
        doc = {"p": args.p, "n": args.n, "mu": jsonio.rat(mu), "x_coordinates": jsonio.multiset_to_json(pairs)}
        rows = [("valuation", "count")] + [(jsonio.rat(v), c) for v, c in pairs]
        return _emit(args, doc, rows)
    doc = jsonio.spectrum_to_json(spectrum)
    doc["regime"] = jsonio.regime_to_json(regime)
    doc["ramification"] = jsonio.report_to_json(report)
    rows = [("valuation", "count", "above_canonical", "tag", "layer")] + [
        (jsonio.rat(e.valuation), e.count, str(e.above_canonical).lower(), e.tag, "" if e.layer is None else e.layer)
        for e in spectrum.entries
    ]
    return _emit(args, doc, rows)


def cmd_ramification(args) -> str:
    mu = _resolve_mu(args)
    spectrum = torsion_spectrum(args.p, args.n, mu)
    regime = canonical_regime(args.p, mu)
    doc = jsonio.report_to_json(ramification_bounds(args.p, args.n, regime, spectrum))
    return _emit(args, doc, [(k, "" if v is None else str(v).lower() if isinstance(v, bool) else v) for k, v in sorted(doc.items())])


def cmd_polygon(args) -> str:
    curve = jsonio.load_curve(args.curve).to_model()
    f = primitive_part(curve, args.p, args.n)
    if args.monic:
        f = f.monic()
    poly = newton_polygon(f, args.p)
    if args.format == "svg":
        return polygon_svg(poly, title=f"p={args.p}, n={args.n}{' (monic)' if args.monic else ''}")
    rows = [("index", "valuation")] + [(i, jsonio.rat(v)) for i, v in poly.vertices]
    return _emit(args, jsonio.polygon_to_json(poly), rows)


def cmd_oracle_compare(args) -> str:
    curve = jsonio.load_curve(args.curve).to_model()
    mu = compute_mu(curve, args.p)
    precision = args.precision or default_precision(args.p)
    closed = torsion_spectrum(args.p, args.n, mu).multiset()
    oracle = oracle_spectrum(multiplication_series(curve, args.p, precision), args.p, args.n)
    status = "PASS" if closed == oracle else "FAIL"
    doc = {
        "p": args.p,
        "n": args.n,
        "mu": jsonio.rat(mu),
        "precision": precision,
        "closed_form": jsonio.multiset_to_json(closed),
        "oracle": jsonio.multiset_to_json(oracle),
        "status": status,
    }
    rows = [("source", "valuation", "count")]
    rows += [("closed_form", jsonio.rat(v), c) for v, c in closed]
    rows += [("oracle", jsonio.rat(v), c) for v, c in oracle]
    rows += [("status", status, "")]
    out = _emit(args, doc, rows)
    if status == "FAIL":
        raise OracleMismatch(out)
    return out


def cmd_sporadic_check(args) -> str:
    if args.N is not None:
        if args.p is not None or args.mu is not None or args.curve is not None:
            raise InvalidInput("--N cannot be combined with --p/--mu/--curve")
        verdict = composite_gate(args.N)
    else:
        if args.p is None:
            raise InvalidInput("give --N, or --p with --mu or --curve")
        mu = _resolve_mu(args)
        if args.j_class is not None:
            jclass = JClass(args.j_class)
        elif args.curve is not None:
            jclass = JClass.of_curve(jsonio.load_curve(args.curve).to_model())
        else:
            jclass = JClass.GENERIC
        if args.reduction_factor is not None:
            aut = args.aut_order or jclass.aut_order
            verdict = custom_gate(args.p, args.n, mu, args.reduction_factor, aut)
        else:
            verdict = primepower_gate(jclass, args.p, args.n, canonical_regime(args.p, mu).has_canonical)
    doc = jsonio.verdict_to_json(verdict)
    return _emit(args, doc, sorted(doc.items()))


def _parse_factorization(text: str) -> list:
    pairs = []
    for part in text.split(","):
        base, _, exp = part.strip().partition("^")
        p, n = int(base), int(exp or 1)
        if not isprime(p) or n < 1:
            raise InvalidInput(f"bad factor {part!r}")
        pairs.append((p, n))
    return pairs


def cmd_mintors_degree(args) -> str:
    if (args.N is None) == (args.factorization is None):
        raise InvalidInput("give exactly one of --N or --factorization")
    if args.N is not None:
        if args.N < 2:
            raise InvalidInput("N must be at least 2")
        pairs = sorted(factorint(args.N).items())
    else:
        pairs = _parse_factorization(args.factorization)
    degree = minimal_torsion_field_degree(pairs)
    doc = {"factorization": [[p, n] for p, n in pairs], "degree": degree}
    return _emit(args, doc, [("degree", degree)])


COMMANDS = {
    "divpoly": cmd_divpoly,
    "mu": cmd_mu,
    "spectrum": cmd_spectrum,
    "ramification": cmd_ramification,
    "polygon": cmd_polygon,
    "oracle-compare": cmd_oracle_compare,
    "sporadic-check": cmd_sporadic_check,
    "mintors-degree": cmd_mintors_degree,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        stdout.write(COMMANDS[args.command](args))
    except OracleMismatch as exc:
        stdout.write(str(exc))
        stderr.write("oracle-compare: FAIL\n")
        return exc.exit_code
    except SupersingularError as exc:
        stderr.write(f"{args.command}: {type(exc).__name__}: {exc}\n")
        return exc.exit_code
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
