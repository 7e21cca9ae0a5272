"""Write the Newton polygon data (JSON) and SVG renderings for the two
worked curves, plus the fiber polygon of [3]T - beta over a canonical
3-torsion element of the 9-torsion curve."""

import argparse
from fractions import Fraction
from pathlib import Path

from supersingular import jsonio
from supersingular.divpoly import division_polynomial, primitive_part
from supersingular.formalgroup import default_precision, multiplication_series
from supersingular.algebra import field_valuation
from supersingular.poly import NewtonPolygon, newton_polygon
from supersingular.render import polygon_svg

ROOT = Path(__file__).resolve().parent.parent


def fiber_polygon(curve, p, beta_valuation):
    series = multiplication_series(curve, p, default_precision(p))
    pts = [(0, beta_valuation)] + [(k, field_valuation(series[k], p)) for k in range(1, p * p + 1)]
    return NewtonPolygon.from_points(pts)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=ROOT / "figures")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    e121 = jsonio.load_curve(ROOT / "fixtures" / "121c2.json").to_model()
    e9 = jsonio.load_curve(ROOT / "fixtures" / "9tors.json").to_model()
    figures = {
        "psi11_121c2": (newton_polygon(division_polynomial(e121, 11).xpart, 11), "Psi_11, 121c2, p = 11"),
        "psi3_9tors": (newton_polygon(division_polynomial(e9, 3).xpart, 3), "Psi_3, 9-torsion curve, p = 3"),
        "psi9_over_psi3_9tors": (
            newton_polygon(primitive_part(e9, 3, 2).monic(), 3),
            "monic Psi_9 / Psi_3, 9-torsion curve, p = 3",
        ),
        "fiber_9tors": (fiber_polygon(e9, 3, Fraction(2, 5)), "[3]T - beta, v(beta) = 2/5"),
    }
    for name, (poly, title) in figures.items():
        (args.out / f"{name}.json").write_text(jsonio.dumps(jsonio.polygon_to_json(poly)))
        (args.out / f"{name}.svg").write_text(polygon_svg(poly, title=title))
        verts = ", ".join(f"({i}, {jsonio.rat(v)})" for i, v in poly.vertices)
        print(f"{name}\t{verts}")


if __name__ == "__main__":
    main()
