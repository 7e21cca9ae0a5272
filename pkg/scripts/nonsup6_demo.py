"""Levels N = 6 N0 with gcd(6, N0) = 1 and N0 > 1, for E/Q supersingular
at every prime dividing N0 but at neither 2 nor 3.

Only the N0-part of the torsion forces degree: half the minimal
N0-torsion field degree (one quadratic twist to resolve additive
reduction) is compared exactly with 11 N^2 / 840.
"""

import argparse
from fractions import Fraction
from math import gcd

from sympy import factorint

from supersingular.spectrum import minimal_torsion_field_degree
from supersingular.sporadic import gonality_upper_bound


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n0", type=int, default=2000)
    ap.add_argument("--show", type=int, default=10, help="print this many rows")
    args = ap.parse_args()

    print("N0\tN\tlower\tgonality_bound\truled_out")
    failures, rows = [], 0
    for n0 in range(2, args.max_n0 + 1):
        if gcd(n0, 6) != 1:
            continue
        N = 6 * n0
        lower = Fraction(minimal_torsion_field_degree(sorted(factorint(n0).items())), 2)
        bound = gonality_upper_bound(N)
        ok = lower >= bound
        if not ok:
            failures.append(n0)
        if rows < args.show:
            print(f"{n0}\t{N}\t{lower}\t{bound}\t{ok}")
            rows += 1
    print(f"# checked N0 <= {args.max_n0}; not ruled out: {failures or 'none'}")


if __name__ == "__main__":
    main()
