"""Sweep the prime-power and composite degree gates and report, for each
family, how many levels were ruled out and the tightest margin
(degree lower bound divided by the gonality bound)."""

import argparse

from sympy import primerange

from supersingular.sporadic import Decision, JClass, composite_gate, primepower_gate


def tightest(verdicts):
    best = min(verdicts, key=lambda v: v.degree_lower_bound / v.gonality_bound)
    return best.level, best.degree_lower_bound / best.gonality_bound


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-prime-power", type=int, default=2500)
    ap.add_argument("--max-composite", type=int, default=10000)
    args = ap.parse_args()

    print("family\tlevels\tinconclusive\ttightest_level\tmargin")
    for j in JClass:
        verdicts = []
        for p in primerange(2, args.max_prime_power + 1):
            n = 1
            while p**n <= args.max_prime_power:
                if p**n > 12:
                    verdicts.append(primepower_gate(j, p, n, False))
                n += 1
        bad = sum(v.decision is Decision.INCONCLUSIVE for v in verdicts)
        level, margin = tightest(verdicts)
        print(f"primepower-{j.value}\t{len(verdicts)}\t{bad}\t{level}\t{margin} (~{float(margin):.3f})")

    verdicts = [composite_gate(N) for N in range(13, args.max_composite + 1) if N % 6]
    bad = sum(v.decision is Decision.INCONCLUSIVE for v in verdicts)
    level, margin = tightest(verdicts)
    print(f"composite\t{len(verdicts)}\t{bad}\t{level}\t{margin} (~{float(margin):.3f})")


if __name__ == "__main__":
    main()
