"""Scan a grid of rational seeds and report which ones make X^(k) Fibonacci in k.

    python scripts/meta_seed_scan.py --span 4 --den 3 --k-max 6
"""

import argparse
from fractions import Fraction

from corona_fib.symbolic import solve_meta_system
from corona_fib.xk_iter import XkTower, check_meta_fib, classify_seeds


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--span", type=int, default=4, help="numerators in -span*den..span*den")
    ap.add_argument("--den", type=int, default=3, help="denominators 1..den")
    ap.add_argument("--k-max", type=int, default=6)
    ap.add_argument("--n", type=int, default=5)
    args = ap.parse_args()

    values = sorted({Fraction(p, q) for q in range(1, args.den + 1)
                     for p in range(-args.span * q, args.span * q + 1)})
    hits, disagreements = [], []
    for a in values:
        for b in values:
            ok = check_meta_fib(XkTower(a, b), args.k_max, args.n).passed
            if ok:
                hits.append((a, b))
            if ok != classify_seeds(a, b):
                disagreements.append((a, b))
    print(f"scanned {len(values) ** 2} seed pairs, k <= {args.k_max}, n = {args.n}")
    print("meta-Fibonacci seeds:", ", ".join(f"({a}, {b})" for a, b in hits))
    print("symbolic solutions:  ", ", ".join(f"({a}, {b})" for a, b in sorted(solve_meta_system())))
    print("disagreements with classify_seeds:", disagreements or "none")


if __name__ == "__main__":
    main()
