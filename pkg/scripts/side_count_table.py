"""Print lambda, l and r for every labelled vertex of p(P_n).

    python scripts/side_count_table.py --n 8
"""

import argparse

from corona_fib import mis_engine as me
from corona_fib.fib_core import fib
from corona_fib.graph_core import expand, path_tree


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=8)
    args = ap.parse_args()

    g = expand(path_tree(args.n))
    total = me.count_mis(g)
    print(f"n={args.n}  M={total}  F[n+2]={fib(args.n + 2)}")
    print(f"{'x':>4} {'lambda':>8} {'l':>6} {'r':>6}")
    for i in g.central_path:
        for kind, name in (("core", f"v{i}"), ("leaf", f"z{i}")):
            c = me.side_counts(g, i, kind)
            print(f"{name:>4} {c['lambda']:>8} {c['l']:>6} {c['r']:>6}")


if __name__ == "__main__":
    main()
