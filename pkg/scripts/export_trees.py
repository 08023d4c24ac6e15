"""Write DOT and JSON files for p(P_n), n = 1..n-max, into an output directory.

    python scripts/export_trees.py --n-max 6 --out build/trees
"""

import argparse
from pathlib import Path

from corona_fib.graph_core import expand, export_dot, path_tree


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--out", type=Path, default=Path("build/trees"))
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for n in range(1, args.n_max + 1):
        g = expand(path_tree(n))
        (args.out / f"corona_p{n}.dot").write_text(export_dot(g), encoding="utf-8", newline="\n")
        (args.out / f"corona_p{n}.json").write_text(g.to_json() + "\n", encoding="utf-8", newline="\n")
    print(f"wrote {2 * args.n_max} files to {args.out}")


if __name__ == "__main__":
    main()
