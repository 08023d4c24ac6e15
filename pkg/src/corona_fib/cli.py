"""Command-line front end.

Exit status: 0 when every check passes, 1 when a counterexample is found,
2 on usage errors (bad flags, malformed rationals, out-of-range sizes).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from corona_fib import graph_core as gc
from corona_fib import mis_engine as me
from corona_fib import symbolic as sy
from corona_fib import xk_iter as xk
from corona_fib.fib_core import IDENTITIES, parse_rational, sweep_identity
from corona_fib.report import IdentityReport, _jsonable, merge

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-7/3" through as a value, like argparse already does for "-7"
        self._negative_number_matcher = re.compile(r"^-(\d+|\d*\.\d+)(/\d+)?$")

    def error(self, message: str):  # argparse already exits 2; keep its message on stderr
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("human", "json", "tsv"), default="human",
                   help="output format on stdout (default: human)")
    p.add_argument("--enum-cap", type=int, default=me.DEFAULT_ENUM_CAP,
                   help=f"vertex limit for exhaustive enumeration (max {me.HARD_ENUM_CAP})")
    p.add_argument("--dp-only", action="store_true",
                   help="skip the enumeration cross-check and lift the size limit it implies")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="corona-fib", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    tree = top.add_parser("tree", help="build expanded path trees").add_subparsers(dest="cmd", required=True)
    b = tree.add_parser("build", parents=[common], help="construct p(P_n) and export it")
    b.add_argument("--n", type=_positive, required=True)
    b.add_argument("--dot", type=Path, help="write Graphviz DOT here")
    b.add_argument("--json", dest="json_path", type=Path, help="write the JSON graph here")

    mis = top.add_parser("mis", help="maximal independent set counts").add_subparsers(dest="cmd", required=True)
    for name in ("count", "enumerate"):
        p = mis.add_parser(name, parents=[common])
        p.add_argument("--n", type=_positive, required=True)
    p = mis.add_parser("lambda", parents=[common], help="MIS containing v_i or z_i, with l and r")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--kind", choices=(me.CORE, me.LEAF), required=True)

    ver = top.add_parser("verify", help="identity sweeps").add_subparsers(dest="cmd", required=True)
    p = ver.add_parser("sanders", parents=[common], help="the three counting results for 3 <= n <= n-max")
    p.add_argument("--n-max", type=int, required=True)
    p = ver.add_parser("identity", parents=[common], help="closed-form Fibonacci identities")
    p.add_argument("--which", choices=IDENTITIES, required=True)
    p.add_argument("--alpha", type=_rational, default=Fraction(0))
    p.add_argument("--beta", type=_rational, default=Fraction(1))
    p.add_argument("--alpha2", type=_rational)
    p.add_argument("--beta2", type=_rational)
    p.add_argument("--n-max", type=_positive, required=True)

    x = top.add_parser("xk", help="the iterated X^(k) tower").add_subparsers(dest="cmd", required=True)
    p = x.add_parser("value", parents=[common])
    _seed_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = x.add_parser("table", parents=[common])
    _seed_args(p)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--n-max", type=_positive, required=True)
    p = x.add_parser("meta", parents=[common], help="X^(k) = X^(k-1) + X^(k-2)")
    _seed_args(p)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    s = top.add_parser("symbolic", help="exact polynomial checks").add_subparsers(dest="cmd", required=True)
    for name in ("eq3", "eq4", "solve-meta"):
        s.add_parser(name, parents=[common])
    return parser


def _seed_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=_rational, default=Fraction(0))
    p.add_argument("--beta", type=_rational, default=Fraction(1))


class Output:
    """Collects what a command prints so each format is rendered once."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.doc: dict[str, Any] = {}
        self.lines: list[str] = []
        self.rows: list[list[Any]] = []

    def render(self) -> str:
        if self.fmt == "json":
            return json.dumps(_jsonable(self.doc), sort_keys=True) + "\n"
        if self.fmt == "tsv":
            return "".join("\t".join(str(_jsonable(c)) for c in row) + "\n" for row in self.rows)
        return "".join(line + "\n" for line in self.lines)


def _report_out(out: Output, rep: IdentityReport) -> int:
    out.doc = rep.to_dict()
    out.lines.append(rep.summary())
    out.rows.append(["identity", "pass", "cases", "counterexample"])
    out.rows.append([rep.identity, rep.passed, rep.cases, json.dumps(_jsonable(rep.counterexample))])
    return EXIT_OK if rep.passed else EXIT_FAIL


def _enum_guard(args, n_core: int) -> None:
    if args.enum_cap > me.HARD_ENUM_CAP or args.enum_cap < 1:
        raise UsageError(f"--enum-cap must be in 1..{me.HARD_ENUM_CAP}")
    if not args.dp_only and 2 * n_core > args.enum_cap:
        raise UsageError(
            f"n={n_core} gives {2 * n_core} vertices, above the enumeration cap of {args.enum_cap}; "
            "pass --dp-only or raise --enum-cap")


def cmd_tree_build(args, out: Output) -> int:
    g = gc.expand(gc.path_tree(args.n))
    if args.dot:
        args.dot.write_text(gc.export_dot(g), encoding="utf-8", newline="\n")
    if args.json_path:
        args.json_path.write_text(g.to_json() + "\n", encoding="utf-8", newline="\n")
    out.doc = {"n": args.n, "vertices": g.graph.vertex_count, "edges": len(g.graph.edges)}
    out.lines.append(f"p(P_{args.n}): {g.graph.vertex_count} vertices, {len(g.graph.edges)} edges")
    out.rows += [["n", "vertices", "edges"], [args.n, g.graph.vertex_count, len(g.graph.edges)]]
    return EXIT_OK


def cmd_mis_count(args, out: Output) -> int:
    _enum_guard(args, args.n)
    g = gc.expand(gc.path_tree(args.n))
    count = me.count_mis(g)
    out.doc = {"n": args.n, "count": count}
    out.rows += [["n", "count", "enumerated"]]
    enumerated = None
    if not args.dp_only:
        enumerated = len(me.enumerate_mis(g, cap=args.enum_cap))
        out.doc["enumerated"] = enumerated
    out.rows.append([args.n, count, "" if enumerated is None else enumerated])
    out.lines.append(f"M(p(P_{args.n})) = {count}" + ("" if enumerated is None else f" (enumeration: {enumerated})"))
    if enumerated is not None and enumerated != count:
        out.doc["counterexample"] = {"n": args.n, "dp": count, "enumerated": enumerated}
        return EXIT_FAIL
    return EXIT_OK


def cmd_mis_enumerate(args, out: Output) -> int:
    if args.dp_only:
        raise UsageError("mis enumerate has no DP-only mode")
    _enum_guard(args, args.n)
    g = gc.expand(gc.path_tree(args.n))
    family = me.enumerate_mis(g, cap=args.enum_cap)
    names = [[gc.vertex_name(g, x) for x in s] for s in family]
    out.doc = {"n": args.n, "count": len(family), "sets": family, "names": names}
    out.lines.append(f"{len(family)} maximal independent sets of p(P_{args.n}):")
    out.lines += ["  {" + ", ".join(s) + "}" for s in names]
    out.rows += [[" ".join(s)] for s in names]
    return EXIT_OK


def cmd_mis_lambda(args, out: Output) -> int:
    if args.n < 3 or not 1 <= args.i <= args.n - 2:
        raise UsageError(f"--i must be on the central path 1..n-2 (n={args.n})")
    _enum_guard(args, args.n)
    g = gc.expand(gc.path_tree(args.n))
    counts = me.side_counts(g, args.i, args.kind)
    x = g.leaf_of(args.i) if args.kind == me.LEAF else g.core_vertex(args.i)
    out.doc = {"n": args.n, "i": args.i, "kind": args.kind, **counts}
    status = EXIT_OK
    if not args.dp_only:
        brute = sum(1 for s in me.enumerate_mis(g, cap=args.enum_cap) if x in s)
        out.doc["enumerated_lambda"] = brute
        if brute != counts["lambda"]:
            out.doc["counterexample"] = {"dp": counts["lambda"], "enumerated": brute}
            status = EXIT_FAIL
    name = gc.vertex_name(g, x)
    out.lines.append(f"{name}: lambda={counts['lambda']} l={counts['l']} r={counts['r']}")
    out.rows += [["n", "i", "kind", "lambda", "l", "r"],
                 [args.n, args.i, args.kind, counts["lambda"], counts["l"], counts["r"]]]
    return status


def cmd_verify_sanders(args, out: Output) -> int:
    if args.n_max < 3:
        raise UsageError("--n-max must be >= 3 (the central path is empty below that)")
    rep = merge("sanders-sweep", (me.verify_sanders_results(n) for n in range(3, args.n_max + 1)),
                {"n_max": args.n_max})
    return _report_out(out, rep)


def cmd_verify_identity(args, out: Output) -> int:
    if args.which != "two-seq" and (args.alpha2 is not None or args.beta2 is not None):
        raise UsageError("--alpha2/--beta2 only apply to --which two-seq")
    rep = sweep_identity(args.which, args.n_max, args.alpha, args.beta, args.alpha2, args.beta2)
    return _report_out(out, rep)


def cmd_xk_value(args, out: Output) -> int:
    if args.k < -1:
        raise UsageError("--k must be >= -1")
    tower = xk.XkTower(args.alpha, args.beta)
    v = tower.value(args.k, args.n)
    out.doc = {"alpha": args.alpha, "beta": args.beta, "k": args.k, "n": args.n, "value": v}
    out.lines.append(f"X^({args.k})_{args.n} = {v}")
    out.rows += [["alpha", "beta", "k", "n", "value"], [args.alpha, args.beta, args.k, args.n, v]]
    return EXIT_OK


def cmd_xk_table(args, out: Output) -> int:
    if args.k_max < -1:
        raise UsageError("--k-max must be >= -1")
    tower = xk.XkTower(args.alpha, args.beta)
    table = xk.xk_table(tower, args.k_max, args.n_max)
    ks = list(range(-1, args.k_max + 1))
    out.doc = {"alpha": args.alpha, "beta": args.beta, "n": list(range(1, args.n_max + 1)),
               "rows": {str(k): row for k, row in zip(ks, table)}}
    out.rows.append(["k"] + list(range(1, args.n_max + 1)))
    out.rows += [[k] + row for k, row in zip(ks, table)]
    width = max(len(str(v)) for row in table for v in row)
    out.lines.append("k\\n  " + " ".join(str(n).rjust(width) for n in range(1, args.n_max + 1)))
    out.lines += [f"{k:>4} " + " ".join(str(v).rjust(width) for v in row) for k, row in zip(ks, table)]
    return EXIT_OK


def cmd_xk_meta(args, out: Output) -> int:
    if args.k_max < 2 or args.n < 2:
        raise UsageError("need --k-max >= 2 and --n >= 2")
    tower = xk.XkTower(args.alpha, args.beta)
    rep = xk.check_meta_fib(tower, args.k_max, args.n)
    status = _report_out(out, rep)
    predicted = xk.classify_seeds(args.alpha, args.beta)
    out.doc["classify_seeds"] = predicted
    out.lines.append(f"seed classification predicts {'PASS' if predicted else 'FAIL'}")
    return status


def cmd_symbolic_eq(args, out: Output) -> int:
    computed, printed, label = (
        (sy.expand_eq3(), sy.EQ3_PRINTED, "X^(1)_n + X^(0)_n")
        if args.cmd == "eq3" else (sy.expand_eq4(), sy.EQ4_PRINTED, "X^(2)_n"))
    ok = computed == printed
    out.doc = {"equation": args.cmd, "form": computed.to_json_obj(),
               "text": [str(c) for c in computed.coeffs], "pass": ok}
    out.lines.append(f"{label} =")
    out.lines += [f"  G[n-{j}]: {c}" if j else f"  G[n]: {c}" for j, c in enumerate(computed.coeffs)]
    out.lines.append(("PASS" if ok else "FAIL") + " matches the published coefficients")
    out.rows.append(["j", "coefficient"])
    out.rows += [[j, str(c)] for j, c in enumerate(computed.coeffs)]
    if not ok:
        out.doc["counterexample"] = {"expected": [str(c) for c in printed.coeffs]}
    return EXIT_OK if ok else EXIT_FAIL


def cmd_symbolic_solve(args, out: Output) -> int:
    sols = sorted(sy.solve_meta_system())
    expected = sorted(xk.META_SEEDS)
    ok = sols == expected
    out.doc = {"solutions": [[a, b] for a, b in sols], "pass": ok}
    out.lines.append("rational seeds with X^(2) = X^(1) + X^(0) coefficientwise:")
    out.lines += [f"  (alpha, beta) = ({a}, {b})" for a, b in sols]
    out.rows.append(["alpha", "beta"])
    out.rows += [[a, b] for a, b in sols]
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    ("tree", "build"): cmd_tree_build,
    ("mis", "count"): cmd_mis_count,
    ("mis", "enumerate"): cmd_mis_enumerate,
    ("mis", "lambda"): cmd_mis_lambda,
    ("verify", "sanders"): cmd_verify_sanders,
    ("verify", "identity"): cmd_verify_identity,
    ("xk", "value"): cmd_xk_value,
    ("xk", "table"): cmd_xk_table,
    ("xk", "meta"): cmd_xk_meta,
    ("symbolic", "eq3"): cmd_symbolic_eq,
    ("symbolic", "eq4"): cmd_symbolic_eq,
    ("symbolic", "solve-meta"): cmd_symbolic_solve,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    out = Output(args.format)
    try:
        status = COMMANDS[(args.group, args.cmd)](args, out)
    except (UsageError, ValueError, IndexError, KeyError) as exc:
        print(f"corona-fib: error: {exc}", file=stderr)
        return EXIT_USAGE
    stdout.write(out.render())
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
