"""Exit criteria for the whole package, one test per criterion.

Each test records a PASS/FAIL line in RESULTS (shown in pytest's terminal
summary) and enforces its wall-clock budget. Run directly with
``python tests/test_acceptance.py`` to print the lines without pytest.
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager
from fractions import Fraction

from corona_fib import mis_engine as me
from corona_fib import symbolic as sy
from corona_fib.fib_core import FibSequence, fib, sweep_identity, term
from corona_fib.graph_core import expand, path_tree, random_tree
from corona_fib.xk_iter import (
    XkTower,
    check_fib_in_n,
    check_i_independence,
    check_meta_fib,
    classify_seeds,
)

RESULTS: list[str] = []

GRID_VALUES = (-2, -1, 0, Fraction(1, 2), 1, 2)
SEED_GRID = [(a, b) for a in GRID_VALUES for b in GRID_VALUES]


@contextmanager
def criterion(number: int, title: str, budget_s: float):
    start = time.perf_counter()
    try:
        yield
    except AssertionError as exc:
        elapsed = time.perf_counter() - start
        RESULTS.append(f"AC{number} FAIL {title} ({elapsed:.2f}s): {exc}")
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < budget_s
    RESULTS.append(f"AC{number} {'PASS' if ok else 'FAIL'} {title} ({elapsed:.2f}s, budget {budget_s:g}s)")
    assert ok, f"AC{number} took {elapsed:.2f}s, budget {budget_s}s"


def _random_rational(rng: random.Random, span: int = 20, den: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def test_ac1_corona_count_law():
    with criterion(1, "count(p(P_n)) = F[n+2], 1<=n<=60; enumeration agrees n<=10", 10):
        for n in range(1, 61):
            got = me.count_mis(expand(path_tree(n)))
            assert got == fib(n + 2), f"n={n}: {got} != {fib(n + 2)}"
        for n in range(1, 11):
            assert len(me.enumerate_mis(expand(path_tree(n)))) == fib(n + 2), f"enumeration n={n}"


def test_ac2_oracle_equivalence():
    with criterion(2, "DP = enumeration on 100 random trees (<=24 vertices) and p(P_n), n<=10", 60):
        rng = random.Random(20261017)
        mismatches = []
        for trial in range(100):
            n = rng.randint(1, 24)
            t = random_tree(n, rng.randrange(2**32))
            if me.count_mis(t) != len(me.enumerate_mis(t)):
                mismatches.append((trial, n, t.edges))
        for n in range(1, 11):
            g = expand(path_tree(n))
            if me.count_mis(g) != len(me.enumerate_mis(g)):
                mismatches.append(("corona", n))
        assert not mismatches, f"mismatches: {mismatches[:3]}"


def test_ac3_sanders_three_results():
    with criterion(3, "three counting results for 3<=n<=15, every central i", 30):
        for n in range(3, 16):
            g = expand(path_tree(n))
            total = me.count_mis(g)
            for i in g.central_path:
                lv, rv = me.left_count(g, i, "core"), me.right_count(g, i, "core")
                lz, rz = me.left_count(g, i, "leaf"), me.right_count(g, i, "leaf")
                lam_v = me.count_mis_containing(g, g.core_vertex(i))
                lam_z = me.count_mis_containing(g, g.leaf_of(i))
                where = f"n={n}, i={i}"
                assert lam_z + lam_v == total, where
                assert lam_v == lv * rv and lam_z == lz * rz, where
                assert (lv, rv) == (fib(n - i), fib(i + 1)), where
                assert (lz, rz) == (fib(n - i + 1), fib(i + 2)), where
            assert me.verify_sanders_results(n).passed


def test_ac4_identity_sweeps():
    with criterion(4, "Corollary 1 n<=30; Thm 1/Thm 2 for 25 seed pairs n<=25; two-sequence 10 combos n<=20", 30):
        rep = sweep_identity("corollary1", 30)
        assert rep.passed and rep.cases == 465, rep.summary()
        rng = random.Random(7)
        grid = [(0, 1), (2, 1), (1, 1), (-1, 0), (0, 0), (1, 3), (-2, 2), (Fraction(1, 2), -1), (3, -5), (-1, -1)]
        pairs = grid + [(_random_rational(rng), _random_rational(rng)) for _ in range(15)]
        assert len(pairs) == 25
        for a, b in pairs:
            for which in ("ruggles", "gg"):
                rep = sweep_identity(which, 25, a, b)
                assert rep.passed and rep.cases == 325, rep.summary()
        combos = [((2, 1), (1, 3)), ((0, 1), (2, -1)), ((1, 1), (-1, 0)), ((Fraction(3, 2), -2), (Fraction(1, 3), 4))]
        combos += [((_random_rational(rng), _random_rational(rng)), (_random_rational(rng), _random_rational(rng)))
                   for _ in range(6)]
        for (a, b), (a2, b2) in combos:
            rep = sweep_identity("two-seq", 20, a, b, a2, b2)
            assert rep.passed and rep.cases == 210, rep.summary()


def test_ac5_xk_tower():
    with criterion(5, "X^(k): i-independence and Fibonacci-in-n for k<=6, n<=15 on the grid; ladder lines k=1..3", 30):
        for a, b in SEED_GRID:
            t = XkTower(a, b)
            for k in range(1, 7):
                for n in range(1, 16):
                    rep = check_i_independence(t, k, n)
                    assert rep.passed, rep.summary()
            for k in range(0, 7):
                rep = check_fib_in_n(t, k, 15)
                assert rep.passed, rep.summary()
            seq = FibSequence(a, b)
            g = lambda m: term(seq, m)  # noqa: E731
            x0 = lambda m: b * g(m) + a * g(m - 1)  # noqa: E731
            x1 = lambda m: x0(m) * g(1) + x0(m - 1) * g(0)  # noqa: E731
            for n in range(1, 16):
                for i in range(1, n + 1):
                    assert t.value(1, n) == x0(n - i + 1) * g(i) + x0(n - i) * g(i - 1)
                    assert t.value(2, n) == x0(n - i + 1) * x0(i) + x0(n - i) * x0(i - 1)
                    assert t.value(3, n) == x1(n - i + 1) * x0(i) + x1(n - i) * x0(i - 1)


def test_ac6_meta_fibonacci_both_directions():
    with criterion(6, "meta-Fibonacci holds exactly for (0,0),(1,1),(-1,0); fails for (0,1),(2,1), 50 random", 30):
        solutions = [(0, 0), (1, 1), (-1, 0)]
        for a, b in solutions:
            assert check_meta_fib(XkTower(a, b), 5, 5).passed, (a, b)
            assert classify_seeds(a, b)
        rng = random.Random(4)
        others = [(0, 1), (2, 1)]
        while len(others) < 52:
            pair = (_random_rational(rng), _random_rational(rng))
            if pair not in {(Fraction(a), Fraction(b)) for a, b in solutions}:
                others.append(pair)
        for a, b in others:
            assert not check_meta_fib(XkTower(a, b), 5, 5).passed, (a, b)
            assert not classify_seeds(a, b)


def test_ac7_symbolic_reproduction():
    with criterion(7, "Eqs. for X^(1)+X^(0) and X^(2) match printed coefficients; solutions = {(0,0),(1,1),(-1,0)}", 5):
        assert sy.expand_eq3() == sy.EQ3_PRINTED
        assert sy.expand_eq4() == sy.EQ4_PRINTED
        assert [str(c) for c in sy.expand_eq3().coeffs] == ["b^2 + b", "2*a*b + a", "a^2"]
        assert [str(c) for c in sy.expand_eq4().coeffs] == ["b^3 + a^2*b", "3*a*b^2 - a^2*b + a^3", "2*a^2*b - a^3"]
        expected = {(Fraction(0), Fraction(0)), (Fraction(1), Fraction(1)), (Fraction(-1), Fraction(0))}
        assert sy.solve_meta_system() == expected


def test_ac8_cross_module_coherence():
    with criterion(8, "symbolic forms = numeric tower at 10 seeds, n in [3,20]; X^(k)_n(0,1) = F[n]", 10):
        rng = random.Random(8)
        seeds = [(2, 1), (1, 1), (0, 1), (-1, 0), (0, 0)] + [(_random_rational(rng), _random_rational(rng)) for _ in range(5)]
        eq3, eq4 = sy.expand_eq3(), sy.expand_eq4()
        for a, b in seeds:
            t = XkTower(a, b)
            for n in range(3, 21):
                assert eq3.evaluate(a, b, n) == t.value(1, n) + t.value(0, n), (a, b, n)
                assert eq4.evaluate(a, b, n) == t.value(2, n), (a, b, n)
                assert sy.x0_symbolic(0).evaluate(a, b, n) == t.value(0, n), (a, b, n)
        classical = XkTower(0, 1)
        for k in range(0, 7):
            for n in range(1, 21):
                assert classical.value(k, n) == fib(n), (k, n)


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_ac") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
