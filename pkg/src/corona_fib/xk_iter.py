"""Iterated generalization X^(k)_n of the two-seed product identity.

Levels: -1 is the base sequence G itself, 0 is ``beta G[n] + alpha G[n-1]``,
and each higher level is a product identity over two lower levels::

    X^(k)_n = X^(L)_{n-i+1} X^(R)_i + X^(L)_{n-i} X^(R)_{i-1}

with (L, R) = (m-1, m-1) for k = 2m and (m, m-1) for k = 2m+1. Values are
evaluated at i = n; the other splitting indices are checked, not assumed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from corona_fib.fib_core import FibSequence, RationalLike, parse_rational, term
from corona_fib.report import IdentityReport

META_SEEDS = frozenset({(Fraction(0), Fraction(0)), (Fraction(1), Fraction(1)), (Fraction(-1), Fraction(0))})


def level_operands(k: int) -> tuple[int, int]:
    """(left level, right level) combined to build level k >= 1."""
    if k < 1:
        raise ValueError(f"only levels k >= 1 are built from lower ones, got {k}")
    m, odd = divmod(k, 2)
    return (m, m - 1) if odd else (m - 1, m - 1)


class XkTower:
    """Memoised X^(k)_n over one seed pair."""

    def __init__(self, alpha: RationalLike = 0, beta: RationalLike = 1):
        self.seq = FibSequence(parse_rational(alpha), parse_rational(beta))
        self._cache: dict[tuple[int, int], Fraction] = {}

    @property
    def alpha(self) -> Fraction:
        return self.seq.alpha

    @property
    def beta(self) -> Fraction:
        return self.seq.beta

    def __repr__(self) -> str:
        return f"XkTower(alpha={self.alpha}, beta={self.beta})"

    def value(self, k: int, n: int) -> Fraction:
        if k < -1:
            raise ValueError(f"level must be >= -1, got {k}")
        key = (k, n)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if k == -1:
            v = term(self.seq, n)
        elif k == 0:
            v = self.beta * term(self.seq, n) + self.alpha * term(self.seq, n - 1)
        else:
            v = self.split(k, n, n)
        self._cache[key] = v
        return v

    def split(self, k: int, n: int, i: int) -> Fraction:
        """Right-hand side of level k's product identity at splitting index i."""
        left, right = level_operands(k)
        x = self.value
        return x(left, n - i + 1) * x(right, i) + x(left, n - i) * x(right, i - 1)

    def clear(self) -> None:
        self._cache.clear()


def xk_value(tower: XkTower, k: int, n: int) -> Fraction:
    return tower.value(k, n)


def _tower_params(tower: XkTower, **extra) -> dict:
    return {"alpha": tower.alpha, "beta": tower.beta, **extra}


def check_i_independence(tower: XkTower, k: int, n: int) -> IdentityReport:
    """The level-k split gives one value for every i in 1..n."""
    if k < 1 or n < 1:
        raise ValueError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    rep = IdentityReport("i-independence", _tower_params(tower, k=k, n=n))
    first = tower.split(k, n, 1)
    rep.value = first
    for i in range(1, n + 1):
        rep.cases += 1
        got = tower.split(k, n, i)
        if got != first:
            rep.counterexample = {"i": 1, "value_i": first, "j": i, "value_j": got}
            break
    return rep


def check_fib_in_n(tower: XkTower, k: int, n_max: int) -> IdentityReport:
    """X^(k)_n = X^(k)_{n-1} + X^(k)_{n-2} for 3 <= n <= n_max."""
    if n_max < 3:
        raise ValueError(f"n_max must be >= 3, got {n_max}")
    rep = IdentityReport("fib-in-n", _tower_params(tower, k=k, n_max=n_max))
    x = tower.value
    for n in range(3, n_max + 1):
        rep.cases += 1
        lhs, rhs = x(k, n), x(k, n - 1) + x(k, n - 2)
        if lhs != rhs:
            rep.counterexample = {"k": k, "n": n, "lhs": lhs, "rhs": rhs}
            break
    return rep


@dataclass(frozen=True)
class ComboTerm:
    a: Fraction
    k: int
    n: int


class ComboSpec(tuple):
    """Non-empty tuple of (coefficient, level, index) terms."""

    def __new__(cls, terms: Iterable[ComboTerm | Sequence]):
        items = []
        for t in terms:
            if not isinstance(t, ComboTerm):
                a, k, n = t
                t = ComboTerm(parse_rational(a), int(k), int(n))
            if t.k < -1:
                raise ValueError(f"level must be >= -1, got {t.k}")
            items.append(t)
        if not items:
            raise ValueError("a combination needs at least one term")
        return super().__new__(cls, items)

    @classmethod
    def from_json(cls, text: str) -> ComboSpec:
        """Parse ``[{"a": "2", "k": 1, "n": 4}, ...]``."""
        return cls((item["a"], item["k"], item["n"]) for item in json.loads(text))

    def to_json(self) -> str:
        return json.dumps([{"a": str(t.a), "k": t.k, "n": t.n} for t in self])

    def evaluate(self, tower: XkTower, n_shift: int = 0, k_shift: int = 0) -> Fraction:
        return sum((t.a * tower.value(t.k + k_shift, t.n + n_shift) for t in self), Fraction(0))


def combo_fib_in_n(tower: XkTower, combo: ComboSpec, t_max: int) -> IdentityReport:
    """Y(t) = Y(t-1) + Y(t-2) for 2 <= t <= t_max, Y(t) = sum a_j X^(k_j)_{n_j + t}."""
    if t_max < 2:
        raise ValueError(f"t_max must be >= 2, got {t_max}")
    combo = ComboSpec(combo)
    rep = IdentityReport("combo-fib-in-n", _tower_params(tower, combo=json.loads(combo.to_json()), t_max=t_max))
    y = lambda t: combo.evaluate(tower, n_shift=t)  # noqa: E731
    for t in range(2, t_max + 1):
        rep.cases += 1
        lhs, rhs = y(t), y(t - 1) + y(t - 2)
        if lhs != rhs:
            rep.counterexample = {"t": t, "lhs": lhs, "rhs": rhs}
            break
    return rep


def check_meta_fib(tower: XkTower, k_max: int, n: int) -> IdentityReport:
    """X^(k)_n = X^(k-1)_n + X^(k-2)_n for 2 <= k <= k_max."""
    if k_max < 2 or n < 2:
        raise ValueError(f"need k_max >= 2 and n >= 2, got k_max={k_max}, n={n}")
    rep = IdentityReport("meta-fib", _tower_params(tower, k_max=k_max, n=n))
    x = tower.value
    for k in range(2, k_max + 1):
        rep.cases += 1
        lhs, rhs = x(k, n), x(k - 1, n) + x(k - 2, n)
        if lhs != rhs:
            rep.counterexample = {"k": k, "n": n, "lhs": lhs, "rhs": rhs}
            break
    return rep


def combo_meta_fib(tower: XkTower, combo: ComboSpec, s_max: int) -> IdentityReport:
    """Y(s) = Y(s-1) + Y(s-2) with Y(s) = sum a_j X^(k_j + s)_{n_j}.

    s starts where every level in Y(s-2) is at least 0.
    """
    combo = ComboSpec(combo)
    s_start = max(2, 2 - min(t.k for t in combo))
    rep = IdentityReport("combo-meta-fib", _tower_params(tower, combo=json.loads(combo.to_json()), s_max=s_max))
    y = lambda s: combo.evaluate(tower, k_shift=s)  # noqa: E731
    for s in range(s_start, s_max + 1):
        rep.cases += 1
        lhs, rhs = y(s), y(s - 1) + y(s - 2)
        if lhs != rhs:
            rep.counterexample = {"s": s, "lhs": lhs, "rhs": rhs}
            break
    return rep


def classify_seeds(alpha: RationalLike, beta: RationalLike) -> bool:
    """True iff the seeds make X^(k) Fibonacci in k: (0,0), (1,1) or (-1,0)."""
    return (parse_rational(alpha), parse_rational(beta)) in META_SEEDS


def xk_table(tower: XkTower, k_max: int, n_max: int, n_min: int = 1) -> list[list[Fraction]]:
    """Rows k = -1..k_max, columns n = n_min..n_max."""
    return [[tower.value(k, n) for n in range(n_min, n_max + 1)] for k in range(-1, k_max + 1)]
