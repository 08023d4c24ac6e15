"""Exact two-seed Fibonacci sequences and the closed-form identity checkers.

All values are :class:`fractions.Fraction`; there is no floating-point path.
Sequences extend to negative indices through ``G[n-2] = G[n] - G[n-1]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Union

from corona_fib.report import IdentityReport

RationalLike = Union[int, str, Fraction]

_RATIONAL_RE = re.compile(r"^\s*[+-]?(\d+(\.\d*)?|\.\d+)(/\d+)?\s*$")


def parse_rational(text: RationalLike) -> Fraction:
    """Parse "3/2", "-1" or "0.25" into an exact Fraction.

    Floats are refused because their binary value is rarely what was meant,
    and so is anything that is not a terminating decimal or a fraction.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool) or isinstance(text, float):
        raise TypeError(f"refusing inexact value {text!r}; pass a string or int")
    if isinstance(text, int):
        return Fraction(text)
    if not _RATIONAL_RE.match(text) or ("." in text and "/" in text):
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


@dataclass(frozen=True)
class FibSequence:
    """G with G[0] = alpha, G[1] = beta and G[n] = G[n-1] + G[n-2] on all of Z."""

    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(1)
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", parse_rational(self.alpha))
        object.__setattr__(self, "beta", parse_rational(self.beta))

    @property
    def seeds(self) -> tuple[Fraction, Fraction]:
        return self.alpha, self.beta

    def __getitem__(self, n: int) -> Fraction:
        return term(self, n)

    def terms(self, start: int, stop: int) -> list[Fraction]:
        return [term(self, n) for n in range(start, stop)]


CLASSICAL = FibSequence(Fraction(0), Fraction(1))


def term(seq: FibSequence, n: int) -> Fraction:
    """G[n], forward or backward from the seeds. O(|n|) on a cache miss."""
    cache = seq._cache
    hit = cache.get(n)
    if hit is not None:
        return hit
    a, b = seq.alpha, seq.beta  # G[0], G[1]
    if n >= 0:
        for _ in range(n):
            a, b = b, a + b
        value = a
    else:
        # walk (G[k], G[k+1]) down to k = n
        for _ in range(-n):
            a, b = b - a, a
        value = a
    cache[n] = value
    return value


def fib(n: int) -> Fraction:
    """Classical F[n] (F[0]=0, F[1]=1), with F[-1]=1, F[-2]=-1, ..."""
    return term(CLASSICAL, n)


def _check_range(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got n={n}, i={i}")


def _report(name: str, params: dict, lhs: Fraction, rhs: Fraction) -> IdentityReport:
    rep = IdentityReport(name, params, cases=1, value=lhs)
    if lhs != rhs:
        rep.counterexample = {"n": params["n"], "i": params["i"], "lhs": lhs, "rhs": rhs}
    return rep


def check_ruggles(seq: FibSequence, n: int, i: int) -> IdentityReport:
    """G[n] = G[n-i+1] F[i] + G[n-i] F[i-1]."""
    _check_range(n, i)
    lhs = term(seq, n)
    rhs = term(seq, n - i + 1) * fib(i) + term(seq, n - i) * fib(i - 1)
    return _report("ruggles", {"alpha": seq.alpha, "beta": seq.beta, "n": n, "i": i}, lhs, rhs)


def check_corollary1(n: int, i: int) -> IdentityReport:
    """F[n] = F[n-i+1] F[i] + F[n-i] F[i-1]."""
    _check_range(n, i)
    lhs = fib(n)
    rhs = fib(n - i + 1) * fib(i) + fib(n - i) * fib(i - 1)
    return _report("corollary1", {"n": n, "i": i}, lhs, rhs)


def check_gg(seq: FibSequence, n: int, i: int) -> IdentityReport:
    """beta G[n] + alpha G[n-1] = G[n-i+1] G[i] + G[n-i] G[i-1]."""
    _check_range(n, i)
    g = lambda m: term(seq, m)  # noqa: E731
    lhs = seq.beta * g(n) + seq.alpha * g(n - 1)
    rhs = g(n - i + 1) * g(i) + g(n - i) * g(i - 1)
    return _report("gg", {"alpha": seq.alpha, "beta": seq.beta, "n": n, "i": i}, lhs, rhs)


def check_two_sequence(seq_a: FibSequence, seq_b: FibSequence, n: int, i: int) -> IdentityReport:
    """beta' G[n] + alpha' G[n-1] = G[n-i+1] G'[i] + G[n-i] G'[i-1].

    ``seq_a`` supplies G, ``seq_b`` supplies G' and its seeds (alpha', beta').
    """
    _check_range(n, i)
    lhs = seq_b.beta * term(seq_a, n) + seq_b.alpha * term(seq_a, n - 1)
    rhs = term(seq_a, n - i + 1) * term(seq_b, i) + term(seq_a, n - i) * term(seq_b, i - 1)
    params = {
        "alpha": seq_a.alpha, "beta": seq_a.beta,
        "alpha2": seq_b.alpha, "beta2": seq_b.beta,
        "n": n, "i": i,
    }
    return _report("two-seq", params, lhs, rhs)


IDENTITIES = ("ruggles", "corollary1", "gg", "two-seq")


def sweep_identity(
    which: str,
    n_max: int,
    alpha: RationalLike = 0,
    beta: RationalLike = 1,
    alpha2: RationalLike | None = None,
    beta2: RationalLike | None = None,
) -> IdentityReport:
    """Check ``which`` for every 1 <= i <= n <= n_max, stopping at the first failure."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    seq = FibSequence(parse_rational(alpha), parse_rational(beta))
    check: Callable[[int, int], IdentityReport]
    if which == "ruggles":
        check = lambda n, i: check_ruggles(seq, n, i)  # noqa: E731
    elif which == "corollary1":
        check = check_corollary1
    elif which == "gg":
        check = lambda n, i: check_gg(seq, n, i)  # noqa: E731
    elif which == "two-seq":
        other = FibSequence(
            parse_rational(alpha if alpha2 is None else alpha2),
            parse_rational(beta if beta2 is None else beta2),
        )
        check = lambda n, i: check_two_sequence(seq, other, n, i)  # noqa: E731
    else:
        raise KeyError(f"unknown identity {which!r}; choose from {', '.join(IDENTITIES)}")

    params: dict = {"n_max": n_max}
    if which != "corollary1":
        params.update(alpha=seq.alpha, beta=seq.beta)
    if which == "two-seq":
        params.update(alpha2=other.alpha, beta2=other.beta)
    total = IdentityReport(which, params)
    for n in range(1, n_max + 1):
        for i in range(1, n + 1):
            rep = check(n, i)
            total.cases += 1
            if not rep.passed:
                total.counterexample = rep.counterexample
                return total
    return total


def linear_combination(pairs: Iterable[tuple[Fraction, FibSequence]]) -> FibSequence:
    """Sequence whose seeds are sum(a * seeds) over ``pairs``."""
    alpha = beta = Fraction(0)
    for a, seq in pairs:
        alpha += a * seq.alpha
        beta += a * seq.beta
    return FibSequence(alpha, beta)
