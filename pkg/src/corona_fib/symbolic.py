"""Integer polynomials in the seeds (alpha, beta) and linear forms over G.

Enough algebra to expand the first two levels of the X^(k) tower in terms of
G[n], G[n-1], G[n-2], derive the seed conditions for X^(2) = X^(1) + X^(0),
and solve them over the rationals.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest
from math import gcd
from typing import Iterable, Mapping

from corona_fib.fib_core import FibSequence, term

Monomial = tuple[int, int]  # (degree in alpha, degree in beta)


class BivarPoly:
    """Integer polynomial in alpha and beta, stored as {(da, db): coeff}.

    Zero coefficients are never stored, so equal polynomials have equal dicts.
    Printing uses ``a`` for alpha and ``b`` for beta, highest total degree
    first and, within a degree, ascending powers of ``a``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        for (da, db), c in (terms or {}).items():
            if da < 0 or db < 0:
                raise ValueError(f"negative exponent in monomial {(da, db)}")
            if c:
                clean[(int(da), int(db))] = clean.get((da, db), 0) + int(c)
        self._terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def const(cls, c: int) -> BivarPoly:
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BivarPoly.const(other)
        return isinstance(other, BivarPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    @staticmethod
    def _coerce(x) -> BivarPoly:
        return x if isinstance(x, BivarPoly) else BivarPoly.const(x)

    def __add__(self, other) -> BivarPoly:
        out = dict(self._terms)
        for m, c in self._coerce(other)._terms.items():
            out[m] = out.get(m, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BivarPoly:
        return BivarPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> BivarPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> BivarPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> BivarPoly:
        other = self._coerce(other)
        out: dict[Monomial, int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BivarPoly:
        if e < 0:
            raise ValueError("negative power")
        out = BivarPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def evaluate(self, alpha, beta) -> Fraction:
        alpha, beta = Fraction(alpha), Fraction(beta)
        return sum((c * alpha**da * beta**db for (da, db), c in self._terms.items()), Fraction(0))

    def substitute_alpha(self, repl: BivarPoly) -> BivarPoly:
        """Replace alpha by ``repl`` (a polynomial in either variable)."""
        out = BivarPoly()
        for (da, db), c in self._terms.items():
            out = out + c * repl**da * BETA**db
        return out

    def degree_in_alpha(self) -> int:
        return max((da for da, _ in self._terms), default=-1)

    def coefficient_in_alpha(self, d: int) -> BivarPoly:
        """Coefficient of alpha**d, as a polynomial in beta."""
        return BivarPoly({(0, db): c for (da, db), c in self._terms.items() if da == d})

    def beta_coefficients(self) -> list[int]:
        """Dense coefficients (constant first) of a polynomial in beta only."""
        if any(da for da, _ in self._terms):
            raise ValueError(f"{self} still depends on alpha")
        top = max((db for _, db in self._terms), default=-1)
        return [self._terms.get((0, d), 0) for d in range(top + 1)]

    def monomial_content(self) -> Monomial:
        """Largest (da, db) dividing every term; (0, 0) for the zero polynomial."""
        if not self._terms:
            return (0, 0)
        return min(da for da, _ in self._terms), min(db for _, db in self._terms)

    def divide_monomial(self, m: Monomial) -> BivarPoly:
        da0, db0 = m
        if any(da < da0 or db < db0 for da, db in self._terms):
            raise ValueError(f"{self} is not divisible by a^{da0}*b^{db0}")
        return BivarPoly({(da - da0, db - db0): c for (da, db), c in self._terms.items()})

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda mc: (-(mc[0][0] + mc[0][1]), mc[0][0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (da, db), c in self.sorted_terms():
            factors = [f"a^{da}" if da > 1 else "a"] * (da > 0) + [f"b^{db}" if db > 1 else "b"] * (db > 0)
            mono = "*".join(factors)
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"BivarPoly({self})"

    def to_json_obj(self) -> list[dict]:
        return [{"da": da, "db": db, "c": str(c)} for (da, db), c in self.sorted_terms()]

    @classmethod
    def from_json_obj(cls, items: Iterable[Mapping]) -> BivarPoly:
        out = cls()
        for it in items:
            out = out + cls({(int(it["da"]), int(it["db"])): int(it["c"])})
        return out


ALPHA = BivarPoly({(1, 0): 1})
BETA = BivarPoly({(0, 1): 1})
ZERO = BivarPoly()
ONE = BivarPoly.const(1)


@lru_cache(maxsize=None)
def g_at(index: int) -> BivarPoly:
    """G[index] as a polynomial in the seeds (G[0] = alpha, G[1] = beta)."""
    a, b = ALPHA, BETA
    if index >= 0:
        for _ in range(index):
            a, b = b, a + b
    else:
        for _ in range(-index):
            a, b = b - a, a
    return a


class GLinearForm:
    """sum_j coeffs[j] * G[n - j] with polynomial coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[BivarPoly | int] = ()):
        cs = [BivarPoly._coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[BivarPoly, ...] = tuple(cs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GLinearForm) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __getitem__(self, j: int) -> BivarPoly:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else ZERO

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: GLinearForm) -> GLinearForm:
        return GLinearForm(p + q for p, q in zip_longest(self.coeffs, other.coeffs, fillvalue=ZERO))

    def __neg__(self) -> GLinearForm:
        return GLinearForm(-p for p in self.coeffs)

    def __sub__(self, other: GLinearForm) -> GLinearForm:
        return self + (-other)

    def scale(self, p: BivarPoly | int) -> GLinearForm:
        return GLinearForm(p * c for c in self.coeffs)

    def shift(self, by: int = 1) -> GLinearForm:
        """The same form with n replaced by n - by."""
        if by < 0:
            raise ValueError("only downward shifts are representable in the G[n-j] basis")
        return GLinearForm([ZERO] * by + list(self.coeffs))

    def at(self, n: int) -> BivarPoly:
        """Substitute a concrete index n, giving a polynomial in the seeds."""
        return sum((c * g_at(n - j) for j, c in enumerate(self.coeffs)), ZERO)

    def evaluate(self, alpha, beta, n: int) -> Fraction:
        seq = FibSequence(Fraction(alpha), Fraction(beta))
        return sum((c.evaluate(alpha, beta) * term(seq, n - j) for j, c in enumerate(self.coeffs)), Fraction(0))

    def collapse(self) -> GLinearForm:
        """Rewrite onto G[n], G[n-1] only, using G[m-2] = G[m] - G[m-1]."""
        cs = list(self.coeffs)
        while len(cs) > 2:
            c = cs.pop()
            j = len(cs)  # c multiplied G[n - j - ... ] at position j
            cs[j - 2] = cs[j - 2] + c
            cs[j - 1] = cs[j - 1] - c
        return GLinearForm(cs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        names = ["G[n]"] + [f"G[n-{j}]" for j in range(1, len(self.coeffs))]
        return " + ".join(f"({c})*{name}" for c, name in zip(self.coeffs, names) if c)

    def __repr__(self) -> str:
        return f"GLinearForm({self})"

    def to_json_obj(self) -> list[list[dict]]:
        return [c.to_json_obj() for c in self.coeffs]


def x0_symbolic(shift: int = 0) -> GLinearForm:
    """X^(0)_{n+shift} = beta G[n+shift] + alpha G[n+shift-1], for shift <= 0."""
    if shift > 0:
        raise ValueError(f"positive shift {shift} is not supported")
    return GLinearForm([BETA, ALPHA]).shift(-shift)


def expand_eq3() -> GLinearForm:
    """X^(1)_n + X^(0)_n with X^(1)_n = beta X^(0)_n + alpha X^(0)_{n-1}."""
    x1 = x0_symbolic(0).scale(BETA) + x0_symbolic(-1).scale(ALPHA)
    return x1 + x0_symbolic(0)


def expand_eq4() -> GLinearForm:
    """X^(2)_n = X^(0)_1 X^(0)_n + X^(0)_0 X^(0)_{n-1}."""
    x0 = x0_symbolic(0)
    return x0.scale(x0.at(1)) + x0_symbolic(-1).scale(x0.at(0))


def xk_symbolic(k: int) -> GLinearForm:
    """X^(k)_n for any level k >= -1, evaluated at splitting index i = n."""
    from corona_fib.xk_iter import level_operands

    if k == -1:
        return GLinearForm([ONE])
    if k == 0:
        return x0_symbolic(0)
    left, right = level_operands(k)
    lf, rf = xk_symbolic(left), xk_symbolic(right)
    return rf.scale(lf.at(1)) + rf.shift(1).scale(lf.at(0))


# The same coefficients written exactly as they are usually printed.
EQ3_PRINTED = GLinearForm([BETA + BETA**2, ALPHA + 2 * ALPHA * BETA, ALPHA**2])
EQ4_PRINTED = GLinearForm([
    BETA**3 + ALPHA**2 * BETA,
    ALPHA**3 + 3 * ALPHA * BETA**2 - ALPHA**2 * BETA,
    BETA * ALPHA**2 + ALPHA**2 * BETA - ALPHA**3,
])
# "1 + b = b^2 + a^2", "1 + 2b = a^2 + 3b^2 - ab", "2b - a = 1", as lhs - rhs.
META_EQUATIONS_PRINTED = (
    ONE + BETA - BETA**2 - ALPHA**2,
    ONE + 2 * BETA - ALPHA**2 - 3 * BETA**2 + ALPHA * BETA,
    2 * BETA - ALPHA - ONE,
)


def derive_meta_system() -> list[BivarPoly]:
    """Coefficient differences of X^(2)_n - (X^(1)_n + X^(0)_n) on G[n], G[n-1], G[n-2]."""
    diff = expand_eq4() - expand_eq3()
    return [diff[j] for j in range(3)]


def rational_roots(coeffs: list[int]) -> list[Fraction]:
    """Distinct rational roots of sum coeffs[d] x**d (integer coefficients)."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ValueError("the zero polynomial has every number as a root")
    roots: set[Fraction] = set()
    if cs[0] == 0:
        roots.add(Fraction(0))
        while cs[0] == 0:
            cs.pop(0)
    if len(cs) == 1:
        return sorted(roots)
    lead, const = abs(cs[-1]), abs(cs[0])
    for p in _divisors(const):
        for q in _divisors(lead):
            if gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if _horner(cs, cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _divisors(m: int) -> list[int]:
    small = [d for d in range(1, int(m**0.5) + 1) if m % d == 0]
    return sorted(set(small + [m // d for d in small]))


def _horner(cs: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _common_beta_roots(polys: Iterable[BivarPoly]) -> list[Fraction] | None:
    """Rational beta that zero every poly; None means "every beta" (all zero)."""
    live = [p for p in polys if p]
    if not live:
        return None
    candidates = rational_roots(live[0].beta_coefficients())
    return [b for b in candidates if all(p.evaluate(0, b) == 0 for p in live)]


def solve_meta_system(system: list[BivarPoly] | None = None) -> set[tuple[Fraction, Fraction]]:
    """All rational (alpha, beta) that zero every polynomial in ``system``.

    Splits on alpha = 0 versus alpha != 0. In the second branch each equation
    is divided by its power of alpha; one that is then linear in alpha with a
    constant leading coefficient eliminates alpha, leaving univariate
    equations in beta for the rational root test.
    """
    system = derive_meta_system() if system is None else list(system)
    found: set[tuple[Fraction, Fraction]] = set()

    at_zero = [p.substitute_alpha(ZERO) for p in system]
    betas = _common_beta_roots(at_zero)
    if betas is None:
        raise ValueError("alpha = 0 leaves beta unconstrained; solution set is infinite")
    found.update((Fraction(0), b) for b in betas)

    reduced = [p.divide_monomial((p.monomial_content()[0], 0)) for p in system]
    linear = next(
        (p for p in reduced if p.degree_in_alpha() == 1 and p.coefficient_in_alpha(1).beta_coefficients()[1:] == []),
        None,
    )
    if linear is None:
        raise NotImplementedError("no equation is linear in alpha with a constant leading coefficient")
    lead = linear.coefficient_in_alpha(1).beta_coefficients()[0]
    rest = linear.coefficient_in_alpha(0)
    # alpha = -rest / lead; scale everything by lead**deg so it stays integral
    for b in _solve_eliminated(reduced, lead, rest):
        a = -rest.evaluate(0, b) / lead
        if a != 0 and all(p.evaluate(a, b) == 0 for p in system):
            found.add((a, b))
    return found


def _solve_eliminated(reduced: list[BivarPoly], lead: int, rest: BivarPoly) -> list[Fraction]:
    # Substitute alpha = -rest/lead after multiplying each equation through by
    # lead**deg_alpha, keeping coefficients integral.
    eliminated = []
    for p in reduced:
        d = max(p.degree_in_alpha(), 0)
        scaled = BivarPoly()
        for (da, db), c in p.terms.items():
            scaled = scaled + c * (-rest) ** da * BivarPoly.const(lead) ** (d - da) * BETA**db
        eliminated.append(scaled)
    betas = _common_beta_roots(eliminated)
    if betas is None:
        raise ValueError("elimination leaves beta unconstrained; solution set is infinite")
    return betas


def dump_form(form: GLinearForm) -> str:
    return json.dumps(form.to_json_obj())
