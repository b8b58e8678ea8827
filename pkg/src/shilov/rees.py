"""Rees valuations of monomial ideals and the asymptotic Samuel function."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import INF, Exponent, LogValue, Polynomial, fmt_rational
from .monomial import MonomialIdeal, PowerMembership, ord_monomial
from .polyhedra import contains_point, irredundancy_witness, newton_polyhedron, scale


@dataclass(frozen=True, order=True)
class MonomialValuation:
    """``v(x^b) = 2^(-<weight, b> / normalizer)``, extended to sums by maximum."""

    weight: Exponent
    normalizer: int

    def __post_init__(self):
        w = tuple(int(x) for x in self.weight)
        if not any(w) or any(x < 0 for x in w):
            raise ValueError(f"weight {w} must be nonzero and nonnegative")
        if self.normalizer <= 0:
            raise ValueError("normalizer must be positive")
        object.__setattr__(self, "weight", w)

    def order(self, b: Sequence[int]) -> Fraction:
        return Fraction(sum(w * x for w, x in zip(self.weight, b)), self.normalizer)

    def order_of(self, f: Polynomial):
        """Minimum term order; +inf at 0."""
        if f.is_zero():
            return INF
        return min(self.order(e) for e in f.exponents())

    def __call__(self, f: Polynomial) -> LogValue:
        return LogValue(self.order_of(f))

    def to_json(self) -> dict:
        return {"weight": list(self.weight), "normalizer": self.normalizer}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialValuation":
        return cls(tuple(data["weight"]), int(data["normalizer"]))


def _require_proper(I: MonomialIdeal):
    if I.is_zero:
        raise ValueError("the zero ideal has no Rees valuations")
    if I.is_unit:
        raise ValueError("the unit ideal has no Rees valuations")


def rees_valuations(I: MonomialIdeal) -> list[MonomialValuation]:
    """One valuation per positive-offset facet of the Newton polyhedron."""
    _require_proper(I)
    NP = newton_polyhedron(I)
    return [MonomialValuation(f.normal, f.offset) for f in NP.facets if f.offset > 0]


def _check_element(I: MonomialIdeal, f: Polynomial):
    if f.nvars != I.nvars:
        raise ValueError("dimension mismatch between ideal and polynomial")
    if f.is_laurent():
        raise ValueError("Laurent polynomial is not an element of A")


def samuel(I: MonomialIdeal, f: Polynomial):
    """Asymptotic Samuel function: minimum Rees-valuation order of ``f``."""
    _check_element(I, f)
    if f.is_zero():
        return INF
    return min(v.order_of(f) for v in rees_valuations(I))


@dataclass(frozen=True)
class SamuelBracket:
    lower: Fraction
    upper: object  # Fraction or inf
    m_star: Optional[int]

    @property
    def closed(self) -> bool:
        return self.lower == self.upper

    def to_json(self) -> dict:
        return {"lower": fmt_rational(self.lower), "upper": fmt_rational(self.upper), "m_star": self.m_star}


def samuel_bruteforce(I: MonomialIdeal, f: Polynomial, M: int) -> SamuelBracket:
    """Certified bracket ``max_m ord(f^m)/m <= samuel(I, f)`` over ``m <= M``.

    The lower side only uses membership of ``f^m`` in powers of ``I``. The scan
    stops at the first ``m`` where the bracket closes, since the lower bound
    can never exceed the limit.
    """
    if M < 1:
        raise ValueError("M must be at least 1")
    _check_element(I, f)
    upper = samuel(I, f)
    if f.is_zero():
        return SamuelBracket(INF, INF, 1)
    pm = PowerMembership(I)
    lower = Fraction(0)
    mono = f.exponents()[0] if f.is_monomial() else None
    power = f
    for m in range(1, M + 1):
        if mono is not None:
            k = ord_monomial(I, tuple(m * x for x in mono), pm)
        else:
            if m > 1:
                power = power * f
            k = min(ord_monomial(I, e, pm) for e in power.exponents())
        if k == INF:
            return SamuelBracket(INF, upper, m)
        ratio = Fraction(k, m)
        if ratio > lower:
            lower = ratio
        if lower == upper:
            return SamuelBracket(lower, upper, m)
    return SamuelBracket(lower, upper, None)


def in_closure_of_power(I: MonomialIdeal, n: int, f: Polynomial) -> bool:
    """``f ∈ closure(I^n)``: every term exponent lies in ``n * NP(I)``."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_element(I, f)
    _require_proper(I)
    NP = scale(newton_polyhedron(I), n)
    return all(contains_point(NP, e) for e in f.exponents())


def rees_minimality_witness(I: MonomialIdeal, v: MonomialValuation, bound: int = 4):
    """Monomial ``x^b`` and level ``n`` showing ``v`` cannot be dropped from RV(I).

    ``b`` violates ``v``'s inequality at level ``n`` while meeting every other
    Rees inequality there. Levels ``n <= bound`` are searched first (box
    points by degree); failing that, the rational irredundancy point of the
    facet is scaled to a lattice point. Returns ``(b, n)``, or None when
    ``v`` is the only Rees valuation.
    """
    rv = rees_valuations(I)
    if v not in rv:
        raise ValueError(f"{v} is not a Rees valuation of {I}")
    others = [u for u in rv if u != v]
    if not others:
        return None
    NP = newton_polyhedron(I)
    index = next(i for i, f in enumerate(NP.facets) if (f.normal, f.offset) == (v.weight, v.normalizer))
    w = irredundancy_witness(NP, index)
    assert w is not None, "Rees facets are irredundant"
    top = tuple(max(t, math.ceil(x)) for t, x in zip(I.max_exponents(), w))

    def ok(b, n):
        return all(x >= 0 for x in b) and v.order(b) < n and all(u.order(b) >= n for u in others)

    for n in range(1, bound + 1):
        for b in box_points_by_degree(tuple(n * t for t in top)):
            if ok(b, n):
                return b, n
    d = math.lcm(*(Fraction(x).denominator for x in w))
    b = tuple(int(d * x) for x in w)
    assert ok(b, d)
    return b, d


def box_points_by_degree(upper: Sequence[int]):
    """Lattice points ``0 <= b <= upper`` by total degree, then lex-descending."""
    n = len(upper)

    def rec(i, remaining):
        if i == n - 1:
            if remaining <= upper[i]:
                yield (remaining,)
            return
        for x in range(min(remaining, upper[i]), -1, -1):
            for rest in rec(i + 1, remaining - x):
                yield (x,) + rest

    for d in range(sum(upper) + 1):
        yield from rec(0, d)
