"""Seminorms on the Tate ring ``A[1/ϖ]`` with ``A = Q[x_1..x_n]`` and ``ϖ = x^a``.

Normalization is fixed by ``‖ϖ‖ = 1/2``; all values are LogValues.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .core import INF, Exponent, LogValue, Polynomial, value_max
from .monomial import MonomialIdeal, contains_monomial
from .rees import MonomialValuation, rees_valuations


@dataclass(frozen=True)
class TateData:
    """Pair of definition ``(A, ϖ)`` with ``A`` a polynomial ring and ``ϖ = x^omega``."""

    nvars: int
    omega: Exponent

    def __post_init__(self):
        a = tuple(int(x) for x in self.omega)
        if len(a) != self.nvars:
            raise ValueError(f"omega {a} does not have {self.nvars} entries")
        if any(x < 0 for x in a) or not any(a):
            raise ValueError("omega must be a nonconstant monomial with nonnegative exponents")
        object.__setattr__(self, "omega", a)

    @classmethod
    def of(cls, *a: int) -> "TateData":
        return cls(len(a), tuple(a))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.omega) if x > 0)

    def omega_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.principal(self.omega)

    def omega_power(self, n: int) -> Polynomial:
        return Polynomial.monomial(tuple(n * x for x in self.omega))

    def check_element(self, f: Polynomial):
        """Raise unless ``f ∈ A[1/ϖ]`` (negative exponents only on the support)."""
        if f.nvars != self.nvars:
            raise ValueError(f"element has {f.nvars} variables, expected {self.nvars}")
        supp = set(self.support)
        for e in f.exponents():
            for i, x in enumerate(e):
                if x < 0 and i not in supp:
                    raise ValueError(f"exponent {e} is negative outside the support of omega; not in A[1/omega]")

    def check_exponent(self, b: Sequence[int]):
        self.check_element(Polynomial.monomial(b))


def _adic_order(T: TateData, b: Sequence[int]) -> int:
    """Largest ``n`` with ``x^b ∈ ϖ^n A``."""
    return min(b[i] // T.omega[i] for i in T.support)


def adic_seminorm(T: TateData, f: Polynomial) -> LogValue:
    """``‖f‖ = 2^(-n)`` for the largest integer ``n`` with ``f ∈ ϖ^n A``."""
    T.check_element(f)
    if f.is_zero():
        return LogValue.zero()
    return LogValue(min(_adic_order(T, e) for e in f.exponents()))


def omega_valuations(T: TateData) -> list[MonomialValuation]:
    return rees_valuations(T.omega_ideal())


def spectral_rees(T: TateData, f: Polynomial) -> LogValue:
    """Spectral seminorm as the maximum of the Rees valuations of ``(ϖ)``."""
    T.check_element(f)
    return value_max(v(f) for v in omega_valuations(T))


@dataclass(frozen=True)
class ValueBracket:
    """``lower <= |f| <= upper``; ``m_star`` is where the bracket closed, if it did."""

    lower: LogValue
    upper: LogValue
    m_star: Optional[int]

    @property
    def closed(self) -> bool:
        return self.lower == self.upper

    def to_json(self) -> dict:
        return {"lower": self.lower.to_json(), "upper": self.upper.to_json(), "m_star": self.m_star}


def doubling_schedule(M: int) -> list[int]:
    ms, m = [], 1
    while m <= M:
        ms.append(m)
        m *= 2
    return ms


def power_limit_bracket(lower: LogValue, norm_of_power, f, M: int) -> ValueBracket:
    """Shared ``inf_m ‖f^m‖^(1/m)`` scan along ``m = 1, 2, 4, ...``."""
    if M < 1:
        raise ValueError("M must be at least 1")
    upper = None
    power = f
    prev = 1
    for m in doubling_schedule(M):
        while prev < m:
            power = power * power
            prev *= 2
        cand = norm_of_power(power).root(m)
        if upper is None or cand < upper:
            upper = cand
        if upper == lower:
            return ValueBracket(lower, upper, m)
    return ValueBracket(lower, upper, None)


def spectral_limit(T: TateData, f: Polynomial, M: int) -> ValueBracket:
    """Bracket the spectral seminorm between the Rees route and ``‖f^m‖^(1/m)``."""
    T.check_element(f)
    return power_limit_bracket(spectral_rees(T, f), lambda g: adic_seminorm(T, g), f, M)


# ---------------------------------------------------------------------------
# generalized gauges
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaugeMonoid:
    """Submonoid X₀ of the monomials of ``A[1/ϖ]``.

    ``kind="ring"`` is all monomials of ``A``; ``kind="ideal"`` is the monomials
    of ``ideal``, which must contain ``ϖ``.
    """

    kind: str = "ring"
    ideal: Optional[MonomialIdeal] = None

    def validate(self, T: TateData):
        if self.kind == "ring":
            return
        if self.kind != "ideal" or self.ideal is None:
            raise ValueError("GaugeMonoid kind must be 'ring' or 'ideal' with an ideal")
        if self.ideal.nvars != T.nvars:
            raise ValueError("gauge ideal has the wrong number of variables")
        if not contains_monomial(self.ideal, T.omega):
            raise ValueError("omega must lie in X0 for a weak pair of definition")

    def generators(self, T: TateData) -> tuple[Exponent, ...]:
        if self.kind == "ring":
            return ((0,) * T.nvars,)
        return self.ideal.generators


def gauge(T: TateData, X0: GaugeMonoid, b: Sequence[int]) -> LogValue:
    """Generalized gauge ``inf{2^(-n/m) : x^(mb) ∈ ϖ^n X₀}`` on a monomial.

    Fix a generator ``g`` of X₀. Then ``x^(mb) ∈ ϖ^n x^g A`` iff
    ``n <= (m b_i - g_i) / a_i`` on the support and ``m b_j >= g_j`` off it.
    For each usable ``g`` the supremum of ``n/m`` is the limit of
    ``floor(min_i (m b_i - g_i)/a_i) / m``, namely ``min_i b_i / a_i``; the
    gauge exponent is the best such value over usable generators.
    """
    b = tuple(b)
    T.check_exponent(b)
    X0.validate(T)
    best = None
    for g in X0.generators(T):
        usable = True
        for j in range(T.nvars):
            if j in T.support:
                continue
            # need m*b_j >= g_j for all large m
            if b[j] < 0 or (b[j] == 0 and g[j] > 0):
                usable = False
        if not usable:
            continue
        # attained at m = denominator when g is free of the support variables, a limit otherwise
        q = min(Fraction(b[i], T.omega[i]) for i in T.support)
        if best is None or q > best:
            best = q
    assert best is not None, "empty feasible set: X0 does not come from a pair of definition"
    return LogValue(best)


def gauge_certificate(T: TateData, b: Sequence[int]):
    """``(n, m)`` attaining the ring-monomial gauge exponent ``n/m`` exactly."""
    q = gauge(T, GaugeMonoid("ring"), b).exponent
    n, m = q.numerator, q.denominator
    shifted = tuple(m * x - n * a for x, a in zip(b, T.omega))
    assert all(x >= 0 for x in shifted)
    return n, m


# ---------------------------------------------------------------------------
# arc-closure, boundaries, power-boundedness
# ---------------------------------------------------------------------------


def arc_member(T: TateData, n: int, f: Polynomial) -> bool:
    """``f ∈ (ϖ^n)^arc`` iff ``|f|_spc <= 2^(-n)``."""
    return spectral_rees(T, f) <= LogValue(n)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a corpus check: ``ok`` or the first counterexample found."""

    ok: bool
    checked: int = 0
    witness: object = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_boundary(
    T: TateData,
    S: Iterable[MonomialValuation],
    corpus: Iterable[Polynomial],
    levels: Iterable[int],
) -> CheckResult:
    """Check ``(ϖ^n)^arc = ⋂_{v∈S} {f : v(f) <= 2^(-n)}`` on a finite corpus.

    The witness is ``(f, n)`` for the first mismatch in corpus order.
    """
    S = list(S)
    if not S:
        raise ValueError("S must be nonempty")
    levels = sorted(set(levels))
    count = 0
    for f in corpus:
        T.check_element(f)
        spc = spectral_rees(T, f)
        vals = [v(f) for v in S]
        for n in levels:
            count += 1
            lhs = spc <= LogValue(n)
            rhs = all(val <= LogValue(n) for val in vals)
            if lhs != rhs:
                return CheckResult(False, count, (f, n))
    return CheckResult(True, count)


def power_bounded(T: TateData, f: Polynomial) -> bool:
    return spectral_rees(T, f) <= LogValue.one()


def topologically_nilpotent(T: TateData, f: Polynomial) -> bool:
    return spectral_rees(T, f) < LogValue.one()
