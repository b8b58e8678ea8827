"""ϖ-Shilov classification of monomial Tate data and valuative probes of local rings."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Protocol, Sequence

from .core import Exponent, Polynomial, default_variables, format_monomial
from .monomial import MonomialPrime, associated_primes, localize_at_prime
from .rees import MonomialValuation
from .seminorms import TateData


def min_primes_omega(T: TateData) -> list[MonomialPrime]:
    """Minimal primes of ``ϖ = x^a``: one ``(x_i)`` per variable with ``a_i > 0``."""
    return [MonomialPrime((i,)) for i in T.support]


def wass_omega(T: TateData) -> list[MonomialPrime]:
    """Weakly associated primes of ``ϖ``; in a Noetherian ring these are the associated primes."""
    return associated_primes(T.omega_ideal())


@dataclass(frozen=True)
class LocalizationData:
    prime: MonomialPrime
    uniformizer_principal: bool
    omega_order: int  # ord of ϖ in the localization, when it is a DVR

    @property
    def is_rank_one_valuation(self) -> bool:
        return self.uniformizer_principal and self.omega_order > 0


def _localize(T: TateData, P: MonomialPrime) -> LocalizationData:
    loc = localize_at_prime(T.omega_ideal(), P)
    maximal = localize_at_prime(P.ideal(T.nvars), P)
    # DVR: the maximal ideal is principal, generated by a single variable
    principal = len(maximal.generators) == 1 and len(P.variables) == 1
    order = loc.generators[0][0] if principal else 0
    return LocalizationData(P, principal, order)


@dataclass(frozen=True)
class ShilovReport:
    min_primes: tuple[MonomialPrime, ...]
    wass_primes: tuple[MonomialPrime, ...]
    classification: str  # "strongly", "weakly" or "neither"
    boundary: tuple[MonomialValuation, ...]
    localizations: tuple[LocalizationData, ...] = field(default=(), compare=False)

    def to_json(self, variables: Sequence[str] | None = None) -> dict:
        names = variables or default_variables(len(self.boundary[0].weight) if self.boundary else 1)
        return {
            "min_primes": [p.format(names) for p in self.min_primes],
            "wass_primes": [p.format(names) for p in self.wass_primes],
            "classification": self.classification,
            "boundary": [v.to_json() for v in self.boundary],
        }


def classify(T: TateData) -> ShilovReport:
    """Strong/weak ϖ-Shilov test from the localizations at the primes of ``ϖ``.

    Both prime sets are computed independently (support of ``a`` versus the
    associated-prime witness search) so a disagreement shows up in the report.
    """
    mins = tuple(min_primes_omega(T))
    wass = tuple(wass_omega(T))
    locs = {P: _localize(T, P) for P in set(mins) | set(wass)}
    weak_ok = all(locs[P].is_rank_one_valuation for P in mins)
    strong_ok = all(locs[P].is_rank_one_valuation for P in wass)
    if weak_ok and strong_ok and set(wass) >= set(mins):
        kind = "strongly"
    elif weak_ok:
        kind = "weakly"
    else:
        kind = "neither"
    boundary = []
    for P in wass:
        loc = locs[P]
        if loc.is_rank_one_valuation:
            (i,) = P.variables
            w = tuple(int(j == i) for j in range(T.nvars))
            # normalized so that v(ϖ) = 1/2
            boundary.append(MonomialValuation(w, loc.omega_order))
    return ShilovReport(mins, wass, kind, tuple(sorted(boundary)), tuple(locs[P] for P in sorted(locs)))


def shilov_boundary(T: TateData) -> list[MonomialValuation]:
    return list(classify(T).boundary)


# ---------------------------------------------------------------------------
# local-ring oracles
# ---------------------------------------------------------------------------


class LocalRingOracle(Protocol):
    name: str

    def elements(self, bound: int) -> Iterator: ...

    def in_principal(self, f, g) -> bool:
        """Decide ``f ∈ (g)``."""
        ...

    def omega_power(self, n: int): ...

    def power(self, f, k: int): ...

    def is_unit(self, f) -> bool: ...

    def show(self, f) -> str: ...


class DVROracle:
    """``Q[x]`` localized at ``(x)``, ``ϖ = x^e``; membership by x-adic order.

    Elements: the monomials ``x^d`` and binomials ``x^i + x^j`` up to degree ``bound``.
    """

    def __init__(self, e: int = 1):
        self.name = "dvr"
        self.e = e

    def elements(self, bound: int):
        for d in range(bound + 1):
            yield Polynomial.monomial((d,))
        for j in range(1, bound + 1):
            for i in range(j):
                yield Polynomial.monomial((i,)) + Polynomial.monomial((j,))

    @staticmethod
    def _order(f: Polynomial) -> int:
        return min(e[0] for e in f.exponents())

    def in_principal(self, f, g) -> bool:
        if f.is_zero():
            return True
        if g.is_zero():
            return False
        return self._order(f) >= self._order(g)

    def omega_power(self, n: int):
        return Polynomial.monomial((n * self.e,))

    def power(self, f, k: int):
        return f ** k

    def is_unit(self, f) -> bool:
        return not f.is_zero() and self._order(f) == 0

    def show(self, f) -> str:
        return f.format(["x"])


class BivariateOracle:
    """``Q[x,y]`` localized at ``(x,y)`` with ``ϖ = x``; monomial elements only."""

    def __init__(self):
        self.name = "bivariate"

    def elements(self, bound: int):
        for d in range(bound + 1):
            for i in range(d, -1, -1):
                yield (i, d - i)

    def in_principal(self, f, g) -> bool:
        return all(a >= b for a, b in zip(f, g))

    def omega_power(self, n: int):
        return (n, 0)

    def power(self, f, k: int):
        return tuple(k * x for x in f)

    def is_unit(self, f) -> bool:
        return not any(f)

    def show(self, f) -> str:
        return format_monomial(f, ["x", "y"]) or "1"


class SemigroupOracle:
    """Monomials ``t^d``, ``d`` in a numerical semigroup; ``t^d ∈ (t^c)`` iff ``d - c`` is in it.

    Only monomial elements are modelled; statements about arbitrary power
    series with unit coefficients are outside this oracle.
    """

    def __init__(self, generators: Sequence[int] = (2, 3), omega: int | None = None):
        gens = tuple(sorted(set(int(g) for g in generators)))
        if not gens or any(g <= 0 for g in gens):
            raise ValueError("semigroup generators must be positive integers")
        self.name = "semigroup"
        self.generators = gens
        self.omega = gens[0] if omega is None else omega
        if not self.contains(self.omega) or self.omega == 0:
            raise ValueError("omega must be a nonzero semigroup element")

    def contains(self, d: int) -> bool:
        if d < 0:
            return False
        reach = [False] * (d + 1)
        reach[0] = True
        for k in range(1, d + 1):
            reach[k] = any(k >= g and reach[k - g] for g in self.generators)
        return reach[d]

    def elements(self, bound: int):
        limit = bound * max(self.generators)
        for d in range(limit + 1):
            if self.contains(d):
                yield d

    def in_principal(self, f, g) -> bool:
        return self.contains(f - g)

    def omega_power(self, n: int):
        return n * self.omega

    def power(self, f, k: int):
        return k * f

    def is_unit(self, f) -> bool:
        return f == 0

    def show(self, f) -> str:
        return "1" if f == 0 else ("t" if f == 1 else f"t^{f}")


ORACLES = {"dvr": DVROracle, "bivariate": BivariateOracle, "semigroup": SemigroupOracle}


@dataclass(frozen=True)
class ProbeResult:
    """``witness`` is ``(f, n)`` with neither ``ϖ^n ∈ (f)`` nor ``f ∈ (ϖ^n)``."""

    valuative: bool
    bound: int
    witness: tuple | None = None
    checked: int = 0


def valuative_probe(O: LocalRingOracle, bound: int) -> ProbeResult:
    if bound < 1:
        raise ValueError("bound must be positive")
    count = 0
    for f in O.elements(bound):
        for n in range(1, bound + 1):
            count += 1
            wn = O.omega_power(n)
            if not (O.in_principal(wn, f) or O.in_principal(f, wn)):
                return ProbeResult(False, bound, (f, n), count)
    return ProbeResult(True, bound, None, count)


def rank_one_probe(O: LocalRingOracle, bound: int) -> bool:
    """Valuative up to ``bound`` and every enumerated non-unit has a power in ``(ϖ)``."""
    if not valuative_probe(O, bound).valuative:
        return False
    w = O.omega_power(1)
    for f in O.elements(bound):
        if O.is_unit(f):
            continue
        if not any(O.in_principal(O.power(f, k), w) for k in range(1, bound + 1)):
            return False
    return True


def omega_membership_via_localizations(T: TateData, b: Exponent, n: int) -> bool:
    """``x^b ∈ (ϖ^n)`` decided prime by prime: ``ord_{x_i}(x^b) >= n·a_i`` in each ``A_(x_i)``."""
    return all(b[P.variables[0]] >= n * T.omega[P.variables[0]] for P in wass_omega(T))
