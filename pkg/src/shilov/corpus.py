"""Seeded random objects for the verification suites and tests.

Every generator takes an explicit ``random.Random`` so corpora are
reproducible from a seed and independent of global state.
"""
from __future__ import annotations

import random
from typing import Sequence

from .core import Polynomial
from .monomial import MonomialIdeal
from .seminorms import TateData
from .star import FractionalMonomialIdeal


def rng_for(seed: int, label: str) -> random.Random:
    """Independent stream per (seed, label); string seeding is stable across runs."""
    return random.Random(f"{seed}:{label}")


def random_exponent(rng: random.Random, nvars: int, emax: int, nonzero: bool = True) -> tuple[int, ...]:
    while True:
        e = tuple(rng.randint(0, emax) for _ in range(nvars))
        if any(e) or not nonzero:
            return e


def random_ideal(rng: random.Random, nvars: int, emax: int = 6, max_gens: int = 4) -> MonomialIdeal:
    """Proper nonzero monomial ideal with 1..max_gens generators."""
    k = rng.randint(1, max_gens)
    return MonomialIdeal(tuple(random_exponent(rng, nvars, emax) for _ in range(k)), nvars)


def random_polynomial(rng: random.Random, nvars: int, emax: int = 6, max_terms: int = 3) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_exponent(rng, nvars, emax, nonzero=False)] = rng.choice([-3, -2, -1, 1, 2, 3])
    return Polynomial(terms, nvars)


def random_monomial(rng: random.Random, nvars: int, emax: int = 6) -> Polynomial:
    return Polynomial.monomial(random_exponent(rng, nvars, emax, nonzero=False))


def random_tate(rng: random.Random, max_vars: int = 3, amax: int = 4) -> TateData:
    n = rng.randint(1, max_vars)
    return TateData(n, random_exponent(rng, n, amax))


def random_fractional(
    rng: random.Random, omega: Sequence[int], emax: int = 4, max_gens: int = 3, max_shift: int = 2
) -> FractionalMonomialIdeal:
    """``ϖ^(-s) J`` with ``J`` containing a power of ϖ, so the module is open."""
    n = len(omega)
    gens = [tuple(rng.randint(1, 2) * a for a in omega)]
    for _ in range(rng.randint(0, max_gens - 1)):
        gens.append(random_exponent(rng, n, emax, nonzero=False))
    return FractionalMonomialIdeal(tuple(omega), rng.randint(-1, max_shift), MonomialIdeal(tuple(gens), n))


def random_univariate(rng: random.Random, degree: int = 4, max_terms: int = 3) -> Polynomial:
    return random_polynomial(rng, 1, degree, max_terms)
