"""Monomial ideals in Q[x_1..x_n]: membership, products, colon, ord, primes."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import INF, Exponent, ParseError, Polynomial, default_variables, format_monomial, parse_polynomial


def divides(g: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(g, b))


def minimalize(vectors: Iterable[Sequence[int]]) -> tuple[Exponent, ...]:
    """Minimal elements under the componentwise order, sorted lex-descending."""
    uniq = sorted(set(tuple(v) for v in vectors), key=lambda v: (sum(v), v))
    kept: list[Exponent] = []
    for v in uniq:
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return tuple(sorted(kept, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal generated by monomials ``x^g``; stored by its minimal generators.

    The empty generator tuple is the zero ideal; ``(0,...,0)`` the unit ideal.
    """

    generators: tuple[Exponent, ...]
    nvars: int

    def __post_init__(self):
        gens = []
        for g in self.generators:
            g = tuple(int(x) for x in g)
            if len(g) != self.nvars:
                raise ValueError(f"generator {g} does not have {self.nvars} entries")
            if any(x < 0 for x in g):
                raise ValueError(f"generator {g} has a negative exponent")
            gens.append(g)
        object.__setattr__(self, "generators", minimalize(gens))

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(((0,) * nvars,), nvars)

    @classmethod
    def principal(cls, a: Sequence[int]) -> "MonomialIdeal":
        return cls((tuple(a),), len(a))

    @classmethod
    def maximal(cls, variables: Iterable[int], nvars: int) -> "MonomialIdeal":
        gens = []
        for i in variables:
            e = [0] * nvars
            e[i] = 1
            gens.append(tuple(e))
        return cls(tuple(gens), nvars)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return (0,) * self.nvars in self.generators

    def max_exponents(self) -> Exponent:
        return tuple(max(col) for col in zip(*self.generators))

    def format(self, variables: Sequence[str] | None = None) -> str:
        variables = variables or default_variables(self.nvars)
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g, variables) or "1" for g in self.generators) + ")"

    def __str__(self) -> str:
        return self.format()

    def __contains__(self, b) -> bool:
        if isinstance(b, Polynomial):
            return contains_polynomial(self, b)
        return contains_monomial(self, b)

    def to_json(self) -> list:
        return [list(g) for g in self.generators]


@dataclass(frozen=True, order=True)
class MonomialPrime:
    """The prime ideal generated by the variables with the given indices."""

    variables: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(sorted(set(self.variables)))
        if not vs:
            raise ValueError("a monomial prime needs at least one variable")
        object.__setattr__(self, "variables", vs)

    def ideal(self, nvars: int) -> MonomialIdeal:
        return MonomialIdeal.maximal(self.variables, nvars)

    def format(self, variables: Sequence[str]) -> str:
        return "(" + ", ".join(variables[i] for i in self.variables) + ")"


def _check_same(I: MonomialIdeal, J: MonomialIdeal):
    if I.nvars != J.nvars:
        raise ValueError(f"dimension mismatch: {I.nvars} vs {J.nvars} variables")


def _require_nonneg(b):
    if any(x < 0 for x in b):
        raise ValueError(f"exponent {tuple(b)} has a negative entry; element is not in A")


def contains_monomial(I: MonomialIdeal, b: Sequence[int]) -> bool:
    b = tuple(b)
    if len(b) != I.nvars:
        raise ValueError(f"exponent {b} does not have {I.nvars} entries")
    _require_nonneg(b)
    return any(divides(g, b) for g in I.generators)


def contains_polynomial(I: MonomialIdeal, f: Polynomial) -> bool:
    """A polynomial lies in a monomial ideal iff each of its terms does."""
    if f.is_laurent():
        raise ValueError("Laurent polynomial is not an element of A")
    return all(contains_monomial(I, e) for e in f.exponents())


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    gens = [tuple(x + y for x, y in zip(g, h)) for g in I.generators for h in J.generators]
    return MonomialIdeal(tuple(gens), I.nvars)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("ideal powers need k >= 0")
    result = MonomialIdeal.unit(I.nvars)
    base = I
    while k:
        if k & 1:
            result = product(result, base)
        k >>= 1
        if k:
            base = product(base, base)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    gens = [tuple(max(x, y) for x, y in zip(g, h)) for g in I.generators for h in J.generators]
    return MonomialIdeal(tuple(gens), I.nvars)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    return MonomialIdeal(I.generators + J.generators, I.nvars)


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _check_same(I, J)
    return all(contains_monomial(J, g) for g in I.generators)


def colon_monomial(I: MonomialIdeal, g: Sequence[int]) -> MonomialIdeal:
    """``(I : x^g)``, by truncated subtraction of ``g`` from each generator."""
    gens = [tuple(max(x - y, 0) for x, y in zip(h, g)) for h in I.generators]
    return MonomialIdeal(tuple(gens), I.nvars)


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``(I : J) = {x^b : x^b J ⊆ I}`` as an intersection of monomial colons."""
    _check_same(I, J)
    result = MonomialIdeal.unit(I.nvars)
    for g in J.generators:
        result = intersect(result, colon_monomial(I, g))
    return result


# ---------------------------------------------------------------------------
# ord and membership in powers
# ---------------------------------------------------------------------------


class PowerMembership:
    """Decides ``x^p ∈ I^k`` without expanding ``I^k``.

    ``x^p ∈ I^k`` iff some sum of ``k`` generators is dominated by ``p``. The
    search is depth first with memoised failures; it prunes with weighted
    degree bounds: for any ``w >= 0``, a sum of ``k`` generators below ``p``
    forces ``k * min_g <w,g> <= <w,p>``. Those bounds hold for every weight,
    so the weight list only affects speed, never the answer.
    """

    def __init__(self, I: MonomialIdeal, weights: Optional[Sequence[Sequence[int]]] = None):
        if I.is_zero:
            raise ValueError("membership in powers of the zero ideal is trivial; not supported")
        self.ideal = I
        n = I.nvars
        ws = {tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}
        ws.add((1,) * n)
        if weights is None and 1 <= n <= 4 and not I.is_unit:
            from .polyhedra import newton_polyhedron

            weights = [f.normal for f in newton_polyhedron(I).facets]
        for w in weights or ():
            ws.add(tuple(w))
        self.bounds = []
        for w in sorted(ws):
            c = min(sum(a * b for a, b in zip(w, g)) for g in I.generators)
            if c > 0:
                self.bounds.append((w, c))
        self.gens = I.generators
        self._fail: set[tuple[Exponent, int]] = set()

    def upper_bound(self, p: Sequence[int]) -> float:
        """Largest k not excluded by the weighted degree bounds."""
        best = INF
        for w, c in self.bounds:
            best = min(best, sum(a * b for a, b in zip(w, p)) // c)
        return best

    def contains(self, p: Sequence[int], k: int) -> bool:
        p = tuple(p)
        _require_nonneg(p)
        if k <= 0:
            return True
        if self.ideal.is_unit:
            return True
        return self._search(p, k)

    def _slack(self, p):
        # float only orders the search; decisions use exact integer bounds
        return min((sum(a * b for a, b in zip(w, p)) * 1.0 / c for w, c in self.bounds), default=INF)

    def _search(self, p: Exponent, k: int) -> bool:
        if (p, k) in self._fail or self.upper_bound(p) < k:
            return False
        stack = [(p, k)]
        # explicit DFS: each frame holds the remaining candidate generators
        frames = [self._children(p, k)]
        while frames:
            top = frames[-1]
            node = stack[-1]
            try:
                child = next(top)
            except StopIteration:
                self._fail.add(node)
                frames.pop()
                stack.pop()
                continue
            q, kk = child
            if kk == 0:
                return True
            if (q, kk) in self._fail or self.upper_bound(q) < kk:
                continue
            stack.append(child)
            frames.append(self._children(q, kk))
        return False

    def _children(self, p, k):
        cands = []
        for g in self.gens:
            if divides(g, p):
                q = tuple(a - b for a, b in zip(p, g))
                cands.append((-self._slack(q), q))
        cands.sort()
        for _, q in cands:
            yield (q, k - 1)


def ord_monomial(I: MonomialIdeal, b: Sequence[int], membership: Optional[PowerMembership] = None):
    """Largest k with ``x^b ∈ I^k``; +inf for the unit ideal."""
    _require_nonneg(b)
    if I.is_unit:
        return INF
    if I.is_zero:
        return 0
    pm = membership or PowerMembership(I)
    hi = pm.upper_bound(b)
    if pm.contains(b, hi):
        return int(hi)
    lo = 0  # invariant: contains(b, lo) and not contains(b, hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pm.contains(b, mid):
            lo = mid
        else:
            hi = mid
    return lo


def ord(I: MonomialIdeal, f: Polynomial, membership: Optional[PowerMembership] = None):
    """``max{k : f ∈ I^k}`` with ``I^0 = A``; +inf for ``f = 0``."""
    if f.is_laurent():
        raise ValueError("Laurent polynomial is not an element of A")
    if f.nvars != I.nvars:
        raise ValueError("dimension mismatch between ideal and polynomial")
    if f.is_zero():
        return INF
    if I.is_unit:
        return INF
    if I.is_zero:
        return 0
    pm = membership or PowerMembership(I)
    return min(ord_monomial(I, e, pm) for e in f.exponents())


# ---------------------------------------------------------------------------
# primes
# ---------------------------------------------------------------------------


def as_monomial_prime(J: MonomialIdeal) -> Optional[MonomialPrime]:
    """The prime ``J`` if ``J`` is generated by a nonempty set of variables."""
    if J.is_zero or J.is_unit:
        return None
    idx = []
    for g in J.generators:
        if sum(g) != 1:
            return None
        idx.append(g.index(1))
    return MonomialPrime(tuple(idx))


def prime_witnesses(I: MonomialIdeal):
    """Yield ``(b, P)`` for every ``b`` in the witness box with ``(I : x^b) = P`` prime."""
    if I.is_zero:
        raise ValueError("the zero ideal is not supported")
    if I.is_unit:
        raise ValueError("the unit ideal has no associated primes")
    top = I.max_exponents()
    for b in itertools.product(*(range(t + 1) for t in top)):
        if contains_monomial(I, b):
            continue
        P = as_monomial_prime(colon_monomial(I, b))
        if P is not None:
            yield b, P


def associated_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    """Associated primes of a proper monomial ideal, found by witness search.

    Every monomial associated prime ``P`` is ``(I : x^b)`` for a monomial
    ``x^b``; raising an entry of ``b`` past the largest generator exponent in
    that coordinate does not change the colon, so the box
    ``0 <= b <= max generator exponent`` is exhaustive.
    """
    return sorted({P for _, P in prime_witnesses(I)})


def localize_at_prime(I: MonomialIdeal, P: MonomialPrime) -> MonomialIdeal:
    """Image of ``I`` in the localization at ``P``; variables outside ``P`` become units."""
    if max(P.variables) >= I.nvars:
        raise ValueError(f"prime {P.variables} refers to variables beyond {I.nvars}")
    gens = [tuple(g[i] for i in P.variables) for g in I.generators]
    return MonomialIdeal(tuple(gens), len(P.variables))


# ---------------------------------------------------------------------------
# text syntax
# ---------------------------------------------------------------------------


def parse_ideal(text: str, variables: Sequence[str]) -> MonomialIdeal:
    """Parse ``"(x^2, y^3)"``; every generator must be a single monomial."""
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError("ideal must be written as (g1, g2, ...)", offset, text)
    body = s[1:-1]
    n = len(variables)
    gens = []
    pos = offset + 1
    for piece in body.split(","):
        if not piece.strip():
            raise ParseError("empty generator", pos, text)
        try:
            p = parse_polynomial(piece, variables)
        except ParseError as exc:
            raise ParseError(exc.message, pos + exc.position, text) from None
        if p.is_zero():
            pos += len(piece) + 1
            continue
        if not p.is_monomial():
            raise ParseError(f"generator {piece.strip()!r} is not a monomial", pos, text)
        gens.append(p.exponents()[0])
        pos += len(piece) + 1
    return MonomialIdeal(tuple(gens), n)


def parse_monomial(text: str, variables: Sequence[str]) -> Exponent:
    p = parse_polynomial(text, variables, laurent=True)
    if not p.is_monomial():
        raise ParseError(f"{text.strip()!r} is not a monomial", 0, text)
    return p.exponents()[0]

