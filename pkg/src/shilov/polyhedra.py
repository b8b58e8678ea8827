"""Newton polyhedra ``conv(G) + R_{>=0}^n`` of monomial ideals, exact.

Facets come from the double-description method run on the homogenized cone
spanned by ``(g, 1)`` for generators ``g`` and ``(e_i, 0)`` for the orthant
rays. Extreme rays of the dual cone ``{y : <y, r> >= 0}`` are exactly the
facets, so the output is irredundant by construction. All arithmetic is on
Python integers.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .core import Exponent
from .monomial import MonomialIdeal

MAX_DIM = 4


@dataclass(frozen=True, order=True)
class Facet:
    """Inequality ``<normal, b> >= offset`` with a primitive nonnegative normal."""

    normal: Exponent
    offset: int

    def value(self, b: Sequence) -> Fraction:
        return sum(Fraction(w) * x for w, x in zip(self.normal, b))

    def holds(self, b: Sequence) -> bool:
        return self.value(b) >= self.offset

    def to_json(self) -> dict:
        return {"normal": list(self.normal), "offset": self.offset}


@dataclass(frozen=True)
class NewtonPolyhedron:
    facets: tuple[Facet, ...]
    generators: tuple[Exponent, ...] = field(compare=False)
    nvars: int

    def to_json(self) -> dict:
        return {"facets": [f.to_json() for f in self.facets], "generators": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> "NewtonPolyhedron":
        facets = tuple(Facet(tuple(f["normal"]), int(f["offset"])) for f in data["facets"])
        gens = tuple(tuple(g) for g in data["generators"])
        n = len(gens[0]) if gens else len(facets[0].normal)
        return cls(facets, gens, n)


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _inverse_columns(rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Columns of ``rows^{-1}``, each scaled to a primitive integer vector."""
    d = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(d)] for i, r in enumerate(rows)]
    for col in range(d):
        piv = next(r for r in range(col, d) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(d):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    cols = []
    for j in range(d):
        col = [m[i][d + j] for i in range(d)]
        den = 1
        for x in col:
            den = den * x.denominator // gcd(den, x.denominator)
        cols.append(_primitive([int(x * den) for x in col]))
    return cols


def _rank(vectors: list[tuple[int, ...]]) -> int:
    m = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(rank + 1, len(m)):
            if m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def dual_extreme_rays(rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Extreme rays of ``{y : <row, y> >= 0 for all rows}`` for a full-rank row set.

    Standard double description with the combinatorial adjacency test.
    """
    d = len(rows[0])
    basis: list[int] = []
    for i, r in enumerate(rows):
        if _rank([rows[j] for j in basis] + [r]) > len(basis):
            basis.append(i)
        if len(basis) == d:
            break
    if len(basis) < d:
        raise ValueError("constraint rows do not have full rank")
    cols = _inverse_columns([rows[i] for i in basis])
    # ray j is tight on every basis row except the j-th
    rays = [(cols[j], frozenset(basis[k] for k in range(d) if k != j)) for j in range(d)]
    for idx, a in enumerate(rows):
        if idx in basis:
            continue
        pos, zero, neg = [], [], []
        for ray in rays:
            s = _dot(a, ray[0])
            (pos if s > 0 else zero if s == 0 else neg).append((ray, s))
        if not neg:
            rays = [(r, z | {idx}) if s == 0 else (r, z) for (r, z), s in pos + zero]
            continue
        new = [(r, z) for (r, z), _ in pos]
        new += [(r, z | {idx}) for (r, z), _ in zero]
        everyone = [ray for ray, _ in pos + zero + neg]
        for (p, zp), sp in pos:
            for (q, zq), sq in neg:
                common = zp & zq
                if len(common) < d - 2:
                    continue
                if any(common <= zr and r is not p and r is not q for r, zr in everyone):
                    continue
                v = _primitive([sp * y - sq * x for x, y in zip(p, q)])
                new.append((v, common | {idx}))
        rays = new
    return sorted({r for r, _ in rays})


@functools.lru_cache(maxsize=4096)
def newton_polyhedron(I: MonomialIdeal) -> NewtonPolyhedron:
    """Irredundant facet description of the Newton polyhedron of ``I``.

    >>> from shilov.monomial import MonomialIdeal
    >>> [ (f.normal, f.offset) for f in newton_polyhedron(MonomialIdeal(((2, 0), (0, 3)), 2)).facets ]
    [((0, 1), 0), ((1, 0), 0), ((3, 2), 6)]
    """
    n = I.nvars
    if I.is_zero:
        raise ValueError("the zero ideal has no Newton polyhedron")
    if n > MAX_DIM:
        raise ValueError(f"Newton polyhedra are supported for at most {MAX_DIM} variables, got {n}")
    gens = I.generators
    if len(gens) == 1:
        (a,) = gens
        facets = [Facet(tuple(int(i == j) for j in range(n)), a[i]) for i in range(n)]
        return NewtonPolyhedron(tuple(sorted(facets)), gens, n)
    rows = [tuple(g) + (1,) for g in gens]
    rows += [tuple(int(i == j) for j in range(n)) + (0,) for i in range(n)]
    facets = []
    for y in dual_extreme_rays(rows):
        w = y[:n]
        if not any(w):
            continue  # the face at infinity t >= 0
        w = _primitive(w)
        facets.append(Facet(w, min(_dot(w, g) for g in gens)))
    return NewtonPolyhedron(tuple(sorted(set(facets))), gens, n)


def contains_point(NP: NewtonPolyhedron, b: Sequence) -> bool:
    if len(b) != NP.nvars:
        raise ValueError(f"point {tuple(b)} does not have {NP.nvars} coordinates")
    return all(f.holds(b) for f in NP.facets)


def scale(NP: NewtonPolyhedron, n: int) -> NewtonPolyhedron:
    """The polyhedron ``n * NP``: same normals, offsets times ``n``."""
    if n < 1:
        raise ValueError("scale factor must be positive")
    facets = tuple(Facet(f.normal, f.offset * n) for f in NP.facets)
    gens = tuple(tuple(n * x for x in g) for g in NP.generators)
    return NewtonPolyhedron(facets, gens, NP.nvars)


def lattice_points_in(NP: NewtonPolyhedron, upper: Sequence[int]):
    for b in itertools.product(*(range(u + 1) for u in upper)):
        if contains_point(NP, b):
            yield b


@functools.lru_cache(maxsize=4096)
def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Monomials whose exponents lie in the Newton polyhedron of ``I``.

    If ``b`` is in the polyhedron and ``b_i`` exceeds every generator's i-th
    entry then so is ``b - e_i``; minimal points therefore sit in the box
    bounded by the componentwise maximum of the generators.
    """
    if I.is_zero:
        raise ValueError("the zero ideal has no integral closure here")
    if I.is_unit:
        return I
    NP = newton_polyhedron(I)
    return MonomialIdeal(tuple(lattice_points_in(NP, I.max_exponents())), I.nvars)


def closure_of_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """Integral closure of ``I^n`` as lattice points of ``n * NP(I)``."""
    if I.is_unit:
        return I
    NP = scale(newton_polyhedron(I), n)
    upper = tuple(n * x for x in I.max_exponents())
    return MonomialIdeal(tuple(lattice_points_in(NP, upper)), I.nvars)


def irredundancy_witness(NP: NewtonPolyhedron, index: int):
    """A rational point satisfying every facet except ``index``, or None.

    Moves from an interior point of the dropped facet slightly outward; the
    facet is irredundant iff such a point exists.
    """
    target = NP.facets[index]
    others = [f for i, f in enumerate(NP.facets) if i != index]
    n = NP.nvars
    face_pts = [g for g in NP.generators if _dot(target.normal, g) == target.offset]
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n) if target.normal[i] == 0]
    if not face_pts:
        return None
    # barycentre of the face's generators pushed along its recession rays
    centre = [sum(Fraction(g[i]) for g in face_pts) / len(face_pts) for i in range(n)]
    for r in rays:
        centre = [c + x for c, x in zip(centre, r)]
    step = Fraction(1, 2)
    direction = [Fraction(-w) for w in target.normal]
    for _ in range(64):
        p = [c + step * d for c, d in zip(centre, direction)]
        if all(f.holds(p) for f in others) and not target.holds(p):
            return tuple(p)
        step /= 2
    return None
