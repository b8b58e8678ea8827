import itertools
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from shilov.monomial import MonomialIdeal, contains_monomial, parse_ideal, power
from shilov.polyhedra import (
    Facet,
    NewtonPolyhedron,
    closure_of_power,
    contains_point,
    integral_closure,
    irredundancy_witness,
    newton_polyhedron,
)
from strategies import ideals

XY = ["x", "y"]


def det(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    n, d = len(m), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return d


def rank(vectors):
    m = [[Fraction(x) for x in v] for v in vectors]
    r = 0
    for c in range(len(m[0]) if m else 0):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def facets_by_subsets(J: MonomialIdeal):
    """Brute-force facet list: hyperplanes through n independent homogenized generators/rays."""
    n = J.nvars
    rays = [tuple(g) + (1,) for g in J.generators]
    rays += [tuple(int(i == j) for j in range(n)) + (0,) for i in range(n)]
    out = set()
    for subset in itertools.combinations(rays, n):
        if rank(list(subset)) < n:
            continue
        # cofactor normal, orthogonal to every vector in the subset
        y = []
        for k in range(n + 1):
            minor = [[v[j] for j in range(n + 1) if j != k] for v in subset]
            y.append(((-1) ** k) * det(minor))
        y = [int(c) for c in y]
        for sgn in (1, -1):
            z = [sgn * c for c in y]
            if any(sum(a * b for a, b in zip(z, r)) < 0 for r in rays):
                continue
            tight = [r for r in rays if sum(a * b for a, b in zip(z, r)) == 0]
            if rank(tight) < n or not any(z[:n]):
                continue
            from math import gcd

            g = 0
            for c in z:
                g = gcd(g, abs(c))
            z = [c // g for c in z]
            out.add(Facet(tuple(z[:n]), -z[n]))
    return sorted(out)


def closure_by_powers(J: MonomialIdeal, upper, K):
    """Monomials b with x^(mb) in J^m for some m <= K: a sound inner approximation."""
    pows = [power(J, m) for m in range(1, K + 1)]
    pts = set()
    for b in itertools.product(*(range(u + 1) for u in upper)):
        if any(contains_monomial(P, tuple(m * x for x in b)) for m, P in enumerate(pows, start=1)):
            pts.add(b)
    return pts


class TestFacets:
    def test_examples(self):
        NP = newton_polyhedron(parse_ideal("(x^2, y^3)", XY))
        assert NP.facets == (Facet((0, 1), 0), Facet((1, 0), 0), Facet((3, 2), 6))
        NP = newton_polyhedron(parse_ideal("(x, y)", XY))
        assert Facet((1, 1), 1) in NP.facets

    def test_principal_is_translated_orthant(self):
        NP = newton_polyhedron(MonomialIdeal.principal((2, 1, 3)))
        assert NP.facets == (Facet((0, 0, 1), 3), Facet((0, 1, 0), 1), Facet((1, 0, 0), 2))

    @given(ideals(emax=5))
    def test_matches_subset_enumeration(self, J):
        if J.is_unit:
            return
        assert list(newton_polyhedron(J).facets) == facets_by_subsets(J)

    @given(ideals(emax=5))
    def test_every_facet_is_irredundant(self, J):
        if J.is_unit:
            return
        NP = newton_polyhedron(J)
        for i, f in enumerate(NP.facets):
            w = irredundancy_witness(NP, i)
            assert w is not None
            assert not f.holds(w)
            assert all(g.holds(w) for j, g in enumerate(NP.facets) if j != i)

    def test_json_roundtrip(self):
        NP = newton_polyhedron(parse_ideal("(x^3, x*y, y^4)", XY))
        assert NewtonPolyhedron.from_json(NP.to_json()).facets == NP.facets


class TestClosure:
    def test_examples(self):
        assert integral_closure(parse_ideal("(x^2, y^3)", XY)) == parse_ideal("(x^2, x*y^2, y^3)", XY)
        m2 = power(parse_ideal("(x, y)", XY), 2)
        assert integral_closure(m2) == m2
        assert closure_of_power(parse_ideal("(x^2, y^3)", XY), 2) == parse_ideal("(x^4, x^3*y^2, x^2*y^3, x*y^5, y^6)", XY)

    @given(ideals(nvars=2, emax=3, max_gens=3))
    def test_lattice_points_match_power_criterion(self, J):
        if J.is_unit:
            return
        upper = tuple(J.max_exponents())
        NP = newton_polyhedron(J)
        lattice = {b for b in itertools.product(*(range(u + 1) for u in upper)) if contains_point(NP, b)}
        assert closure_by_powers(J, upper, 12) == lattice

    @given(ideals(emax=4), st.integers(1, 3))
    def test_closure_contains_power_and_is_closed(self, J, n):
        if J.is_unit:
            return
        C = closure_of_power(J, n)
        P = power(J, n)
        assert all(contains_monomial(C, g) for g in P.generators)
        assert integral_closure(C) == C
