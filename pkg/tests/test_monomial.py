import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shilov.core import INF, ParseError, Polynomial
from shilov.monomial import (
    MonomialIdeal,
    MonomialPrime,
    PowerMembership,
    as_monomial_prime,
    associated_primes,
    colon,
    colon_monomial,
    contains_monomial,
    contains_polynomial,
    ideal_sum,
    intersect,
    is_subset,
    localize_at_prime,
    ord,
    ord_monomial,
    parse_ideal,
    power,
    product,
)
from strategies import exponents, ideals

XY = ["x", "y"]


def I(text, vs=XY):
    return parse_ideal(text, vs)


def box(upper):
    return itertools.product(*(range(u + 1) for u in upper))


def in_by_divisibility(gens, b):
    return any(all(x <= y for x, y in zip(g, b)) for g in gens)


class TestBasics:
    def test_minimal_generators(self):
        J = MonomialIdeal(((2, 0), (3, 1), (0, 3), (2, 0)), 2)
        assert J.generators == ((2, 0), (0, 3))

    def test_zero_and_unit(self):
        assert MonomialIdeal((), 2).is_zero
        assert MonomialIdeal.unit(2).is_unit
        assert I("(x, 1)").is_unit

    def test_format_and_parse(self):
        assert I("(y^3, x^2)").format(XY) == "(x^2, y^3)"
        with pytest.raises(ParseError):
            I("(x + y)")
        with pytest.raises(ParseError) as exc:
            I("(x^2, y^)")
        assert exc.value.position == 8

    def test_power_and_colon_examples(self):
        assert power(I("(x^2, y^3)"), 2) == I("(x^4, x^2*y^3, y^6)")
        assert colon_monomial(I("(x^2, y^3)"), (1, 1)) == I("(x, y^2)")
        assert colon(I("(x^2, y^3)"), I("(x*y)")) == I("(x, y^2)")

    def test_polynomial_membership_is_termwise(self):
        J = I("(x^2, y^3)")
        assert contains_polynomial(J, Polynomial({(2, 0): 1, (0, 3): 5}, 2))
        assert not contains_polynomial(J, Polynomial({(2, 0): 1, (1, 1): 1}, 2))
        assert contains_polynomial(J, Polynomial.zero(2))


class TestAgainstBox:
    @given(ideals(nvars=2, emax=4), ideals(nvars=2, emax=4))
    def test_intersection_sum_product(self, A, B):
        top = tuple(2 * max(a, b) for a, b in zip(A.max_exponents(), B.max_exponents()))
        P, S, C = product(A, B), ideal_sum(A, B), intersect(A, B)
        for b in box(top):
            inA, inB = contains_monomial(A, b), contains_monomial(B, b)
            assert contains_monomial(C, b) == (inA and inB)
            assert contains_monomial(S, b) == (inA or inB)
            # product: b dominates a sum of one generator from each
            expect = any(
                all(x + y <= z for x, y, z in zip(g, h, b)) for g in A.generators for h in B.generators
            )
            assert contains_monomial(P, b) == expect

    def test_colon_example_over_box(self):
        # [(x^2, y^3) : (xy)] checked monomial by monomial up to (4, 4)
        A, J = I("(x^2, y^3)"), I("(x*y)")
        Q = colon(A, J)
        for c in box((4, 4)):
            assert contains_monomial(Q, c) == contains_monomial(A, (c[0] + 1, c[1] + 1))

    @given(ideals(emax=4), ideals(emax=3))
    def test_colon_adjunction(self, A, B):
        if A.nvars != B.nvars:
            B = MonomialIdeal(tuple((g + (0,) * A.nvars)[: A.nvars] for g in B.generators), A.nvars)
            if B.is_zero or B.is_unit:
                return
        Q = colon(A, B)
        top = A.max_exponents()
        for c in box(top):
            fits = all(contains_monomial(A, tuple(x + y for x, y in zip(c, g))) for g in B.generators)
            assert contains_monomial(Q, c) == fits
        assert is_subset(A, Q)


class TestOrd:
    def test_examples(self):
        assert ord_monomial(I("(x^2, y^3)"), (6, 12)) == 7
        assert ord(I("(x, y)"), Polynomial({(3, 1): 1, (0, 2): 1}, 2)) == 2
        assert ord(I("(x, y)"), Polynomial.zero(2)) == INF
        assert ord_monomial(MonomialIdeal.unit(2), (1, 1)) == INF

    @given(ideals(emax=4, max_gens=3), st.data())
    def test_matches_explicit_powers(self, J, data):
        b = data.draw(exponents(J.nvars, 0, 10))
        k, P = 0, MonomialIdeal.unit(J.nvars)
        while True:
            nxt = product(P, J)
            if not in_by_divisibility(nxt.generators, b):
                break
            k, P = k + 1, nxt
        assert ord_monomial(J, b) == k

    @given(ideals(emax=4, max_gens=3), st.data())
    def test_weights_do_not_change_answers(self, J, data):
        b = data.draw(exponents(J.nvars, 0, 12))
        plain = PowerMembership(J, weights=[])
        weighted = PowerMembership(J)
        for k in range(0, 5):
            assert plain.contains(b, k) == weighted.contains(b, k)


class TestPrimes:
    def test_examples(self):
        assert associated_primes(I("(x^2*y^3)")) == [MonomialPrime((0,)), MonomialPrime((1,))]
        assert associated_primes(I("(x^2, y^3)")) == [MonomialPrime((0, 1))]
        assert associated_primes(I("(x^2, x*y)")) == [MonomialPrime((0,)), MonomialPrime((0, 1))]

    def test_as_monomial_prime(self):
        assert as_monomial_prime(I("(x, y)")) == MonomialPrime((0, 1))
        assert as_monomial_prime(I("(x^2)")) is None

    @given(ideals(emax=3, max_gens=3))
    def test_witness_box_is_exhaustive(self, J):
        if J.is_unit:
            return
        # search a doubled box independently; no new primes may appear
        top = tuple(2 * t + 1 for t in J.max_exponents())
        found = set()
        for b in box(top):
            if contains_monomial(J, b):
                continue
            P = as_monomial_prime(colon_monomial(J, b))
            if P is not None:
                found.add(P)
        assert sorted(found) == associated_primes(J)

    def test_localization(self):
        J = I("(x^2*y^3)")
        assert localize_at_prime(J, MonomialPrime((0,))) == MonomialIdeal.principal((2,))
        assert localize_at_prime(J, MonomialPrime((1,))) == MonomialIdeal.principal((3,))
