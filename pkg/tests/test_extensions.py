import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shilov.core import LogValue, Polynomial, parse_polynomial
from shilov.extensions import (
    FreeExtension,
    RatFunc,
    basis_gauge_limit,
    closedness_probe,
    cusp,
    from_json,
    integral_equation_upper_bound,
    isometry_check,
    lattice_norm,
    min_poly,
    monogenic,
    pad_equation,
    spectral_norm_ext,
    sqrt_x,
    sqrt_x_plus_one,
    udivmod,
    ugcd,
)
from shilov.seminorms import TateData, spectral_rees
from strategies import polynomials

X = lambda s: parse_polynomial(s, ["x"], laurent=True)
half = LogValue(Fraction(1, 2))

# A[y, z]/(y^2 - x, z^2 - (x + 1)): rank 4, not monogenic by construction
BIQUADRATIC = {
    "basis": ["1", "y", "z", "yz"],
    "table": [
        [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
        [["0", "1", "0", "0"], ["x", "0", "0", "0"], ["0", "0", "0", "1"], ["0", "0", "x", "0"]],
        [["0", "0", "1", "0"], ["0", "0", "0", "1"], ["x + 1", "0", "0", "0"], ["0", "x + 1", "0", "0"]],
        [["0", "0", "0", "1"], ["0", "0", "x", "0"], ["0", "x + 1", "0", "0"], ["x^2 + x", "0", "0", "0"]],
    ],
    "unit": ["1", "0", "0", "0"],
}


class TestUnivariate:
    def test_division_and_gcd(self):
        q, r = udivmod(X("x^3 - 1"), X("x - 1"))
        assert q == X("x^2 + x + 1") and r.is_zero()
        assert ugcd(X("x^2 - 1"), X("x^2 + 2*x + 1")) == X("x + 1")

    def test_ratfunc_normal_form(self):
        r = RatFunc.make(X("2*x^2 - 2"), X("4*x + 4"))
        assert r.num == X("x/2 - 1/2") and r.den == X("1")
        assert r.is_polynomial()


class TestConstruction:
    def test_table_checks(self):
        E = sqrt_x()
        bad = [list(map(list, row)) for row in E.table]
        bad[0][1] = [X("1"), X("1")]
        with pytest.raises(ValueError, match="commutative"):
            FreeExtension(E.labels, tuple(tuple(tuple(c) for c in row) for row in bad), E.unit)
        with pytest.raises(ValueError, match="unit law"):
            FreeExtension(E.labels, E.table, (X("0"), X("1")))

    def test_associativity_check(self):
        data = dict(BIQUADRATIC)
        table = [list(row) for row in data["table"]]
        table[3] = list(table[3])
        table[3][3] = ["x^2", "0", "0", "0"]
        data["table"] = table
        with pytest.raises(ValueError, match="associative"):
            from_json(data)

    def test_json_forms(self):
        E = from_json({"relation": "y^2 - x"})
        assert E.table == sqrt_x().table
        assert from_json(BIQUADRATIC).rank == 4

    def test_parse_element(self):
        E = sqrt_x()
        assert E.parse_element("y^2") == E.scalar(X("x"))
        assert E.parse_element("x*y + 1/x") == (X("1/x"), X("x"))


class TestMinPoly:
    def test_examples(self):
        E = sqrt_x()
        assert min_poly(E, E.parse_element("y")).coefficients == (X("0"), X("-x"))
        assert min_poly(E, E.scalar(X("x^2 + 3"))).coefficients == (X("-x^2 - 3"),)
        F = sqrt_x_plus_one()
        assert min_poly(F, F.parse_element("y")).format() == "T^2 + (-x - 1)"

    def test_rank_four(self):
        E = from_json(BIQUADRATIC)
        f = E.parse_element("y + z")
        mp = min_poly(E, f)
        assert mp.degree == 4
        # (y+z)^2 = 2x + 1 + 2yz, so T^4 - 2(2x+1)T^2 + 1
        assert mp.coefficients == (X("0"), X("-4*x - 2"), X("0"), X("1"))

    def test_laurent_input(self):
        E = sqrt_x()
        mp = min_poly(E, E.parse_element("y/x"))
        assert mp.coefficients == (X("0"), X("-1/x"))

    def test_non_domain_rejected(self):
        E = monogenic([X("0"), X("0")], domain=False)  # y^2 = 0
        with pytest.raises(ValueError):
            min_poly(E, E.parse_element("y"))

    def test_cubic(self):
        E = monogenic([X("-x"), X("0"), X("0")])
        y = E.parse_element("y")
        assert spectral_norm_ext(E, y) == LogValue(Fraction(1, 3))
        # ‖y^m‖ = 2^(-floor(m/3)); along powers of two the bracket narrows but never closes
        br = basis_gauge_limit(E, y, 64)
        assert not br.closed and br.upper == LogValue(Fraction(21, 64))


class TestSpectral:
    def test_examples(self):
        E, F = sqrt_x(), sqrt_x_plus_one()
        assert spectral_norm_ext(E, E.parse_element("y")) == half
        assert spectral_norm_ext(F, F.parse_element("y")) == LogValue.one()
        assert spectral_norm_ext(E, E.parse_element("x")) == LogValue(1)

    def test_lattice_route(self):
        E, F = sqrt_x(), sqrt_x_plus_one()
        br = basis_gauge_limit(E, E.parse_element("y"), 2)
        assert br.closed and br.m_star == 2 and br.upper == half
        br = basis_gauge_limit(F, F.parse_element("y"), 4)
        assert br.closed and br.upper == LogValue.one()
        assert basis_gauge_limit(E, E.scalar(X("x^2 + x^3")), 8).m_star == 1
        assert basis_gauge_limit(E, E.zero(), 8).upper.is_zero

    def test_flags_required(self):
        C = cusp()
        with pytest.raises(ValueError):
            spectral_norm_ext(C, C.parse_element("y"))

    def test_cusp_control(self):
        C = cusp()
        f = C.parse_element("y/x")
        r = closedness_probe(C, [C.parse_element("y"), f])
        assert not r.ok and r.witness == f
        assert lattice_norm(C, f) == LogValue(-1)

    def test_equation_bounds(self):
        E = sqrt_x()
        y = E.parse_element("y")
        mp = min_poly(E, y)
        assert integral_equation_upper_bound(E, y, mp.coefficients) == half
        padded = pad_equation(mp.coefficients, X("x"))
        assert integral_equation_upper_bound(E, y, padded) >= half
        w = E.scalar(X("x"))
        assert integral_equation_upper_bound(E, w, (X("-x"),)) == LogValue(1)
        with pytest.raises(ValueError):
            integral_equation_upper_bound(E, y, (X("0"), X("-x - 1")))

    @given(polynomials(1, emax=5), polynomials(1, emax=5), polynomials(1, emax=5), polynomials(1, emax=5))
    def test_seminorm_properties(self, a, b, c, d):
        E = sqrt_x()
        f, g = (a, b), (c, d)
        if E.is_zero(f) or E.is_zero(g):
            return
        vf, vg = spectral_norm_ext(E, f), spectral_norm_ext(E, g)
        for k in (2, 3):
            assert spectral_norm_ext(E, E.pow(f, k)) == vf ** k
        s = E.add(f, g)
        if not E.is_zero(s):
            assert spectral_norm_ext(E, s) <= max(vf, vg)
        assert spectral_norm_ext(E, E.mul(f, g)) <= vf * vg
        br = basis_gauge_limit(E, f, 8)
        assert br.lower <= br.upper
        assert br.closed and br.m_star <= 4

    def test_isometry(self):
        rng = random.Random(1)
        corpus = [X("x"), X("x + 1")] + [
            Polynomial({(rng.randint(0, 5),): rng.randint(1, 4) for _ in range(2)}, 1) for _ in range(20)
        ]
        for E in (sqrt_x(), sqrt_x_plus_one(), from_json(BIQUADRATIC)):
            assert isometry_check(E, corpus)
        T = TateData.of(1)
        assert spectral_rees(T, X("x + 1")) == LogValue.one()
