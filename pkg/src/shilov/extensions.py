"""Finite free extensions ``B = ⊕ A b_i`` of ``A = Q[x]`` given by multiplication tables.

Elements are coordinate vectors of univariate (possibly Laurent in ``x``)
polynomials. Minimal polynomials come from the first linear dependency in
the Krylov sequence ``1, f, f^2, ...`` over ``Q(x)``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import INF, LogValue, Polynomial, parse_polynomial, value_max
from .seminorms import CheckResult, TateData, ValueBracket, adic_seminorm, power_limit_bracket, spectral_rees

MAX_RANK = 8
MAX_DEGREE = 32

Element = tuple  # tuple[Polynomial, ...]


# ---------------------------------------------------------------------------
# univariate helpers over Q
# ---------------------------------------------------------------------------


def _u(c) -> Polynomial:
    return Polynomial.constant(c, 1)


def udeg(p: Polynomial) -> int:
    return max((e[0] for e in p.exponents()), default=-1)


def ulc(p: Polynomial) -> Fraction:
    return p.coeff((udeg(p),))


def ord_x(p: Polynomial):
    """x-adic order; +inf at 0."""
    return min((e[0] for e in p.exponents()), default=INF)


def udivmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q = Polynomial.zero(1)
    r = a
    db, lb = udeg(b), ulc(b)
    while not r.is_zero() and udeg(r) >= db:
        t = Polynomial.monomial((udeg(r) - db,), ulc(r) / lb)
        q = q + t
        r = r - t * b
    return q, r


def ugcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, udivmod(a, b)[1]
    if a.is_zero():
        return a
    return a * _u(1 / ulc(a))


def _content_gcd(polys) -> Polynomial:
    g = Polynomial.zero(1)
    for p in polys:
        if not p.is_zero():
            g = ugcd(g, p) if not g.is_zero() else p * _u(1 / ulc(p))
    return g


@dataclass(frozen=True)
class RatFunc:
    """Element of ``Q(x)`` in lowest terms with monic denominator."""

    num: Polynomial
    den: Polynomial

    @classmethod
    def make(cls, num: Polynomial, den: Polynomial) -> "RatFunc":
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return cls(num, _u(1))
        g = ugcd(num, den)
        num, r1 = udivmod(num, g)
        den, r2 = udivmod(den, g)
        assert r1.is_zero() and r2.is_zero()
        c = ulc(den)
        return cls(num * _u(1 / c), den * _u(1 / c))

    @classmethod
    def of(cls, p: Polynomial) -> "RatFunc":
        return cls.make(p, _u(1))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, o):
        return RatFunc.make(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        return RatFunc.make(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o):
        return RatFunc.make(self.num * o.num, self.den * o.den)

    def __truediv__(self, o):
        if o.is_zero():
            raise ZeroDivisionError("division by zero in Q(x)")
        return RatFunc.make(self.num * o.den, self.den * o.num)

    def is_polynomial(self) -> bool:
        return udeg(self.den) == 0


def _laurent_shift(p: Polynomial) -> int:
    return max(0, -ord_x(p)) if not p.is_zero() else 0


# ---------------------------------------------------------------------------
# the extension
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FreeExtension:
    labels: tuple[str, ...]
    table: tuple  # table[i][j] = coordinates of b_i * b_j
    unit: Element
    omega_exponent: int = 1
    domain: bool = True
    integrally_closed: bool = True

    def __post_init__(self):
        r = len(self.labels)
        if not 1 <= r <= MAX_RANK:
            raise ValueError(f"rank must be between 1 and {MAX_RANK}")
        if self.omega_exponent < 1:
            raise ValueError("omega exponent must be positive")
        if len(self.table) != r or any(len(row) != r for row in self.table):
            raise ValueError("multiplication table must be r x r")
        for i, j in itertools.product(range(r), repeat=2):
            entry = self.table[i][j]
            if len(entry) != r:
                raise ValueError(f"table entry ({i},{j}) has the wrong length")
            for p in entry:
                if p.nvars != 1 or p.is_laurent() or udeg(p) > MAX_DEGREE:
                    raise ValueError(f"table entry ({i},{j}) must be polynomials in x of degree <= {MAX_DEGREE}")
        for i, j in itertools.product(range(r), repeat=2):
            if self.table[i][j] != self.table[j][i]:
                raise ValueError(f"table is not commutative at ({self.labels[i]}, {self.labels[j]})")
        basis = [self.basis(i) for i in range(r)]
        for i, j, k in itertools.product(range(r), repeat=3):
            if self.mul(self.mul(basis[i], basis[j]), basis[k]) != self.mul(basis[i], self.mul(basis[j], basis[k])):
                raise ValueError(f"table is not associative at ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")
        for i in range(r):
            if self.mul(self.unit, basis[i]) != basis[i]:
                raise ValueError(f"unit law fails on {self.labels[i]}")

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def base_tate(self) -> TateData:
        return TateData(1, (self.omega_exponent,))

    def basis(self, i: int) -> Element:
        return tuple(_u(int(j == i)) for j in range(self.rank))

    def zero(self) -> Element:
        return tuple(_u(0) for _ in range(self.rank))

    def one(self) -> Element:
        return tuple(self.unit)

    def scalar(self, a: Polynomial) -> Element:
        return tuple(a * u for u in self.unit)

    def add(self, u: Element, v: Element) -> Element:
        return tuple(a + b for a, b in zip(u, v))

    def mul(self, u: Element, v: Element) -> Element:
        out = [_u(0)] * self.rank
        for i, a in enumerate(u):
            if a.is_zero():
                continue
            for j, b in enumerate(v):
                if b.is_zero():
                    continue
                ab = a * b
                for k, t in enumerate(self.table[i][j]):
                    if not t.is_zero():
                        out[k] = out[k] + ab * t
        return tuple(out)

    def pow(self, u: Element, k: int) -> Element:
        result = self.one()
        base = u
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def is_zero(self, u: Element) -> bool:
        return all(a.is_zero() for a in u)

    def parse_element(self, text: str) -> Element:
        """Parse an expression in ``x`` and the basis labels, e.g. ``"x + 2*y"``."""
        names = [l for l in self.labels if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", l)]
        if "x" in names:
            raise ValueError("basis label 'x' clashes with the base variable")
        p = parse_polynomial(text, ["x"] + names, laurent=True)
        idx = [self.labels.index(n) for n in names]
        out = self.zero()
        for e, c in p.items():
            if any(k < 0 for k in e[1:]):
                raise ValueError("basis labels cannot carry negative exponents")
            term = self.scalar(Polynomial({(e[0],): c}, 1))
            for k, i in zip(e[1:], idx):
                term = self.mul(term, self.pow(self.basis(i), k))
            out = self.add(out, term)
        return out

    def format_element(self, u: Element) -> str:
        parts = []
        for label, a in zip(self.labels, u):
            if a.is_zero():
                continue
            s = a.format(["x"])
            if label in ("1",):
                parts.append(f"({s})")
            else:
                parts.append(f"({s})*{label}")
        return " + ".join(parts) or "0"


def monogenic(relation: Sequence[Polynomial], label: str = "y", **flags) -> FreeExtension:
    """``A[y]/(y^r + c_{r-1} y^(r-1) + ... + c_0)`` from ``relation = [c_0, ..., c_{r-1}]``."""
    r = len(relation)
    labels = ("1",) + tuple(label if k == 1 else f"{label}{k}" for k in range(1, r))

    def reduce(power: int):
        # coordinates of y^power in the basis 1, y, ..., y^(r-1)
        vec = [_u(0)] * r
        if power < r:
            vec[power] = _u(1)
            return vec
        prev = reduce(power - 1)
        # y * (sum v_k y^k) with y^r = -sum c_k y^k
        top = prev[r - 1]
        vec = [_u(0)] + prev[: r - 1]
        return [v - top * c for v, c in zip(vec, relation)]

    table = tuple(tuple(tuple(reduce(i + j)) for j in range(r)) for i in range(r))
    unit = tuple(_u(int(k == 0)) for k in range(r))
    return FreeExtension(labels, table, unit, **flags)


def from_json(data: dict) -> FreeExtension:
    """Build an extension from ``{"basis", "table", "unit", "omega_exponent", flags}``.

    ``"relation": "y^2 - x"`` may replace basis/table/unit for monogenic input.
    """
    flags = {
        "omega_exponent": int(data.get("omega_exponent", 1)),
        "domain": bool(data.get("domain", True)),
        "integrally_closed": bool(data.get("integrally_closed", True)),
    }
    if "relation" in data:
        label = data.get("generator", "y")
        rel = parse_polynomial(data["relation"], ["x", label])
        r = max(e[1] for e in rel.exponents())
        if rel.coeff((0, r)) == 0 or any(e[1] == r and e[0] > 0 for e in rel.exponents()):
            raise ValueError("relation must be monic in the generator")
        lead = rel.coeff((0, r))
        coeffs = []
        for k in range(r):
            coeffs.append(Polynomial({(e[0],): c / lead for e, c in rel.items() if e[1] == k}, 1))
        return monogenic(coeffs, label, **flags)
    labels = tuple(data["basis"])
    P = lambda s: parse_polynomial(str(s), ["x"])
    table = tuple(tuple(tuple(P(s) for s in entry) for entry in row) for row in data["table"])
    unit = tuple(P(s) for s in data["unit"])
    return FreeExtension(labels, table, unit, **flags)


# ---------------------------------------------------------------------------
# minimal polynomials
# ---------------------------------------------------------------------------


def _echelon(cols: list[list[Polynomial]]):
    """Fraction-free row echelon form of the matrix with the given columns.

    Rows are combined as ``p * row_i - q * row_j`` and divided by the gcd of
    their entries after each step. Returns (rows, pivot columns).
    """
    nrows = len(cols[0])
    ncols = len(cols)
    m = [[cols[c][r] for c in range(ncols)] for r in range(nrows)]
    pivots = []
    row = 0
    for c in range(ncols):
        piv = next((r for r in range(row, nrows) if not m[r][c].is_zero()), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        p = m[row][c]
        for r in range(row + 1, nrows):
            q = m[r][c]
            if q.is_zero():
                continue
            new = [p * x - q * y for x, y in zip(m[r], m[row])]
            g = _content_gcd(new)
            if not g.is_zero() and udeg(g) > 0:
                new = [udivmod(x, g)[0] for x in new]
            m[r] = new
        pivots.append(c)
        row += 1
        if row == nrows:
            break
    return m, pivots


def _krylov_dependency(cols: list[list[Polynomial]]) -> Optional[list[RatFunc]]:
    """Coefficients ``c`` over Q(x) with ``sum_i c_i col_i = col_last``, or None if independent."""
    m, pivots = _echelon(cols)
    k = len(cols) - 1
    if k in pivots:
        return None
    assert pivots == list(range(k)), "earlier Krylov vectors must be independent"
    coeffs: list[Optional[RatFunc]] = [None] * k
    for i in range(k - 1, -1, -1):
        acc = RatFunc.of(m[i][k])
        for j in range(i + 1, k):
            acc = acc - RatFunc.of(m[i][j]) * coeffs[j]
        coeffs[i] = acc / RatFunc.of(m[i][i])
    return coeffs


@dataclass(frozen=True)
class MinimalPolynomial:
    """``T^n + a_1 T^(n-1) + ... + a_n``; ``coefficients = (a_1, ..., a_n)``."""

    coefficients: tuple[Polynomial, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def format(self, var: str = "T") -> str:
        n = self.degree
        parts = [f"{var}^{n}" if n > 1 else var]
        for i, a in enumerate(self.coefficients, start=1):
            if a.is_zero():
                continue
            k = n - i
            tpow = "" if k == 0 else (f"*{var}" if k == 1 else f"*{var}^{k}")
            parts.append(f"({a.format(['x'])}){tpow}")
        return " + ".join(parts)

    def to_json(self) -> list[str]:
        return [a.format(["x"]) for a in self.coefficients]


def _require_domain(E: FreeExtension):
    if not E.domain:
        raise ValueError("minimal polynomials need the domain flag")


def min_poly(E: FreeExtension, f: Element) -> MinimalPolynomial:
    """Minimal polynomial of ``f`` over ``Q(x)``; coefficients checked to lie in ``A[1/x]``.

    For ``f ∈ B`` the coefficients must lie in ``A`` (normality of ``A``);
    anything else signals an inconsistent table or a false domain flag.
    """
    _require_domain(E)
    shift = max((_laurent_shift(a) for a in f), default=0)
    g = tuple(a.shift((shift,)) for a in f)
    cols = [list(E.one())]
    power = E.one()
    coeffs = None
    for k in range(1, E.rank + 1):
        power = E.mul(power, g)
        cols.append(list(power))
        coeffs = _krylov_dependency(cols)
        if coeffs is not None:
            break
    assert coeffs is not None, "Krylov sequence must become dependent by the rank"
    n = len(coeffs)
    # g^n = sum c_i g^i  =>  a_{n-i} = -c_i
    out = []
    for i in range(1, n + 1):
        c = coeffs[n - i]
        if not c.is_polynomial():
            raise ValueError("minimal polynomial coefficient is not in A: inconsistent table or domain flag")
        a = -c.num * _u(1 / ulc(c.den))
        out.append(a.shift((-shift * i,)))
    mp = MinimalPolynomial(tuple(out))
    if not E.is_zero(evaluate_equation(E, f, mp.coefficients)):
        raise ValueError("computed minimal polynomial does not annihilate the element")
    return mp


def evaluate_equation(E: FreeExtension, f: Element, coeffs: Sequence[Polynomial]) -> Element:
    """``f^n + a_1 f^(n-1) + ... + a_n`` computed in ``B[1/x]``."""
    n = len(coeffs)
    acc = E.pow(f, n)
    for i, a in enumerate(coeffs, start=1):
        acc = E.add(acc, E.mul(E.scalar(a), E.pow(f, n - i)))
    return acc


def _coefficient_bound(E: FreeExtension, coeffs: Sequence[Polynomial]) -> LogValue:
    TA = E.base_tate
    return value_max(spectral_rees(TA, a).root(i) for i, a in enumerate(coeffs, start=1))


def _require_flags(E: FreeExtension):
    if not (E.domain and E.integrally_closed):
        raise ValueError("spectral formula needs the domain and integrally-closed flags")


def spectral_norm_ext(E: FreeExtension, f: Element) -> LogValue:
    """``|f|_spc = max_i |a_i|^(1/i)`` over the minimal polynomial coefficients."""
    _require_flags(E)
    return _coefficient_bound(E, min_poly(E, f).coefficients)


def integral_equation_upper_bound(E: FreeExtension, f: Element, coeffs: Sequence[Polynomial]) -> LogValue:
    """``max_i |a_i|^(1/i)`` for an equation of integral dependence satisfied by ``f``."""
    if not E.is_zero(evaluate_equation(E, f, coeffs)):
        raise ValueError("the equation does not annihilate f")
    return _coefficient_bound(E, coeffs)


def pad_equation(coeffs: Sequence[Polynomial], root: Polynomial) -> tuple[Polynomial, ...]:
    """Coefficients of ``(T^n + a_1 T^(n-1) + ... + a_n) * (T - root)``."""
    full = [_u(1)] + list(coeffs) + [_u(0)]
    out = [full[0]]
    for i in range(1, len(full)):
        out.append(full[i] - root * full[i - 1])
    return tuple(out[1:])


def lattice_norm(E: FreeExtension, f: Element) -> LogValue:
    """``‖f‖ = max`` over coordinates of the ϖ-adic value: the gauge of ``B`` itself."""
    TA = E.base_tate
    return value_max(adic_seminorm(TA, a) for a in f)


def basis_gauge_limit(E: FreeExtension, f: Element, M: int) -> ValueBracket:
    """``‖f^m‖^(1/m)`` along ``m = 1, 2, 4, ...`` against the minimal-polynomial value."""
    lower = spectral_norm_ext(E, f)
    return power_limit_bracket(lower, lambda g: lattice_norm(E, g), _Elem(E, f), M)


class _Elem:
    """Wrapper so the shared power scan can square extension elements."""

    __slots__ = ("E", "v")

    def __init__(self, E, v):
        self.E, self.v = E, v

    def __mul__(self, other):
        return _Elem(self.E, self.E.mul(self.v, other.v))

    def __iter__(self):
        return iter(self.v)


def isometry_check(E: FreeExtension, corpus: Sequence[Polynomial]) -> CheckResult:
    """``|a·1_B|_spc`` in ``B`` equals ``|a|_spc`` in ``A`` for each base element."""
    TA = E.base_tate
    for count, a in enumerate(corpus, start=1):
        if spectral_norm_ext(E, E.scalar(a)) != spectral_rees(TA, a):
            return CheckResult(False, count, a)
    return CheckResult(True, len(corpus))


def closedness_probe(E: FreeExtension, candidates: Sequence[Element]) -> CheckResult:
    """Look for ``f`` with ``|f|_spc <= 1`` but ``‖f‖ > 1``.

    Such an ``f`` is power-bounded without lying in ``B``, so ``B`` is not
    integrally closed in ``B[1/x]`` and the integrally-closed flag is false.
    The value uses the minimal-polynomial formula regardless of the flag.
    """
    _require_domain(E)
    for count, f in enumerate(candidates, start=1):
        spc = _coefficient_bound(E, min_poly(E, f).coefficients)
        if spc <= LogValue.one() and lattice_norm(E, f) > LogValue.one():
            return CheckResult(False, count, f, f"|f|_spc = {spc} but ‖f‖ = {lattice_norm(E, f)}")
    return CheckResult(True, len(candidates))


# shipped examples
def sqrt_x(**flags) -> FreeExtension:
    """``A[y]/(y^2 - x)``."""
    return monogenic([-Polynomial.monomial((1,)), _u(0)], **flags)


def sqrt_x_plus_one(**flags) -> FreeExtension:
    """``A[y]/(y^2 - (x + 1))``."""
    return monogenic([-(Polynomial.monomial((1,)) + 1), _u(0)], **flags)


def cusp(**flags) -> FreeExtension:
    """``A[y]/(y^2 - x^3)``: not integrally closed (``y/x`` is integral)."""
    flags.setdefault("integrally_closed", False)
    return monogenic([-Polynomial.monomial((3,)), _u(0)], **flags)
