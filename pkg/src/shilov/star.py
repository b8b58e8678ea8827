"""ϖ-fractional monomial ideals, residuals, v/t-closures and divisors.

A fractional ideal is stored as ``ϖ^(-shift) * J`` with ``J ⊆ A`` a monomial
ideal and ``shift`` minimal, which makes the representation unique. Internally
most operations work on the Laurent generators ``g - shift * omega``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .core import Exponent, ParseError, Polynomial
from .monomial import MonomialIdeal, divides, minimalize, parse_ideal
from .polyhedra import integral_closure
from .seminorms import CheckResult, TateData


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class FractionalMonomialIdeal:
    """The A-submodule ``ϖ^(-shift) * ideal`` of ``A[1/ϖ]``."""

    omega: Exponent
    shift: int
    ideal: MonomialIdeal

    def __post_init__(self):
        a = tuple(self.omega)
        if self.ideal.nvars != len(a):
            raise ValueError("ideal and omega have different variable counts")
        if self.ideal.is_zero:
            raise ValueError("the zero module is not a fractional ideal")
        supp = [i for i, x in enumerate(a) if x]
        if not any(all(g[j] == 0 for j in range(len(a)) if j not in supp) for g in self.ideal.generators):
            raise ValueError("module is not open: it contains no power of omega")
        # canonical form: strip common factors of omega
        shift, gens = self.shift, self.ideal.generators
        while all(divides(a, g) for g in gens):
            gens = tuple(tuple(x - y for x, y in zip(g, a)) for g in gens)
            shift -= 1
        object.__setattr__(self, "omega", a)
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "ideal", MonomialIdeal(gens, len(a)))

    @property
    def nvars(self) -> int:
        return len(self.omega)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.omega) if x)

    @classmethod
    def base(cls, omega: Sequence[int]) -> "FractionalMonomialIdeal":
        """The ring ``A`` itself."""
        return cls(tuple(omega), 0, MonomialIdeal.unit(len(omega)))

    @classmethod
    def of_ideal(cls, omega: Sequence[int], I: MonomialIdeal) -> "FractionalMonomialIdeal":
        return cls(tuple(omega), 0, I)

    @classmethod
    def omega_power(cls, omega: Sequence[int], k: int) -> "FractionalMonomialIdeal":
        """``ϖ^k A`` for any integer ``k``."""
        return cls(tuple(omega), -k, MonomialIdeal.unit(len(omega)))

    @classmethod
    def from_laurent(cls, omega: Sequence[int], vectors: Iterable[Sequence[int]]) -> "FractionalMonomialIdeal":
        """Module generated by the Laurent monomials ``x^v``."""
        a = tuple(omega)
        supp = [i for i, x in enumerate(a) if x]
        vs = minimalize(vectors)
        if not vs:
            raise ValueError("the zero module is not a fractional ideal")
        for v in vs:
            if any(v[j] < 0 for j in range(len(a)) if j not in supp):
                raise ValueError(f"Laurent exponent {v} is not in A[1/omega]")
        k = max(max(_ceil_div(-v[i], a[i]) for i in supp) for v in vs)
        gens = tuple(tuple(x + k * y for x, y in zip(v, a)) for v in vs)
        return cls(a, k, MonomialIdeal(gens, len(a)))

    def laurent_generators(self) -> tuple[Exponent, ...]:
        return tuple(tuple(x - self.shift * y for x, y in zip(g, self.omega)) for g in self.ideal.generators)

    def contains_laurent(self, e: Sequence[int]) -> bool:
        return any(divides(v, e) for v in self.laurent_generators())

    def contains_element(self, f: Polynomial) -> bool:
        return all(self.contains_laurent(e) for e in f.exponents())

    def generator_count(self) -> int:
        return len(self.ideal.generators)

    def is_integral(self) -> bool:
        return self.shift <= 0

    def format(self, variables: Sequence[str] | None = None) -> str:
        body = self.ideal.format(variables)
        if self.shift == 0:
            return body
        return f"w^{-self.shift} * {body}"

    def __str__(self) -> str:
        return self.format()

    def to_json(self) -> dict:
        return {"omega": list(self.omega), "shift": self.shift, "ideal": self.ideal.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "FractionalMonomialIdeal":
        a = tuple(data["omega"])
        return cls(a, int(data["shift"]), MonomialIdeal(tuple(tuple(g) for g in data["ideal"]), len(a)))


def _same_ring(I: FractionalMonomialIdeal, J: FractionalMonomialIdeal):
    if I.omega != J.omega:
        raise ValueError(f"fractional ideals over different omegas: {I.omega} vs {J.omega}")


def frac_product(I: FractionalMonomialIdeal, J: FractionalMonomialIdeal) -> FractionalMonomialIdeal:
    _same_ring(I, J)
    vs = [tuple(x + y for x, y in zip(u, v)) for u in I.laurent_generators() for v in J.laurent_generators()]
    return FractionalMonomialIdeal.from_laurent(I.omega, vs)


def frac_sum(I: FractionalMonomialIdeal, J: FractionalMonomialIdeal) -> FractionalMonomialIdeal:
    _same_ring(I, J)
    return FractionalMonomialIdeal.from_laurent(I.omega, I.laurent_generators() + J.laurent_generators())


def frac_intersect(I: FractionalMonomialIdeal, J: FractionalMonomialIdeal) -> FractionalMonomialIdeal:
    _same_ring(I, J)
    vs = [tuple(max(x, y) for x, y in zip(u, v)) for u in I.laurent_generators() for v in J.laurent_generators()]
    return FractionalMonomialIdeal.from_laurent(I.omega, vs)


def frac_subset(I: FractionalMonomialIdeal, J: FractionalMonomialIdeal) -> bool:
    _same_ring(I, J)
    return all(J.contains_laurent(u) for u in I.laurent_generators())


def residual(I: FractionalMonomialIdeal, J: FractionalMonomialIdeal) -> FractionalMonomialIdeal:
    """``I : J = {f ∈ A[1/ϖ] : f J ⊆ I}``.

    For one Laurent generator ``h`` of ``J`` the colon is generated by
    ``g - h`` over the generators ``g`` of ``I`` (untruncated), clipped at 0
    off the support of ``ϖ``; the residual is the intersection over ``h``.
    """
    _same_ring(I, J)
    supp = set(I.support)
    n = I.nvars
    current: Optional[list] = None
    for h in J.laurent_generators():
        piece = [
            tuple(g[i] - h[i] if i in supp else max(g[i] - h[i], 0) for i in range(n))
            for g in I.laurent_generators()
        ]
        if current is None:
            current = list(minimalize(piece))
        else:
            current = list(minimalize(tuple(max(x, y) for x, y in zip(u, v)) for u in current for v in piece))
    return FractionalMonomialIdeal.from_laurent(I.omega, current)


def inverse(I: FractionalMonomialIdeal) -> FractionalMonomialIdeal:
    """``A : I``."""
    return residual(FractionalMonomialIdeal.base(I.omega), I)


def v_closure(I: FractionalMonomialIdeal) -> FractionalMonomialIdeal:
    return inverse(inverse(I))


def t_closure(I: FractionalMonomialIdeal) -> FractionalMonomialIdeal:
    """Union of ``F_v`` over finitely generated ``F ⊆ I``.

    Every represented module is finitely generated, so ``F = I`` is the
    largest term of the union and ``I_t = I_v``.
    """
    assert I.generator_count() > 0
    return v_closure(I)


def is_divisorial(I: FractionalMonomialIdeal) -> bool:
    return v_closure(I) == I


def is_invertible(I: FractionalMonomialIdeal) -> bool:
    return frac_product(I, inverse(I)) == FractionalMonomialIdeal.base(I.omega)


def closure_op(I: FractionalMonomialIdeal) -> FractionalMonomialIdeal:
    """Integral closure of ``I`` in ``A[1/ϖ]``: ``ϖ^(-m)`` times the closure of ``J``."""
    return FractionalMonomialIdeal(I.omega, I.shift, integral_closure(I.ideal))


def identity_op(I: FractionalMonomialIdeal) -> FractionalMonomialIdeal:
    return I


def add_base_op(I: FractionalMonomialIdeal) -> FractionalMonomialIdeal:
    """``I ↦ I + A``: satisfies axioms (1)-(3) and ``A* = A`` but not (4)."""
    return frac_sum(I, FractionalMonomialIdeal.base(I.omega))


StarOp = Callable[[FractionalMonomialIdeal], FractionalMonomialIdeal]

STRICT_OPERATIONS: dict[str, StarOp] = {
    "identity": identity_op,
    "v": v_closure,
    "t": t_closure,
    "integral-closure": closure_op,
}


# ---------------------------------------------------------------------------
# divisors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Divisor:
    """Class of fractional ideals with the same v-closure, kept as that closure."""

    representative: FractionalMonomialIdeal

    def __post_init__(self):
        if not is_divisorial(self.representative):
            raise ValueError("divisor representatives must be divisorial")

    @classmethod
    def of(cls, I: FractionalMonomialIdeal) -> "Divisor":
        return cls(v_closure(I))

    @classmethod
    def zero(cls, omega: Sequence[int]) -> "Divisor":
        return cls(FractionalMonomialIdeal.base(omega))

    def __add__(self, other: "Divisor") -> "Divisor":
        return divisor_add(self, other)

    def __neg__(self) -> "Divisor":
        return Divisor.of(inverse(self.representative))

    def __le__(self, other: "Divisor") -> bool:
        return divisor_le(self, other)


def divisor_add(d1: Divisor, d2: Divisor) -> Divisor:
    return Divisor.of(frac_product(d1.representative, d2.representative))


def divisor_sup(d1: Divisor, d2: Divisor) -> Divisor:
    return Divisor.of(frac_intersect(d1.representative, d2.representative))


def divisor_inf(d1: Divisor, d2: Divisor) -> Divisor:
    return Divisor.of(frac_sum(d1.representative, d2.representative))


def divisor_le(d1: Divisor, d2: Divisor) -> bool:
    return frac_subset(inverse(d1.representative), inverse(d2.representative))


# ---------------------------------------------------------------------------
# corpus checks
# ---------------------------------------------------------------------------


def star_axioms_check(op: StarOp, corpus: Sequence[FractionalMonomialIdeal], strict: bool = True) -> CheckResult:
    """Check extension, monotonicity, idempotence and ``J I* ⊆ (JI)*``.

    Also ``A* = A`` when ``strict``. Witnesses are ``(axiom, I, J)``.
    """
    corpus = list(corpus)
    count = 0
    images = [op(I) for I in corpus]
    if strict and corpus:
        A = FractionalMonomialIdeal.base(corpus[0].omega)
        count += 1
        if op(A) != A:
            return CheckResult(False, count, ("strict", A, None))
    for I, Is in zip(corpus, images):
        count += 2
        if not frac_subset(I, Is):
            return CheckResult(False, count, ("1", I, None))
        if op(Is) != Is:
            return CheckResult(False, count, ("3", I, None))
    for I, Is in zip(corpus, images):
        for J, Js in zip(corpus, images):
            count += 2
            if frac_subset(I, J) and not frac_subset(Is, Js):
                return CheckResult(False, count, ("2", I, J))
            if not frac_subset(frac_product(J, Is), op(frac_product(J, I))):
                return CheckResult(False, count, ("4", I, J))
    return CheckResult(True, count)


def coarsest_check(op: StarOp, corpus: Iterable[FractionalMonomialIdeal]) -> CheckResult:
    """``I* ⊆ I_v`` on every corpus member."""
    count = 0
    for I in corpus:
        count += 1
        if not frac_subset(op(I), v_closure(I)):
            return CheckResult(False, count, I)
    return CheckResult(True, count)


def localized_tate(T: TateData, variables: Sequence[int]) -> TateData:
    a = tuple(T.omega[i] for i in variables)
    return TateData(len(a), a)


def wass_t_ideal_check(T: TateData, primes=None) -> CheckResult:
    """Each weakly associated prime ``P`` of ``ϖ`` gives a t-closed ``P A_P``.

    ``primes`` overrides the prime list (used for negative controls).
    """
    from .monomial import associated_primes

    if primes is None:
        primes = associated_primes(T.omega_ideal())
    count = 0
    for P in primes:
        count += 1
        TP = localized_tate(T, P.variables)
        m = FractionalMonomialIdeal.of_ideal(TP.omega, MonomialIdeal.maximal(range(TP.nvars), TP.nvars))
        if t_closure(m) != m:
            return CheckResult(False, count, P, f"maximal ideal of the localization at {P.variables} is not t-closed")
    return CheckResult(True, count)


def _monomial_exponent(T: TateData, f) -> Exponent:
    if isinstance(f, Polynomial):
        if not f.is_monomial():
            raise ValueError("only monomial elements are supported")
        f = f.exponents()[0]
    f = tuple(f)
    if len(f) != T.nvars or any(x < 0 for x in f):
        raise ValueError(f"{f} is not a monomial of A")
    return f


def _f_omega_ideal(T: TateData, f, n: int) -> FractionalMonomialIdeal:
    if n < 1:
        raise ValueError("n must be positive")
    b = _monomial_exponent(T, f)
    return FractionalMonomialIdeal.of_ideal(T.omega, MonomialIdeal((b, tuple(n * x for x in T.omega)), T.nvars))


def v_mult_instance(T: TateData, f, n: int) -> CheckResult:
    """``((f, ϖ^n) (A : (f, ϖ^n)))_v = A``."""
    I = _f_omega_ideal(T, f, n)
    J = inverse(I)
    ok = v_closure(frac_product(I, J)) == FractionalMonomialIdeal.base(T.omega)
    return CheckResult(ok, 1, None if ok else I)


def fc_instance(T: TateData, f, n: int) -> int:
    """Minimal generator count of ``A : (f, ϖ^n)``."""
    return inverse(_f_omega_ideal(T, f, n)).generator_count()


# ---------------------------------------------------------------------------
# text syntax
# ---------------------------------------------------------------------------

_PREFIX = re.compile(r"\s*w\s*(?:\^\s*(-?\s*\d+))?\s*\*\s*")


def parse_fractional(text: str, variables: Sequence[str], omega: Sequence[int]) -> FractionalMonomialIdeal:
    """Parse ``"w^-2 * (x^3, x*y)"`` where ``w`` stands for ϖ."""
    if "w" in variables:
        raise ValueError("'w' is reserved for omega in fractional-ideal syntax")
    m = _PREFIX.match(text)
    k = 0
    rest = text
    offset = 0
    if m:
        k = int(m.group(1).replace(" ", "")) if m.group(1) else 1
        rest = text[m.end():]
        offset = m.end()
    try:
        J = parse_ideal(rest, variables)
    except ParseError as exc:
        raise ParseError(exc.message, exc.position + offset, text) from None
    if len(omega) != len(variables):
        raise ValueError("omega and variable list differ in length")
    return FractionalMonomialIdeal(tuple(omega), -k, J)
