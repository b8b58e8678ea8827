"""Exact arithmetic foundation: log-space values, sparse Laurent polynomials, parser.

Every seminorm value handled by the package has the form ``2^(-q)`` with ``q``
rational (or ``q = +inf`` for the value 0), so values are stored through their
exponent and never as floats.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator, Mapping, Sequence, Union

INF = math.inf

Exponent = tuple[int, ...]
Number = Union[int, Fraction]


def fmt_rational(q) -> str:
    """Canonical string for an exact rational or +inf ("7/6", "-2", "inf")."""
    if q == INF:
        return "inf"
    return str(Fraction(q))


def parse_rational(text: str):
    text = text.strip()
    if text in ("inf", "+inf"):
        return INF
    return Fraction(text)


# ---------------------------------------------------------------------------
# LogValue
# ---------------------------------------------------------------------------


@total_ordering
@dataclass(frozen=True)
class LogValue:
    """The nonnegative real ``2^(-exponent)``; ``exponent = inf`` is the value 0.

    Ordering is the ordering of the represented values, which reverses the
    ordering of exponents.
    """

    exponent: Union[Fraction, float]

    def __post_init__(self):
        e = self.exponent
        if e == INF:
            object.__setattr__(self, "exponent", INF)
        elif isinstance(e, float):
            raise TypeError("LogValue exponents must be exact rationals or inf")
        else:
            object.__setattr__(self, "exponent", Fraction(e))

    @classmethod
    def zero(cls) -> "LogValue":
        return cls(INF)

    @classmethod
    def one(cls) -> "LogValue":
        return cls(Fraction(0))

    @property
    def is_zero(self) -> bool:
        return self.exponent == INF

    def __mul__(self, other: "LogValue") -> "LogValue":
        return logvalue_mul(self, other)

    def __pow__(self, k: int) -> "LogValue":
        if k < 0:
            raise ValueError("negative powers of LogValue are not supported")
        if self.is_zero:
            return self if k > 0 else LogValue.one()
        return LogValue(self.exponent * k)

    def root(self, k: int) -> "LogValue":
        return logvalue_root(self, k)

    def __lt__(self, other: "LogValue") -> bool:
        if not isinstance(other, LogValue):
            return NotImplemented
        return self.exponent > other.exponent

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.exponent == 0:
            return "1"
        return f"2^({fmt_rational(-self.exponent)})"

    def to_json(self) -> dict:
        return {"log2_exponent": fmt_rational(self.exponent)}

    @classmethod
    def from_json(cls, data: Mapping) -> "LogValue":
        return cls(parse_rational(data["log2_exponent"]))


def logvalue_mul(a: LogValue, b: LogValue) -> LogValue:
    if a.is_zero or b.is_zero:
        return LogValue.zero()
    return LogValue(a.exponent + b.exponent)


def logvalue_root(a: LogValue, k: int) -> LogValue:
    if k < 1:
        raise ValueError(f"root index must be positive, got {k}")
    if a.is_zero:
        return a
    return LogValue(a.exponent / k)


def value_max(values: Iterable[LogValue]) -> LogValue:
    """Maximum of values; the empty maximum is 0."""
    best = LogValue.zero()
    for v in values:
        if v > best:
            best = v
    return best


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


def _grlex_key(e: Exponent):
    return (sum(e), e)


class Polynomial:
    """Sparse Laurent polynomial with rational coefficients in ``nvars`` variables.

    Terms are kept in graded-lex order, largest first, with no zero
    coefficients. Instances are treated as immutable.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], Number] | None = None, nvars: int = 1):
        if nvars < 1:
            raise ValueError("a polynomial needs at least one variable")
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have length {nvars}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        self.nvars = nvars
        self._terms = dict(sorted(clean.items(), key=lambda t: _grlex_key(t[0]), reverse=True))
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls({}, nvars)

    @classmethod
    def constant(cls, c: Number, nvars: int) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: Number = 1) -> "Polynomial":
        return cls({tuple(exponent): coeff}, len(exponent))

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(e)

    # inspection
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def exponents(self) -> list[Exponent]:
        return list(self._terms)

    def coeff(self, e: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return self.is_zero() or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def is_laurent(self) -> bool:
        """True when some exponent entry is negative."""
        return any(x < 0 for e in self._terms for x in e)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self._terms.items())))
        return self._hash

    # arithmetic
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(out, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            return Polynomial({tuple(k * x for x in e): Fraction(1) / c ** (-k)}, self.nvars)
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, b: Sequence[int]) -> "Polynomial":
        """Multiply by the monomial ``x^b`` (``b`` may be negative)."""
        return Polynomial({tuple(x + y for x, y in zip(e, b)): c for e, c in self._terms.items()}, self.nvars)

    def min_exponents(self) -> Exponent:
        """Componentwise minimum of the term exponents."""
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return tuple(min(col) for col in zip(*self._terms))

    def format(self, variables: Sequence[str] | None = None) -> str:
        return format_polynomial(self, variables)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r}, nvars={self.nvars})"

    def __str__(self) -> str:
        return format_polynomial(self)


def default_variables(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i}" for i in range(1, n + 1)]


def format_monomial(e: Sequence[int], variables: Sequence[str]) -> str:
    parts = []
    for name, k in zip(variables, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, variables: Sequence[str] | None = None) -> str:
    """Canonical printer: graded-lex order, explicit ``*`` and ``^``."""
    if variables is None:
        variables = default_variables(p.nvars)
    if p.is_zero():
        return "0"
    out = []
    for i, (e, c) in enumerate(p.items()):
        mono = format_monomial(e, variables)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = fmt_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{fmt_rational(a)}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class ParseError(ValueError):
    """Malformed expression; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position
        self.text = text


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*/^(),":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str], laurent: bool):
        self.text = text
        self.names = {name: i for i, name in enumerate(variables)}
        if len(self.names) != len(variables):
            raise ValueError(f"duplicate variable names in {list(variables)}")
        self.n = len(variables)
        self.laurent = laurent
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def expect(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            self.error(f"expected {op!r}", tok)
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()
            q = self.unary()
            if op[1] == "*":
                p = p * q
            else:
                if q.is_zero():
                    self.error("division by zero", op)
                if q.is_constant():
                    p = p * Polynomial.constant(1 / q.coeff((0,) * self.n), self.n)
                elif self.laurent and q.is_monomial():
                    p = p * q ** -1
                else:
                    self.error("division is only allowed by a nonzero constant or, in Laurent input, a monomial", op)
        return p

    def unary(self) -> Polynomial:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            sign = 1
            if self.peek()[:2] == ("op", "-"):
                sign_tok = self.take()
                sign = -1
            tok = self.take()
            if tok[0] != "num":
                self.error("expected an integer exponent", tok)
            k = sign * int(tok[1])
            if k < 0:
                if not self.laurent:
                    self.error("negative exponents are not allowed here", sign_tok)
                if not base.is_monomial():
                    self.error("only monomials can be raised to negative powers", sign_tok)
            return base ** k
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            return Polynomial.constant(int(val), self.n)
        if kind == "name":
            if val not in self.names:
                raise ParseError(f"unknown variable {val!r}", pos, self.text)
            return Polynomial.variable(self.names[val], self.n)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected token {val!r}", tok)


def parse_polynomial(text: str, variables: Sequence[str], laurent: bool = False) -> Polynomial:
    """Parse an arithmetic expression over ``variables`` into a Polynomial.

    Supports integer literals, ``+ - * ^``, parentheses and division by
    nonzero constants (so printed rationals like ``3/2*x`` read back).
    With ``laurent=True`` monomials may carry negative integer exponents.

    >>> parse_polynomial("x^2*y + 3", ["x", "y"]).terms
    {(2, 1): Fraction(1, 1), (0, 0): Fraction(3, 1)}
    """
    if not variables:
        raise ValueError("at least one variable name is required")
    return _Parser(text, list(variables), laurent).parse()


def split_variables(spec: str) -> list[str]:
    names = [v.strip() for v in spec.split(",") if v.strip()]
    if not names:
        raise ValueError("empty variable list")
    return names
