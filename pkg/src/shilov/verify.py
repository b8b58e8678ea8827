"""Seeded verification suites for the equivalence theorems.

Each suite draws its own corpus from ``rng_for(seed, suite)`` and returns a
:class:`SuiteResult`. A suite passes when it finds no witness; the first few
witnesses are kept for the report.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

from .core import LogValue, Polynomial
from .corpus import (
    random_fractional,
    random_ideal,
    random_monomial,
    random_polynomial,
    random_tate,
    random_univariate,
    rng_for,
)
from .extensions import (
    basis_gauge_limit,
    closedness_probe,
    cusp,
    integral_equation_upper_bound,
    isometry_check,
    lattice_norm,
    min_poly,
    pad_equation,
    spectral_norm_ext,
    sqrt_x,
    sqrt_x_plus_one,
)
from .monomial import contains_monomial
from .rees import box_points_by_degree, in_closure_of_power, rees_valuations, samuel, samuel_bruteforce
from .ringclass import (
    BivariateOracle,
    DVROracle,
    SemigroupOracle,
    classify,
    min_primes_omega,
    omega_membership_via_localizations,
    valuative_probe,
    wass_omega,
)
from .seminorms import GaugeMonoid, TateData, gauge, is_boundary, omega_valuations, spectral_limit, spectral_rees
from .star import (
    STRICT_OPERATIONS,
    Divisor,
    FractionalMonomialIdeal,
    add_base_op,
    coarsest_check,
    divisor_inf,
    divisor_sup,
    inverse,
    star_axioms_check,
    v_closure,
    wass_t_ideal_check,
)

MAX_WITNESSES = 5


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 7
    corpus: int = 50
    max_vars: int = 3
    max_exp: int = 6
    M: int = 64
    probe_bound: int = 20

    def __post_init__(self):
        for name in ("corpus", "max_vars", "max_exp", "M", "probe_bound"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


@dataclass
class SuiteResult:
    suite: str
    checked: int = 0
    witnesses: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.witnesses

    def witness(self, text: str):
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(text)
        else:
            self.notes["more_witnesses"] = True

    def to_json(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


def suite_samuel_closure(cfg: VerifyConfig) -> SuiteResult:
    """``f ∈ closure(I^n) ⟺ samuel(I, f) >= n`` and soundness of the brute-force bracket."""
    res = SuiteResult("samuel-closure")
    rng = rng_for(cfg.seed, res.suite)
    closed = 0
    for _ in range(cfg.corpus):
        n = rng.randint(1, cfg.max_vars)
        I = random_ideal(rng, n, cfg.max_exp)
        for _ in range(10):
            f = random_polynomial(rng, n, cfg.max_exp)
            s = samuel(I, f)
            for k in (1, 2, 3):
                res.checked += 1
                if in_closure_of_power(I, k, f) != (s >= k):
                    res.witness(f"I={I.format()} f={f.format()} n={k}")
        g = random_monomial(rng, n, cfg.max_exp)
        br = samuel_bruteforce(I, g, cfg.M)
        res.checked += 1
        if not br.lower <= br.upper:
            res.witness(f"unsound bracket I={I.format()} f={g.format()}")
        closed += br.closed
    res.notes["brackets_closed"] = f"{closed}/{cfg.corpus}"
    return res


def boundary_corpus(nvars: int, size: int = 200, top: int = 12) -> list[Polynomial]:
    pts = itertools.islice(box_points_by_degree((top,) * nvars), size)
    return [Polynomial.monomial(b) for b in pts]


def suite_boundary(cfg: VerifyConfig) -> SuiteResult:
    """RV(ϖ) is a boundary; dropping any Rees valuation breaks it."""
    res = SuiteResult("boundary")
    rng = rng_for(cfg.seed, res.suite)
    for _ in range(cfg.corpus):
        T = random_tate(rng, cfg.max_vars, 4)
        corpus = boundary_corpus(T.nvars)
        rv = omega_valuations(T)
        r = is_boundary(T, rv, corpus, (1, 2, 3))
        res.checked += r.checked
        if not r.ok:
            res.witness(f"omega={T.omega} RV fails at {r.witness}")
        if len(rv) >= 2:
            for v in rv:
                rest = [u for u in rv if u != v]
                r = is_boundary(T, rest, corpus, (1, 2, 3))
                res.checked += 1
                if r.ok:
                    res.witness(f"omega={T.omega} dropping {v} still passes")
        # arc-closure against the Samuel function of (ϖ)
        for f in corpus[:20]:
            res.checked += 1
            nu = samuel(T.omega_ideal(), f)
            if (spectral_rees(T, f) <= LogValue(1)) != (nu >= 1):
                res.witness(f"omega={T.omega} arc/Samuel mismatch at {f.format()}")
    return res


def suite_gauge(cfg: VerifyConfig) -> SuiteResult:
    """Ring-monomial gauge equals the spectral seminorm; multiplicativity and shift."""
    res = SuiteResult("gauge")
    rng = rng_for(cfg.seed, res.suite)
    for _ in range(cfg.corpus):
        T = random_tate(rng, cfg.max_vars, 4)
        X0 = GaugeMonoid("ring")
        box = itertools.product(*(range(-2 if i in T.support else 0, 5) for i in range(T.nvars)))
        for b in box:
            res.checked += 1
            g = gauge(T, X0, b)
            if g != spectral_rees(T, Polynomial.monomial(b)):
                res.witness(f"omega={T.omega} b={b}")
            for k in (2, 3, 5):
                if gauge(T, X0, tuple(k * x for x in b)) != g ** k:
                    res.witness(f"omega={T.omega} b={b} k={k}")
            shifted = tuple(x + a for x, a in zip(b, T.omega))
            if gauge(T, X0, shifted) != g * LogValue(1):
                res.witness(f"omega={T.omega} shift at b={b}")
        f = random_polynomial(rng, T.nvars, cfg.max_exp)
        br = spectral_limit(T, f, cfg.M)
        res.checked += 1
        if not br.lower <= br.upper:
            res.witness(f"unsound spectral bracket omega={T.omega} f={f.format()}")
    return res


def suite_star(cfg: VerifyConfig) -> SuiteResult:
    """Star-operation axioms, coarseness of v, and the t-ideal property of wAss(ϖ)."""
    res = SuiteResult("star")
    rng = rng_for(cfg.seed, res.suite)
    rounds = max(1, cfg.corpus // 25)
    for _ in range(rounds):
        T = random_tate(rng, cfg.max_vars, 3)
        corpus = [random_fractional(rng, T.omega) for _ in range(min(cfg.corpus, 25))]
        for name, op in STRICT_OPERATIONS.items():
            r = star_axioms_check(op, corpus)
            res.checked += r.checked
            if not r.ok:
                res.witness(f"{name} fails axiom {r.witness[0]} on omega={T.omega}")
            c = coarsest_check(op, corpus)
            res.checked += c.checked
            if not c.ok:
                res.witness(f"{name} not inside v on omega={T.omega}")
        res.checked += 1
        if star_axioms_check(add_base_op, corpus).ok:
            res.witness(f"negative control passed on omega={T.omega}")
    for _ in range(cfg.corpus):
        T = random_tate(rng, cfg.max_vars, 4)
        r = wass_t_ideal_check(T)
        res.checked += r.checked
        if not r.ok:
            res.witness(f"omega={T.omega} prime {r.witness} not t-closed")
    return res


def suite_divisor_group(cfg: VerifyConfig) -> SuiteResult:
    """``div I + div(A:I) = 0`` and the lattice laws of the divisor monoid."""
    res = SuiteResult("divisor-group")
    rng = rng_for(cfg.seed, res.suite)
    for _ in range(cfg.corpus):
        T = random_tate(rng, cfg.max_vars, 3)
        I = random_fractional(rng, T.omega)
        J = random_fractional(rng, T.omega)
        K = random_fractional(rng, T.omega)
        zero = Divisor.zero(T.omega)
        d, e, g = Divisor.of(I), Divisor.of(J), Divisor.of(K)
        checks = {
            "group": d + Divisor.of(inverse(I)) == zero,
            "neutral": d + zero == d,
            "commutative": d + e == e + d,
            "associative": (d + e) + g == d + (e + g),
            "absorb-sup": divisor_sup(d, divisor_inf(d, e)) == d,
            "absorb-inf": divisor_inf(d, divisor_sup(d, e)) == d,
            "order": (d <= e) == (divisor_inf(d, e) == d),
            "divisorial-inverse": v_closure(inverse(I)) == inverse(I),
        }
        for name, ok in checks.items():
            res.checked += 1
            if not ok:
                res.witness(f"{name} fails for I={I.format()} J={J.format()} omega={T.omega}")
    return res


def suite_shilov_cross_route(cfg: VerifyConfig) -> SuiteResult:
    """Localization boundary equals RV(ϖ); prime sets agree; probes behave."""
    res = SuiteResult("shilov-cross-route")
    rng = rng_for(cfg.seed, res.suite)
    for _ in range(cfg.corpus):
        T = random_tate(rng, cfg.max_vars, 4)
        report = classify(T)
        res.checked += 3
        if set(report.boundary) != set(rees_valuations(T.omega_ideal())):
            res.witness(f"omega={T.omega} boundary differs from RV")
        if set(min_primes_omega(T)) != set(wass_omega(T)):
            res.witness(f"omega={T.omega} Min != wAss")
        if report.classification != "strongly":
            res.witness(f"omega={T.omega} classified {report.classification}")
        for _ in range(5):
            b = random_monomial(rng, T.nvars, cfg.max_exp).exponents()[0]
            for n in (1, 2, 3):
                res.checked += 1
                direct = contains_monomial(T.omega_ideal() if n == 1 else _omega_power_ideal(T, n), b)
                if direct != omega_membership_via_localizations(T, b, n):
                    res.witness(f"omega={T.omega} b={b} n={n} localization mismatch")
    bound = cfg.probe_bound
    probes = [
        (DVROracle(), None),
        (BivariateOracle(), ((0, 1), 1)),
        (SemigroupOracle((2, 3)), (3, 1)),
    ]
    for oracle, expected in probes:
        res.checked += 1
        r = valuative_probe(oracle, bound)
        if r.witness != expected:
            res.witness(f"{oracle.name} probe returned {r.witness}, expected {expected}")
    return res


def _omega_power_ideal(T: TateData, n: int):
    from .monomial import MonomialIdeal

    return MonomialIdeal.principal(tuple(n * a for a in T.omega))


def suite_extensions(cfg: VerifyConfig) -> SuiteResult:
    """Minimal-polynomial formula, lattice-limit route, isometry and padded equations."""
    res = SuiteResult("extensions")
    rng = rng_for(cfg.seed, res.suite)
    x = Polynomial.variable(0, 1)
    for E, expected in ((sqrt_x(), LogValue.from_json({"log2_exponent": "1/2"})), (sqrt_x_plus_one(), LogValue.one())):
        y = E.parse_element("y")
        res.checked += 2
        if spectral_norm_ext(E, y) != expected:
            res.witness(f"|y|_spc wrong for {E.format_element(E.table[1][1])}")
        br = basis_gauge_limit(E, y, 4)
        if not (br.closed and br.upper == expected):
            res.witness(f"lattice route does not close for y^2 = {E.format_element(E.table[1][1])}")
        r = isometry_check(E, [random_univariate(rng) for _ in range(cfg.corpus)])
        res.checked += r.checked
        if not r.ok:
            res.witness(f"isometry fails at {r.witness.format(['x'])}")
        for _ in range(cfg.corpus):
            f = E.add(E.scalar(random_univariate(rng)), E.mul(E.scalar(random_univariate(rng)), y))
            g = E.add(E.scalar(random_univariate(rng)), E.mul(E.scalar(random_univariate(rng)), y))
            if E.is_zero(f):
                continue
            res.checked += 1
            vf = spectral_norm_ext(E, f)
            mp = min_poly(E, f)
            root = x ** rng.randint(1, 3)
            padded = pad_equation(mp.coefficients, root)
            if integral_equation_upper_bound(E, f, padded) < vf:
                res.witness(f"padded equation below the minimal value at {E.format_element(f)}")
            for k in (2, 3):
                if spectral_norm_ext(E, E.pow(f, k)) != vf ** k:
                    res.witness(f"not power-multiplicative at {E.format_element(f)} k={k}")
            if not E.is_zero(g):
                vg = spectral_norm_ext(E, g)
                s = E.add(f, g)
                if not E.is_zero(s) and spectral_norm_ext(E, s) > max(vf, vg):
                    res.witness(f"ultrametric inequality fails at {E.format_element(f)}")
                if spectral_norm_ext(E, E.mul(f, g)) > vf * vg:
                    res.witness(f"submultiplicativity fails at {E.format_element(f)}")
            br = basis_gauge_limit(E, f, cfg.M)
            if not (br.lower <= br.upper and br.upper <= lattice_norm(E, f)):
                res.witness(f"unsound lattice bracket at {E.format_element(f)}")
    C = cusp()
    res.checked += 1
    probe = closedness_probe(C, [C.parse_element("y"), C.parse_element("y/x")])
    if probe.ok:
        res.witness("cusp negative control not flagged")
    return res


SUITES: dict[str, Callable[[VerifyConfig], SuiteResult]] = {
    "samuel-closure": suite_samuel_closure,
    "boundary": suite_boundary,
    "gauge": suite_gauge,
    "star": suite_star,
    "divisor-group": suite_divisor_group,
    "shilov-cross-route": suite_shilov_cross_route,
    "extensions": suite_extensions,
}


def _run_one(args):
    name, cfg = args
    return SUITES[name](cfg)


def run_suites(suite: str, cfg: VerifyConfig, jobs: int = 1) -> list[SuiteResult]:
    """Run one suite or ``"all"``; results come back in suite order for any ``jobs``."""
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(['all', *SUITES])}")
    work = [(n, cfg) for n in names]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, work))
    return [_run_one(w) for w in work]
