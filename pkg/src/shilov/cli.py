"""Command-line front end: ``shilov <subcommand> [options]``.

Exit codes: 0 success, 1 a computation produced a witness or failed a
check, 2 malformed input.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from . import __version__
from .core import LogValue, ParseError, Polynomial, fmt_rational, parse_polynomial, split_variables
from .monomial import MonomialIdeal, parse_ideal, parse_monomial, power
from .polyhedra import closure_of_power
from .rees import MonomialValuation, in_closure_of_power, rees_valuations, samuel, samuel_bruteforce

DEFAULT_M = 64
DEFAULT_PROBE_BOUND = 20


class InputError(ValueError):
    pass


class Report:
    """Canonical JSON report: sorted keys, rationals as strings."""

    def __init__(self, subcommand: str, inputs: dict, results: dict, bounds: Optional[dict] = None, ok: bool = True):
        self.subcommand = subcommand
        self.inputs = inputs
        self.results = results
        self.bounds = bounds or {}
        self.ok = ok

    def to_json(self) -> dict:
        return {
            "subcommand": self.subcommand,
            "inputs": self.inputs,
            "results": self.results,
            "provenance": {"package": "shilov", "version": __version__, "bounds": self.bounds},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# input helpers
# ---------------------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def infer_variables(texts: Sequence[Optional[str]], reserved: Sequence[str] = ()) -> list[str]:
    names = set()
    for t in texts:
        if t:
            names.update(_IDENT.findall(t))
    names -= set(reserved)
    return sorted(names) or ["x"]


def _variables(args, *texts, reserved=()) -> list[str]:
    if args.vars:
        return split_variables(args.vars)
    return infer_variables(texts, reserved)


def _require(args, *names):
    for n in names:
        if getattr(args, n, None) in (None, ""):
            raise InputError(f"--{n.replace('_', '-')} is required for {args.command}")


def _tate(args, variables):
    from .seminorms import TateData

    _require(args, "omega")
    a = parse_monomial(args.omega, variables)
    return TateData(len(variables), a)


def _valuation_json(v: MonomialValuation) -> dict:
    return v.to_json()


def _poly(args, variables, laurent=False) -> Polynomial:
    _require(args, "f")
    return parse_polynomial(args.f, variables, laurent=laurent)


def _read_file(path: str):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")
    return stripped


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_rees(args) -> Report:
    _require(args, "ideal")
    vs = _variables(args, args.ideal)
    I = parse_ideal(args.ideal, vs)
    rv = rees_valuations(I)
    return Report(
        "rees",
        {"ideal": I.format(vs), "vars": vs},
        {"rees_valuations": [_valuation_json(v) for v in rv]},
    )


def cmd_samuel(args) -> Report:
    _require(args, "ideal", "f")
    vs = _variables(args, args.ideal, args.f)
    I = parse_ideal(args.ideal, vs)
    f = _poly(args, vs)
    results = {"samuel": fmt_rational(samuel(I, f))}
    bounds = {}
    if args.bound is not None:
        br = samuel_bruteforce(I, f, args.bound)
        results["bracket"] = br.to_json()
        bounds["M"] = args.bound
    return Report("samuel", {"ideal": I.format(vs), "f": f.format(vs), "vars": vs}, results, bounds)


def cmd_closure(args) -> Report:
    _require(args, "ideal")
    vs = _variables(args, args.ideal, args.f)
    I = parse_ideal(args.ideal, vs)
    n = args.n or 1
    if n < 1:
        raise InputError("--n must be positive")
    C = closure_of_power(I, n)
    results = {
        "closure": C.format(vs),
        "generators": C.to_json(),
        "integrally_closed": C == power(I, n),
    }
    inputs = {"ideal": I.format(vs), "n": n, "vars": vs}
    if args.f:
        f = _poly(args, vs)
        inputs["f"] = f.format(vs)
        results["member"] = in_closure_of_power(I, n, f)
    return Report("closure", inputs, results)


def cmd_seminorm(args) -> Report:
    from .seminorms import adic_seminorm, arc_member, power_bounded, spectral_limit, spectral_rees, topologically_nilpotent

    vs = _variables(args, args.omega, args.f)
    T = _tate(args, vs)
    f = _poly(args, vs, laurent=True)
    M = args.bound or DEFAULT_M
    br = spectral_limit(T, f, M)
    results = {
        "adic": adic_seminorm(T, f).to_json(),
        "spectral": spectral_rees(T, f).to_json(),
        "bracket": br.to_json(),
        "power_bounded": power_bounded(T, f),
        "topologically_nilpotent": topologically_nilpotent(T, f),
    }
    inputs = {"omega": parse_omega_text(T, vs), "f": f.format(vs), "vars": vs}
    if args.n is not None:
        inputs["n"] = args.n
        results["arc_member"] = arc_member(T, args.n, f)
    return Report("seminorm", inputs, results, {"M": M})


def parse_omega_text(T, vs) -> str:
    return Polynomial.monomial(T.omega).format(vs)


def cmd_gauge(args) -> Report:
    from .seminorms import GaugeMonoid, gauge, gauge_certificate

    vs = _variables(args, args.omega, args.f, args.ideal)
    T = _tate(args, vs)
    f = _poly(args, vs, laurent=True)
    if not f.is_monomial():
        raise InputError("gauge takes a single monomial")
    b = f.exponents()[0]
    inputs = {"omega": parse_omega_text(T, vs), "f": f.format(vs), "vars": vs}
    if args.ideal:
        J = parse_ideal(args.ideal, vs)
        X0 = GaugeMonoid("ideal", J)
        inputs["monoid"] = J.format(vs)
    else:
        X0 = GaugeMonoid("ring")
        inputs["monoid"] = "ring"
    value = gauge(T, X0, b)
    results = {"gauge": value.to_json()}
    if X0.kind == "ring" and not value.is_zero:
        n, m = gauge_certificate(T, b)
        results["certificate"] = {"n": n, "m": m}
    return Report("gauge", inputs, results)


def cmd_boundary_check(args) -> Report:
    from .seminorms import is_boundary, omega_valuations
    from .verify import boundary_corpus

    data = _read_file(args.file) if args.file else {}
    if not isinstance(data, dict):
        raise InputError("boundary-check --file must be a JSON object")
    vs = _variables(args, args.omega, *data.get("corpus", []))
    T = _tate(args, vs)
    if "valuations" in data:
        S = [MonomialValuation.from_json(v) for v in data["valuations"]]
    else:
        S = omega_valuations(T)
    if "corpus" in data:
        corpus = [parse_polynomial(s, vs, laurent=True) for s in data["corpus"]]
    else:
        corpus = boundary_corpus(T.nvars)
    top = args.n or 3
    levels = list(data.get("levels", range(1, top + 1)))
    r = is_boundary(T, S, corpus, levels)
    results = {"boundary": r.ok, "checked": r.checked, "witness": None}
    if not r.ok:
        f, n = r.witness
        results["witness"] = {"f": f.format(vs), "n": n}
    inputs = {
        "omega": parse_omega_text(T, vs),
        "valuations": [v.to_json() for v in S],
        "corpus_size": len(corpus),
        "levels": levels,
        "vars": vs,
    }
    return Report("boundary-check", inputs, results, ok=r.ok)


def cmd_star(args) -> Report:
    from .star import (
        closure_op,
        inverse,
        is_divisorial,
        is_invertible,
        parse_fractional,
        t_closure,
        v_closure,
    )

    _require(args, "ideal")
    vs = _variables(args, args.omega, args.ideal, reserved=("w",))
    T = _tate(args, vs)
    I = parse_fractional(args.ideal, vs, T.omega)
    results = {
        "canonical": I.format(vs),
        "inverse": inverse(I).format(vs),
        "v_closure": v_closure(I).format(vs),
        "t_closure": t_closure(I).format(vs),
        "integral_closure": closure_op(I).format(vs),
        "divisorial": is_divisorial(I),
        "invertible": is_invertible(I),
        "generator_count": I.generator_count(),
    }
    return Report("star", {"omega": parse_omega_text(T, vs), "ideal": args.ideal, "vars": vs}, results)


def cmd_classify(args) -> Report:
    from .ringclass import classify

    vs = _variables(args, args.omega)
    T = _tate(args, vs)
    report = classify(T)
    results = report.to_json(vs)
    results["rees_valuations"] = [v.to_json() for v in rees_valuations(T.omega_ideal())]
    results["cross_route_equal"] = set(report.boundary) == set(rees_valuations(T.omega_ideal()))
    return Report("classify", {"omega": parse_omega_text(T, vs), "vars": vs}, results, ok=results["cross_route_equal"])


def cmd_valuative(args) -> Report:
    from .ringclass import ORACLES, SemigroupOracle, rank_one_probe, valuative_probe

    name = args.oracle
    if name not in ORACLES:
        raise InputError(f"unknown oracle {name!r}; choose from {', '.join(sorted(ORACLES))}")
    params = {}
    if name == "semigroup":
        gens = tuple(int(g) for g in (args.generators or "2,3").split(","))
        om = args.oracle_omega
        oracle = SemigroupOracle(gens, om)
        params = {"generators": list(oracle.generators), "omega": oracle.omega}
    elif name == "dvr":
        e = args.oracle_omega or 1
        oracle = ORACLES[name](e)
        params = {"omega": e}
    else:
        oracle = ORACLES[name]()
    bound = args.bound or DEFAULT_PROBE_BOUND
    r = valuative_probe(oracle, bound)
    results = {
        "valuative": r.valuative,
        "checked": r.checked,
        "witness": None if r.witness is None else {"f": oracle.show(r.witness[0]), "n": r.witness[1]},
        "rank_one": rank_one_probe(oracle, bound),
    }
    return Report("valuative", {"oracle": name, "parameters": params}, results, {"bound": bound}, ok=r.valuative)


def cmd_ext(args) -> Report:
    from . import extensions as X

    if args.file:
        data = _read_file(args.file)
        if not isinstance(data, dict):
            raise InputError("ext --file must be a JSON object")
    elif args.relation:
        data = {"relation": args.relation}
        if args.omega:
            data["omega_exponent"] = int(args.omega)
    else:
        raise InputError("ext needs --file or --relation")
    E = X.from_json(data)
    if args.f:
        elements = [args.f]
    else:
        elements = list(data.get("elements", []))
    if not elements:
        raise InputError("ext needs --f or an 'elements' list")
    M = args.bound or DEFAULT_M
    out = []
    ok = True
    for text in elements:
        f = E.parse_element(text)
        entry = {"f": text, "coordinates": [a.format(["x"]) for a in f], "lattice_norm": X.lattice_norm(E, f).to_json()}
        if E.domain:
            mp = X.min_poly(E, f)
            entry["min_poly"] = mp.format()
            entry["min_poly_coefficients"] = mp.to_json()
        if E.domain and E.integrally_closed:
            entry["spectral"] = X.spectral_norm_ext(E, f).to_json()
            entry["bracket"] = X.basis_gauge_limit(E, f, M).to_json()
        elif E.domain:
            probe = X.closedness_probe(E, [f])
            entry["closedness_witness"] = not probe.ok
            ok = ok and probe.ok
        out.append(entry)
    inputs = {
        "basis": list(E.labels),
        "omega_exponent": E.omega_exponent,
        "domain": E.domain,
        "integrally_closed": E.integrally_closed,
    }
    if "relation" in data:
        inputs["relation"] = data["relation"]
    return Report("ext", inputs, {"elements": out}, {"M": M}, ok=ok)


def cmd_verify(args) -> Report:
    from .verify import VerifyConfig, run_suites

    cfg = VerifyConfig(
        seed=args.seed,
        corpus=args.corpus,
        M=args.M,
        probe_bound=args.bound or DEFAULT_PROBE_BOUND,
    )
    results = run_suites(args.suite, cfg, jobs=args.jobs)
    ok = all(r.ok for r in results)
    bounds = {
        "seed": cfg.seed,
        "corpus": cfg.corpus,
        "max_vars": cfg.max_vars,
        "max_exp": cfg.max_exp,
        "M": cfg.M,
        "probe_bound": cfg.probe_bound,
    }
    return Report(
        "verify", {"suite": args.suite}, {"suites": [r.to_json() for r in results], "ok": ok}, bounds, ok=ok
    )


COMMANDS = {
    "rees": cmd_rees,
    "samuel": cmd_samuel,
    "closure": cmd_closure,
    "seminorm": cmd_seminorm,
    "gauge": cmd_gauge,
    "boundary-check": cmd_boundary_check,
    "star": cmd_star,
    "classify": cmd_classify,
    "valuative": cmd_valuative,
    "ext": cmd_ext,
    "verify": cmd_verify,
}


# ---------------------------------------------------------------------------
# text rendering
# ---------------------------------------------------------------------------


def _text_value(v):
    if isinstance(v, dict) and set(v) == {"log2_exponent"}:
        return str(LogValue.from_json(v))
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True, ensure_ascii=False)
    return "none" if v is None else str(v)


def render_text(report: Report) -> str:
    res = report.results
    if report.subcommand == "samuel" and "bracket" not in res:
        return res["samuel"] + "\n"
    if report.subcommand == "rees":
        lines = [f"weight {tuple(v['weight'])} / {v['normalizer']}" for v in res["rees_valuations"]]
        return "\n".join(lines) + "\n"
    if report.subcommand == "verify":
        lines = []
        for s in res["suites"]:
            status = "PASS" if s["ok"] else "FAIL"
            lines.append(f"{status} {s['suite']}: {s['checked']} checks")
            lines.extend(f"  witness: {w}" for w in s["witnesses"])
        return "\n".join(lines) + "\n"
    if report.subcommand == "ext":
        lines = []
        for e in res["elements"]:
            lines.append(f"{e['f']}:")
            for k in sorted(e):
                if k != "f":
                    lines.append(f"  {k}: {_text_value(e[k])}")
        return "\n".join(lines) + "\n"
    return "".join(f"{k}: {_text_value(res[k])}\n" for k in sorted(res))


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shilov", description="Valuative invariants of monomial Tate rings.")
    p.add_argument("--version", action="version", version=f"shilov {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="subcommand")

    def common(sp):
        sp.add_argument("--vars", help="comma-separated variable names (default: inferred, sorted)")
        sp.add_argument("--omega", help="pseudo-uniformizer as a monomial, e.g. x*y^2")
        sp.add_argument("--ideal", help='monomial ideal, e.g. "(x^2, y^3)"')
        sp.add_argument("--f", help="polynomial or element")
        sp.add_argument("--n", type=int, help="power / level")
        sp.add_argument("--bound", type=int, help="search or limit cutoff")
        sp.add_argument("--file", help="UTF-8 input file (DSL or JSON)")
        sp.add_argument("--json", action="store_true", help="emit the canonical JSON report")

    helps = {
        "rees": "Rees valuations of a monomial ideal",
        "samuel": "asymptotic Samuel function (with --bound: brute-force bracket)",
        "closure": "integral closure of I^n and membership of f",
        "seminorm": "adic and spectral seminorms on A[1/omega]",
        "gauge": "generalized gauge of a monomial",
        "boundary-check": "test a valuation set as a boundary",
        "star": "v/t-closures and inverses of a fractional ideal",
        "classify": "omega-Shilov classification and boundary",
        "valuative": "bounded valuative probe of a local-ring oracle",
        "ext": "spectral seminorm on a finite free extension of Q[x]",
        "verify": "run the seeded verification suites",
    }
    for name in COMMANDS:
        sp = sub.add_parser(name, help=helps[name])
        common(sp)
        if name == "valuative":
            sp.add_argument("--oracle", default="dvr", help="dvr, bivariate or semigroup")
            sp.add_argument("--generators", help="semigroup generators, e.g. 2,3")
            sp.add_argument("--oracle-omega", type=int, help="omega exponent inside the oracle")
        if name == "ext":
            sp.add_argument("--relation", help='monic relation such as "y^2 - x"')
        if name == "verify":
            sp.add_argument("--suite", default="all")
            sp.add_argument("--seed", type=int, default=7)
            sp.add_argument("--corpus", type=int, default=50)
            sp.add_argument("--M", type=int, default=DEFAULT_M)
            sp.add_argument("--jobs", type=int, default=1, help="worker processes; output is order-stable")
    return p


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for flag in ("bound", "n"):
        v = getattr(args, flag, None)
        if v is not None and v < 1:
            stderr.write(f"error: --{flag} must be positive\n")
            return 2
    try:
        report = COMMANDS[args.command](args)
    except ParseError as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except (InputError, ValueError, KeyError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    stdout.write(report.dumps() if args.json else render_text(report))
    return 0 if report.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
