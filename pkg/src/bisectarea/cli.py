"""Command-line entry point: ``bisectarea <command> ...``.

Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath

from .exactmath import PolyQ, parse_poly
from .galois import (
    DEFAULT_PRIME_BOUND,
    DegreeDropped,
    NotSquarefree,
    constructibility_verdict,
    irreducible_over_Q,
    radical_solvability_report,
    symmetric_group_certificate,
)
from .inversesolver import NoConvergence, NoRootInRange, NonPositiveRatio, SolverConfig, solve_from_bisectors
from .report import SCHEMA_VERSION, ReproduceOptions, reproduce
from .trianglecore import (
    InvalidAltitudes,
    InvalidMedians,
    InvalidTriangle,
    NonPositiveInput,
    Triangle,
    area_heron_hp,
    symmetric_invariants,
)
from .wolff import NonPositiveRoots, WolffData, recover_bisectors

DOMAIN_ERRORS = (
    InvalidTriangle,
    InvalidMedians,
    InvalidAltitudes,
    NonPositiveInput,
    NoConvergence,
    NonPositiveRatio,
    NoRootInRange,
    NonPositiveRoots,
    NotSquarefree,
    DegreeDropped,
)


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def _envelope(command: str, inputs, outputs, evidence=None) -> dict:
    return {"schema": SCHEMA_VERSION, "command": command, "inputs": inputs, "outputs": outputs, "evidence": evidence or {}}


def rational_arg(text: str) -> Fraction:
    """Exact rational from "3", "1/3" or a decimal string like "0.25"."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def real_arg(text: str) -> float:
    """Float from a decimal, or from "num/den"."""
    try:
        return float(Fraction(text)) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def poly_arg(text: str) -> PolyQ:
    try:
        f = parse_poly(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad polynomial {text!r}; expected e.g. \"6,-3,-12,4\"") from None
    if f.degree < 1:
        raise argparse.ArgumentTypeError("polynomial must have degree >= 1")
    return f


def cmd_forward(args) -> tuple[dict, str]:
    tri = Triangle(*args.sides)
    m = tri.metrics()
    outputs = m.as_dict()
    if args.precision:
        outputs["S_high_precision"] = mpmath.nstr(area_heron_hp(*tri.sides, args.precision), args.precision)
    lines = [f"sides a={tri.a!r} b={tri.b!r} c={tri.c!r}"]
    lines += [f"  {k:<6} {v!r}" for k, v in m.as_dict().items()]
    if args.precision:
        lines.append(f"  S ({args.precision} digits) {outputs['S_high_precision']}")
    return _envelope("forward", {"sides": list(tri.sides)}, outputs), "\n".join(lines)


def cmd_solve(args) -> tuple[dict, str]:
    res = solve_from_bisectors(*args.bisectors, SolverConfig(tolerance=args.tolerance))
    m = res.triangle.metrics()
    outputs = {"sides": list(res.triangle.sides), "area": m.S, "inradius": m.r, "semiperimeter": m.p,
               "angles": [m.alpha, m.beta, m.gamma]}
    evidence = {"residual": res.residual, "iterations": res.iterations, "start_used": res.start_used}
    text = (
        f"sides a={res.triangle.a!r} b={res.triangle.b!r} c={res.triangle.c!r}\n"
        f"area={m.S!r} inradius={m.r!r} semiperimeter={m.p!r}\n"
        f"residual={res.residual:.3e} iterations={res.iterations} start={res.start_used}"
    )
    return _envelope("solve", {"bisectors": list(args.bisectors)}, outputs, evidence), text


def cmd_wolff(args) -> tuple[dict, str]:
    data = WolffData.from_bisectors(*args.bisectors)
    outputs = {
        "a2": str(data.a2),
        "a3": str(data.a3),
        "a4": str(data.a4),
        "W": [str(c) for c in data.W.coeffs],
        "U": [str(c) for c in data.U.coeffs],
        "V": [str(c) for c in data.V.coeffs],
        "recovered_bisectors": [str(x) for x in recover_bisectors(data.a2, data.a3, data.a4)],
    }
    text = "\n".join([
        f"a2={data.a2} a3={data.a3} a4={data.a4}",
        f"W(t) = {data.W}",
        "W coefficients (t^0..t^10): " + ", ".join(outputs["W"]),
        f"U(t) = {data.U}",
    ])
    return _envelope("wolff", {"bisectors": [str(x) for x in args.bisectors]}, outputs), text


def cmd_galois(args) -> tuple[dict, str]:
    f = args.poly
    cert = symmetric_group_certificate(f, args.prime_bound) if f.degree >= 2 else None
    irr = cert.irreducibility if cert else irreducible_over_Q(f, args.prime_bound)
    outputs = {"irreducibility": irr.as_dict(), "verdict": cert.verdict if cert else "NotApplicable"}
    evidence = cert.as_dict() if cert else {}
    lines = [f"f(t) = {f}", f"irreducibility: {irr.status} ({irr.witness})"]
    if cert:
        lines.append(f"verdict: {cert.verdict}")
        lines += [f"  - {r}" for r in cert.reasoning]
    return _envelope("galois", {"poly": f.to_text(), "prime_bound": args.prime_bound}, outputs, evidence), "\n".join(lines)


def cmd_constructible(args) -> tuple[dict, str]:
    v = constructibility_verdict(args.poly, args.prime_bound)
    text = f"f(t) = {args.poly}\n{v.verdict}: {v.reason}"
    return _envelope("constructible", {"poly": args.poly.to_text()}, v.as_dict()), text


def cmd_radical(args) -> tuple[dict, str]:
    rep = radical_solvability_report(*args.bisectors, prime_bound=args.prime_bound)
    d = rep.as_dict()
    evidence = {"certificate": d.pop("certificate"), "simultaneity": d.pop("simultaneity")}
    lines = [f"bisectors {', '.join(str(x) for x in rep.bisectors)}: {rep.verdict}"]
    lines += [f"  - {n}" for n in rep.notes]
    return _envelope("radical", {"bisectors": [str(x) for x in args.bisectors]}, d, evidence), "\n".join(lines)


def cmd_invariants(args) -> tuple[dict, str]:
    inv = symmetric_invariants(*args.bisectors)
    outputs = {k: str(v) for k, v in zip(("a2", "a3", "a4"), inv.as_tuple())}
    return _envelope("invariants", {"bisectors": [str(x) for x in args.bisectors]}, outputs), \
        " ".join(f"{k}={v}" for k, v in outputs.items())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON envelope on stdout")
    common.add_argument("--tolerance", type=float, default=1e-12, help="solver relative residual bound")
    common.add_argument("--prime-bound", type=int, default=DEFAULT_PRIME_BOUND, help="largest prime sampled")
    common.add_argument("--precision", type=int, default=0, help="decimal digits for high-precision output")

    parser = argparse.ArgumentParser(prog="bisectarea", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("forward", parents=[common], help="metrics of a triangle from its sides")
    p.add_argument("sides", nargs=3, type=real_arg)
    p.set_defaults(func=cmd_forward)

    p = sub.add_parser("solve", parents=[common], help="triangle from its three bisector lengths")
    p.add_argument("bisectors", nargs=3, type=real_arg)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("wolff", parents=[common], help="invariants and W(t), U(t), V(t) for rational bisectors")
    p.add_argument("bisectors", nargs=3, type=rational_arg)
    p.set_defaults(func=cmd_wolff)

    p = sub.add_parser("invariants", parents=[common], help="exact (a2, a3, a4) for rational bisectors")
    p.add_argument("bisectors", nargs=3, type=rational_arg)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("galois", parents=[common], help="irreducibility and S_n certificate for a polynomial")
    p.add_argument("poly", type=poly_arg, help='coefficients, constant first, e.g. "6,-3,-12,4"')
    p.set_defaults(func=cmd_galois)

    p = sub.add_parser("constructible", parents=[common], help="ruler-and-compass verdict for a root")
    p.add_argument("poly", type=poly_arg)
    p.set_defaults(func=cmd_constructible)

    p = sub.add_parser("radical", parents=[common], help="radical expressibility of r, S, p for rational bisectors")
    p.add_argument("bisectors", nargs=3, type=rational_arg)
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("reproduce-paper", parents=[common], help="run every check and report")
    p.add_argument("--corpus", type=int, default=None, help="size of every random corpus")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "reproduce-paper":
        if args.corpus is not None and args.corpus < 1:
            parser.error("--corpus must be positive")
        opts = ReproduceOptions(
            tolerance=args.tolerance,
            prime_bound=args.prime_bound,
            corpus=args.corpus,
            seed=args.seed,
            precision=args.precision or 50,
        )
        report = reproduce(opts)
        if args.json:
            print(dump_json(report.as_dict()))
            print(report.table(), file=sys.stderr)
        else:
            print(report.table())
        return 0 if report.ok else 1

    try:
        envelope, text = args.func(args)
    except DOMAIN_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(dump_json(envelope) if args.json else text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
