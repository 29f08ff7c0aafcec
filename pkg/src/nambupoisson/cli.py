"""Command-line interface.

Exit codes: 0 all checks pass, 1 a mathematical violation (or refused
construction), 2 malformed input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import __version__
from .classification import classify, family_names, lookup
from .constructions import direct_sum, iterate_twist, tensor_product, twist
from .core.builtins import builtin_names
from .core.checks import AXIOMS
from .core.parametric import ParametricAlgebra
from .core.report import VerificationReport
from .core.sampling import DEFAULT_SAMPLES, DEFAULT_SEED, verify_sampled
from .core.structures import HomNambuPoissonAlgebra
from .errors import DomainError, InputError, PreconditionError
from .exactmath import RationalMatrix, eval_text, format_rational, rat
from .fileformat import digest, dumps, read_algebra, read_factor, serialize_algebra
from .jacobian import (
    ParametricPolyMorphism,
    PolyMorphism,
    check_families,
    check_morphism_condition,
    jacobian_bracket,
    poly,
)
from .jacobian.condition import sample_morphisms

DEFAULT_DEGREE_CAP = 8

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class Outcome:
    """What a subcommand produced: exit code, machine payload, human text."""

    def __init__(self, code: int, payload: dict, human: str) -> None:
        self.code = code
        self.payload = payload
        self.human = human


# input helpers

def load_source(source: str) -> ParametricAlgebra:
    """A file path, or ``builtin:NAME`` for built-ins and named families."""
    if source.startswith("builtin:"):
        return lookup(source[len("builtin:"):])
    return read_algebra(source)


def parse_assignments(items: Sequence[str] | None) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for item in items or ():
        if "=" not in item:
            raise InputError(f"--set expects NAME=VALUE, got {item!r}")
        name, value = (s.strip() for s in item.split("=", 1))
        if not name.isidentifier():
            raise InputError(f"--set: bad parameter name {name!r}")
        try:
            out[name] = rat(value) if "/" not in value else eval_text(value)
        except (InputError, ValueError):
            out[name] = eval_text(value)
    return out


def concrete(P: ParametricAlgebra, assignment: dict[str, Fraction]) -> HomNambuPoissonAlgebra:
    extra = set(assignment) - set(P.parameters)
    if extra:
        raise InputError(f"--set names undeclared parameters: {', '.join(sorted(extra))}")
    missing = [p for p in P.parameters if p not in assignment]
    if missing:
        raise InputError(f"constructions need concrete values; use --set for: {', '.join(missing)}")
    return P.instantiate(assignment)


def parse_matrix(text: str, dim: int, env: dict[str, Fraction]) -> RationalMatrix:
    """Rows separated by ';', entries by ',' or whitespace; row-major (column j = image of e_j)."""
    rows = [r.strip() for r in text.split(";")]
    grid = []
    for r in rows:
        parts = [p for p in r.replace(",", " ").split() if p]
        grid.append([eval_text(p, env) for p in parts])
    if len(grid) != dim or any(len(row) != dim for row in grid):
        raise InputError(f"--matrix must be {dim}x{dim}, rows separated by ';'")
    return RationalMatrix(grid, dim)


def _axioms(text: str | None) -> list[str] | None:
    if not text:
        return None
    out = [a.strip() for a in text.split(",") if a.strip()]
    for a in out:
        if a not in AXIOMS:
            raise InputError(f"unknown axiom {a!r}; expected some of {', '.join(AXIOMS)}")
    return out


def _header(command: str, **extra) -> dict:
    out = {"tool": "nambupoisson", "version": __version__, "command": command}
    out.update(extra)
    return out


# human rendering

def _render_report(rep: VerificationReport, labels: tuple[str, ...], indent: str = "  ") -> list[str]:
    lines = []
    if rep.sample:
        lines.append(indent + "sample: " + ", ".join(f"{k}={format_rational(v)}" for k, v in sorted(rep.sample.items())))
    for r in rep.results:
        text = f"{indent}{r.axiom:<18} {r.status.upper()}"
        if r.checked:
            text += f" ({r.checked} checked)"
        if r.note:
            text += f" [{r.note}]"
        lines.append(text)
        if r.counterexample is not None:
            lines.append(f"{indent}  counterexample: {r.counterexample.describe(labels)}")
    for note in rep.notes:
        lines.append(f"{indent}note: {note}")
    return lines


# subcommands

def cmd_verify(args) -> Outcome:
    P = load_source(args.source)
    fixed = parse_assignments(args.set)
    extra = set(fixed) - set(P.parameters)
    if extra:
        raise InputError(f"--set names undeclared parameters: {', '.join(sorted(extra))}")
    if fixed:
        P = P.restrict(fixed, note="fixed: " + ", ".join(f"{k}={format_rational(v)}" for k, v in sorted(fixed.items())))
    axioms = _axioms(args.axioms)
    result = verify_sampled(P, axioms, args.samples, args.seed, stream="verify")
    payload = _header("verify", input_digest=digest(P), seed=args.seed, sample_count=args.samples,
                      algebra=P.name or args.source)
    payload.update(result.to_dict())
    lines = [f"algebra: {P.name or args.source} (dim {P.dim})"]
    for n, rep in enumerate(result.reports, 1):
        if len(result.reports) > 1:
            lines.append(f"sample {n}")
        lines.extend(_render_report(rep, P.labels or tuple(f"e{i}" for i in range(1, P.dim + 1))))
    lines.append("result: " + ("PASS" if result.passed else "FAIL"))
    return Outcome(EXIT_OK if result.passed else EXIT_VIOLATION, payload, "\n".join(lines))


def _write_algebra(A: HomNambuPoissonAlgebra, path: str | None) -> str:
    text = serialize_algebra(A)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def cmd_construct(args) -> Outcome:
    env = parse_assignments(args.set)
    kind = args.kind
    P = load_source(args.source)
    A = concrete(P, {k: v for k, v in env.items() if k in P.parameters} if kind == "dsum" else env)
    inputs = [digest(A)]
    if kind == "twist":
        if not args.matrix:
            raise InputError("twist needs --matrix")
        b = parse_matrix(args.matrix, A.dim, env)
        out = twist(A, b, check=not args.unchecked)
    elif kind == "dsum":
        if not args.other:
            raise InputError("dsum needs a second algebra")
        Q = load_source(args.other)
        B = concrete(Q, {k: v for k, v in env.items() if k in Q.parameters})
        leftover = set(env) - set(P.parameters) - set(Q.parameters)
        if leftover:
            raise InputError(f"--set names undeclared parameters: {', '.join(sorted(leftover))}")
        inputs.append(digest(B))
        out = direct_sum(A, B)
    elif kind == "tensor":
        if not args.other:
            raise InputError("tensor needs a factor file")
        factor = read_factor(args.other)
        out = tensor_product(A, factor, check=not args.unchecked)
    else:
        if args.n is None:
            raise InputError("iterate needs --n")
        out = iterate_twist(A, args.n)
    text = _write_algebra(out, args.output)
    payload = _header("construct", kind=kind, input_digests=inputs, output_digest=digest(out), dim=out.dim)
    if out.notes:
        payload["notes"] = list(out.notes)
    if args.output:
        human = f"{kind}: wrote dim {out.dim} algebra to {args.output}"
    else:
        human = text.rstrip("\n")
    return Outcome(EXIT_OK, payload, human)


def _degree_guard(pm: PolyMorphism, cap: int, what: str) -> None:
    if pm.degree() > cap:
        raise InputError(f"{what} has degree {pm.degree()} above the cap {cap}; raise it with --degree-cap")


def cmd_jacobian(args) -> Outcome:
    sub = args.jcommand
    if sub == "check-morphism":
        m = ParametricPolyMorphism.parse(args.polys)
        if m.parameters:
            for _, pm in sample_morphisms(m, 1, args.seed, "check-morphism"):
                _degree_guard(pm, args.degree_cap, "morphism")
        else:
            _degree_guard(m.instantiate({}), args.degree_cap, "morphism")
        rep = check_morphism_condition(m, args.samples, args.seed, "check-morphism")
        payload = _header("jacobian check-morphism", input=str(m), seed=args.seed, sample_count=args.samples)
        payload.update(rep.to_dict())
        lines = [f"morphism: {m}"]
        if rep.det is not None:
            lines.append(f"det = {rep.det}")
        for n, (a, d) in enumerate(rep.samples, 1):
            lines.append(f"sample {n}: " + ", ".join(f"{k}={format_rational(v)}" for k, v in sorted(a.items()))
                         + f" -> det = {d}")
        if rep.reason:
            lines.append(rep.reason)
        lines.append(rep.verdict)
        return Outcome(EXIT_OK if rep.passed else EXIT_VIOLATION, payload, "\n".join(lines))
    if sub == "bracket":
        parts = [p.strip() for p in args.polys.split(";")]
        if len(parts) != 3 or not all(parts):
            raise InputError("bracket needs three polynomials separated by ';'")
        f, g, h = (poly(p) for p in parts)
        for p in (f, g, h):
            if p.degree() > args.degree_cap:
                raise InputError(f"input degree {p.degree()} above the cap {args.degree_cap}; raise it with --degree-cap")
        res = jacobian_bracket(f, g, h)
        payload = _header("jacobian bracket", input=[str(f), str(g), str(h)], bracket=str(res))
        return Outcome(EXIT_OK, payload, f"{{{f}, {g}, {h}}} = {res}")
    rows = check_families(args.samples, args.seed)
    payload = _header("jacobian families", seed=args.seed, sample_count=args.samples, rows=[r.to_dict() for r in rows])
    lines = [f"{'family':<7} {'printed':<8} {'editorial':<10} {'chain':<6} flag"]
    for r in rows:
        ed = r.editorial.condition.verdict if r.editorial else "-"
        chain = (r.editorial if r.editorial and r.editorial.condition.passed else r.printed).chain_rule
        lines.append(f"{r.id:<7} {r.printed.condition.verdict:<8} {ed:<10} {chain:<6} {r.flag}")
        if r.editorial is not None:
            lines.append(f"        editorial reading: {r.note}")
    # the table is informative: printed failures are findings, not errors
    ok = all(r.printed.chain_rule != "fail" for r in rows if r.printed.condition.passed)
    return Outcome(EXIT_OK if ok else EXIT_VIOLATION, payload, "\n".join(lines))


def cmd_classify(args) -> Outcome:
    rep = classify(args.samples, args.seed)
    payload = _header("classify")
    payload.update(rep.to_dict())
    lines = [f"{'row':<26} {'expected':<9} status"]
    for row in rep.rows:
        flag = row.details.get("flag", "")
        lines.append(f"{row.id:<26} {row.expected:<9} {row.status.upper():<5} {flag}".rstrip())
        if "dimension" in row.details:
            lines.append(f"{'':<26} solution-space dimension {row.details['dimension']}")
        if "associative_intersection" in row.details:
            lines.append(f"{'':<26} associative intersection: {row.details['associative_intersection']['result']}")
        if row.id.startswith("commutative-slice"):
            lines.append(f"{'':<26} {row.details['result']}")
        if row.details.get("note") and row.status != "pass":
            lines.append(f"{'':<26} {row.details['note']}")
    lines.append("result: " + ("PASS" if rep.passed else "FAIL"))
    return Outcome(EXIT_OK if rep.passed else EXIT_VIOLATION, payload, "\n".join(lines))


def cmd_builtins(args) -> Outcome:
    if args.bcommand == "list":
        names = builtin_names() + family_names()
        return Outcome(EXIT_OK, _header("builtins list", names=names), "\n".join(names))
    P = lookup(args.name)
    text = serialize_algebra(P)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return Outcome(EXIT_OK, _header("builtins emit", name=args.name, digest=digest(P)),
                       f"wrote {args.name} to {args.output}")
    return Outcome(EXIT_OK, _header("builtins emit", name=args.name, digest=digest(P)), text.rstrip("\n"))


# parser

def _common(p: argparse.ArgumentParser, samples: bool = True) -> None:
    if samples:
        p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="parameter samples per check")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed for parameter samples")
    p.add_argument("--format", choices=("human", "machine"), default="human")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nambupoisson", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the axioms of an algebra file or builtin:NAME")
    p.add_argument("source")
    p.add_argument("--axioms", help=f"comma-separated subset of {','.join(AXIOMS)}")
    p.add_argument("--set", action="append", metavar="NAME=VALUE", help="fix a parameter")
    p.add_argument("--output", help="write the report here instead of stdout")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="direct sum, tensor product, twist or iterated twist")
    p.add_argument("kind", choices=("twist", "dsum", "tensor", "iterate"))
    p.add_argument("source")
    p.add_argument("other", nargs="?", help="second algebra (dsum) or factor file (tensor)")
    p.add_argument("--matrix", help="twisting map, rows separated by ';' (column j = image of e_j)")
    p.add_argument("--n", type=int, help="iteration count for iterate")
    p.add_argument("--set", action="append", metavar="NAME=VALUE", help="parameter value")
    p.add_argument("--unchecked", action="store_true", help="skip the construction precondition")
    p.add_argument("--output", help="write the constructed algebra here")
    _common(p, samples=False)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("jacobian", help="Jacobian bracket on R[x,y,z] and its twists")
    jsub = p.add_subparsers(dest="jcommand", required=True)
    for name, helptext in (("check-morphism", "det condition for x,y,z -> P1; P2; P3"),
                           ("bracket", "Jacobian bracket of f; g; h")):
        q = jsub.add_parser(name, help=helptext)
        q.add_argument("polys")
        q.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)
        q.add_argument("--output")
        _common(q)
        q.set_defaults(func=cmd_jacobian)
    q = jsub.add_parser("families", help="check the 23 catalogued families")
    q.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)
    q.add_argument("--output")
    _common(q)
    q.set_defaults(func=cmd_jacobian)

    p = sub.add_parser("classify", help="re-verify the 3-dimensional families and the Leibniz spaces")
    p.add_argument("--output")
    _common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("builtins", help="list or emit built-in algebras")
    bsub = p.add_subparsers(dest="bcommand", required=True)
    q = bsub.add_parser("list")
    q.add_argument("--output")
    _common(q, samples=False)
    q.set_defaults(func=cmd_builtins)
    q = bsub.add_parser("emit")
    q.add_argument("name")
    q.add_argument("--output", help="write the algebra file here")
    _common(q, samples=False)
    q.set_defaults(func=cmd_builtins)
    return parser


def _emit(outcome: Outcome, fmt: str, path: str | None, stdout) -> None:
    text = dumps(outcome.payload) if fmt == "machine" else outcome.human + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "human")
    handler: Callable = args.func
    try:
        if getattr(args, "samples", 1) < 1:
            raise InputError("--samples must be at least 1")
        outcome = handler(args)
    except PreconditionError as exc:
        payload = _header(args.command, status="refused", error=str(exc))
        if isinstance(exc.report, VerificationReport):
            payload["report"] = exc.report.to_dict()
        outcome = Outcome(EXIT_VIOLATION, payload, f"refused: {exc}")
    except (InputError, DomainError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    # construct writes the algebra to --output; its report always goes to stdout
    report_path = None if args.command == "construct" else getattr(args, "output", None)
    if args.command == "builtins" and args.bcommand == "emit":
        report_path = None
    _emit(outcome, fmt, report_path, stdout)
    return outcome.code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
