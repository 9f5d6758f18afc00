"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 parse error, 3 math error, 4 cap exceeded.
Errors print one line ``error: <reason>: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import contextmanager
from typing import Dict, List, Optional

from .bbs import OrderIdeal, bbs_ideal
from .cotangent import linear_part_ideal, tangent_space
from .embed import search_optimal_reembedding
from .exceptions import (
    CapExceededError,
    MathError,
    PolynomialParseError,
    ProblemFileError,
    SepembedError,
    ZNotInLinearPartError,
)
from .gfan import enumerate_gfan
from .groebner import buchberger
from .io import read_problem
from .orderings import make_ordering
from .poly import Ring, format_polynomial
from .separating import find_z_separating_gb, is_z_separating, tail

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_MATH, EXIT_CAP = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _vars(text: str) -> List[str]:
    return [v.strip() for v in text.split(",") if v.strip()]


def _fmt_vector(v) -> str:
    return "(" + ",".join(str(a) for a in v) + ")"


def _fmt_set(names) -> str:
    return "{" + ",".join(names) + "}"


class _Timer:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.timings: Dict[str, float] = {}

    @contextmanager
    def __call__(self, name: str):
        start = time.perf_counter()
        yield
        if self.enabled:
            self.timings[name] = round((time.perf_counter() - start) * 1000, 3)


def _problem_input(args, problem) -> dict:
    return {
        "file": args.file,
        "ring": list(problem.ring.variables),
        "point": [str(a) for a in problem.point],
        "ideal": [format_polynomial(g) for g in problem.generators],
    }


def cmd_lin(args, timer):
    problem = read_problem(args.file)
    with timer("lin"):
        lin = linear_part_ideal(problem.ideal, problem.point)
        tangent = tangent_space(problem.ideal, problem.point)
    n = problem.ring.n
    result = {
        "lin_basis": [format_polynomial(b) for b in lin.basis],
        "lin_dim": lin.dim,
        "cotangent_dim": n - lin.dim,
        "tangent_basis": [[str(a) for a in v] for v in tangent],
    }
    basis = ", ".join(result["lin_basis"]) or "0"
    tan = ", ".join(_fmt_vector(v) for v in tangent) or "0"
    text = f"Lin basis: {basis}; cotangent dim: {n - lin.dim}; tangent basis: {tan}"
    return _problem_input(args, problem), result, text


def cmd_gb(args, timer):
    problem = read_problem(args.file)
    try:
        ordering = make_ordering(args.order, problem.ring)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    with timer("gb"):
        gb = buchberger(problem.ideal, ordering)
    ring = problem.ring
    elements = [{"lt": ring.term_string(lt), "poly": format_polynomial(g)} for lt, g in gb.elements]
    text = "\n".join(f"[{e['lt']}] {e['poly']}" for e in elements)
    inp = _problem_input(args, problem)
    inp["order"] = ordering.spec()
    return inp, {"order": ordering.spec(), "elements": elements}, text


def cmd_tail(args, timer):
    problem = read_problem(args.file)
    if not 1 <= args.poly <= len(problem.generators):
        raise UsageError(f"--poly must be between 1 and {len(problem.generators)}")
    if args.var not in problem.ring:
        raise UsageError(f"unknown variable {args.var!r}")
    f = problem.generators[args.poly - 1]
    try:
        t = tail(f, args.var)
    except ZNotInLinearPartError:
        t = None
    sep = is_z_separating(f, args.var)
    result = {
        "poly": format_polynomial(f),
        "var": args.var,
        "tail": format_polynomial(t) if t is not None else None,
        "separating": sep,
    }
    tail_text = result["tail"] if t is not None else "none"
    text = f"tail: {tail_text}; {args.var}-separating: {'yes' if sep else 'no'}"
    inp = _problem_input(args, problem)
    inp.update(poly=args.poly, var=args.var)
    return inp, result, text


def cmd_separate(args, timer):
    problem = read_problem(args.file)
    z = _vars(args.z)
    _check_vars(z, problem.ring)
    with timer("separate"):
        sgb = find_z_separating_gb(problem.ideal, z)
    inp = _problem_input(args, problem)
    inp["z"] = z
    if sgb is None:
        return inp, {"found": False}, "none"
    result = {
        "found": True,
        "separating_part": [format_polynomial(f) for f in sgb.sep_part],
        "tails": {v: format_polynomial(t) for v, t in sgb.tails.items()},
        "image_ring": list(sgb.split.y),
        "image_part": [format_polynomial(g) for g in sgb.image_part.polynomials],
    }
    lines = ["separating part:"]
    lines += [f"  {p}" for p in result["separating_part"]]
    lines.append(f"image part in Q[{', '.join(sgb.split.y)}]:")
    lines += [f"  {p}" for p in result["image_part"]] or ["  0"]
    return inp, result, "\n".join(lines)


def cmd_reembed(args, timer):
    problem = read_problem(args.file)
    z = _vars(args.z) if args.z else None
    if z:
        _check_vars(z, problem.ring)
    with timer("search"):
        report = search_optimal_reembedding(problem.ideal, problem.point, args.fan, z, args.cap)
    result = report.to_dict()
    lines = [
        f"ambient dim: {report.n}",
        f"lin dim: {report.lin_dim}; cotangent dim: {report.cot_dim}",
        f"Z: {_fmt_set(report.best_z) if report.best_z else 'none'}",
    ]
    emb = result["reembedding"]
    if emb:
        lines.append("images: " + "; ".join(f"{v} -> {p}" for v, p in emb["images"].items()))
        lines.append(f"image ideal in Q[{', '.join(emb['target_ring'])}]: "
                     + (", ".join(emb["image_ideal"]) or "0"))
    else:
        lines.append("no separating tuple; the identity is the optimal separating re-embedding")
    lines.append(f"sepdim: {report.sepdim}")
    if report.fan_cones is not None:
        lines.append(f"fan cones: {report.fan_cones}")
    lines.append(f"edim: {report.edim}")
    inp = _problem_input(args, problem)
    inp.update(z=z, fan=args.fan)
    return inp, result, "\n".join(lines)


def cmd_gfan(args, timer):
    problem = read_problem(args.file)
    with timer("gfan"):
        fan = enumerate_gfan(problem.ideal, cap=args.cap, threads=args.threads)
    ring = problem.ring
    n = ring.n
    classes = sorted(fan.separating_classes().items(), key=lambda kv: (-len(kv[0]), min(kv[1])))
    plain = len(fan.classes.get(frozenset(), []))

    def names(s):
        return [v for v in ring.variables if v in s]

    result = {
        "cones": len(fan),
        "classes": [{"li": names(s), "cones": len(idx), "first": idx[0]} for s, idx in classes],
        "cones_without_li": plain,
        "sepdim": n - fan.max_li,
    }
    lines = [f"cones: {len(fan)}, classes: {len(classes)}"]
    for s, idx in classes:
        lines.append(f"  {_fmt_set(names(s))}: {len(idx)}")
    if plain:
        lines.append(f"  no leading indeterminates: {plain}")
    lines.append(f"sepdim: {n - fan.max_li}")
    if args.export:
        with open(args.export, "w") as fh:
            fh.write(fan.export())
    inp = _problem_input(args, problem)
    inp.update(cap=args.cap)
    return inp, result, "\n".join(lines)


def cmd_bbs(args, timer):
    ring = Ring(_vars(args.vars))
    terms = _vars(args.order_ideal)
    try:
        order_ideal = OrderIdeal(ring, terms)
    except PolynomialParseError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    with timer("bbs"):
        pres = bbs_ideal(order_ideal)
    result = {
        "border": [ring.term_string(b) for b in pres.border],
        "c_variables": list(pres.c_ring.variables),
        "generators": [format_polynomial(g) for g in pres.generators],
    }
    lines = [
        f"order ideal: {', '.join(ring.term_string(t) for t in order_ideal.terms)}",
        f"border: {', '.join(result['border'])}",
        f"c-variables: {pres.c_ring.n}",
        f"generators: {len(pres.generators)}",
    ]
    lines += [f"  {g}" for g in result["generators"]]
    return {"vars": list(ring.variables), "order_ideal": terms}, result, "\n".join(lines)


def _check_vars(names, ring):
    for v in names:
        if v not in ring:
            raise UsageError(f"unknown variable {v!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sepembed", description="Separating re-embeddings of affine schemes.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--timings", action="store_true", help="record timings in JSON output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lin", help="linear part, cotangent and tangent space")
    p.add_argument("file")
    p.set_defaults(func=cmd_lin)

    p = sub.add_parser("gb", help="reduced Gröbner basis")
    p.add_argument("file")
    p.add_argument("--order", default="degrevlex",
                   help="lex, degrevlex, elim:<vars> or weight:<row>;<row>...")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("tail", help="z-tail of a generator")
    p.add_argument("file")
    p.add_argument("--poly", type=int, required=True, help="1-based generator index")
    p.add_argument("--var", required=True)
    p.set_defaults(func=cmd_tail)

    p = sub.add_parser("separate", help="Z-separating Gröbner basis")
    p.add_argument("file")
    p.add_argument("--z", required=True, help="comma-separated variables")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("reembed", help="optimal separating re-embedding report")
    p.add_argument("file")
    p.add_argument("--z", help="variables to probe first")
    p.add_argument("--fan", action="store_true", help="cross-check on the Gröbner fan")
    p.add_argument("--cap", type=int, default=10_000)
    p.set_defaults(func=cmd_reembed)

    p = sub.add_parser("gfan", help="Gröbner fan and leading-indeterminate classes")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=10_000)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--export", metavar="PATH", help="write one line per cone")
    p.set_defaults(func=cmd_gfan)

    p = sub.add_parser("bbs", help="border basis scheme ideal")
    p.add_argument("--vars", required=True)
    p.add_argument("--order-ideal", required=True, help="comma-separated terms, e.g. 1,z,y,x")
    p.set_defaults(func=cmd_bbs)
    return parser


def _fail(code: int, reason: str, message: str) -> int:
    print(f"error: {reason}: {message}", file=sys.stderr)
    return code


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        return _fail(EXIT_USAGE, "usage", str(exc))
    timer = _Timer(args.timings)
    try:
        inp, result, text = args.func(args, timer)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", str(exc))
    except OSError as exc:
        return _fail(EXIT_USAGE, "io-error", str(exc))
    except (PolynomialParseError, ProblemFileError) as exc:
        return _fail(EXIT_PARSE, exc.reason, str(exc))
    except CapExceededError as exc:
        return _fail(EXIT_CAP, exc.reason, str(exc))
    except MathError as exc:
        return _fail(EXIT_MATH, exc.reason, str(exc))
    except SepembedError as exc:
        return _fail(EXIT_MATH, exc.reason, str(exc))
    if args.json:
        doc = {"command": args.command, "input": inp, "result": result, "timings_ms": timer.timings}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
