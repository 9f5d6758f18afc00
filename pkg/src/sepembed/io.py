"""Problem files and JSON serialisation.

A problem file looks like::

    # comment
    ring x, y, z
    point 0, 0, 0      (optional, defaults to the origin)
    ideal
    x^2 - y
    x*y - z
    end
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Tuple, Union

from .exceptions import PolynomialParseError, ProblemFileError
from .groebner import Ideal
from .poly import Polynomial, Ring, format_polynomial


@dataclass
class Problem:
    ring: Ring
    point: Tuple[Fraction, ...]
    generators: List[Polynomial]

    @property
    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.generators)


def parse_point(text: str, ring: Ring) -> Tuple[Fraction, ...]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        pt = tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad point coordinate in {text!r}") from exc
    if len(pt) != ring.n:
        raise ValueError(f"point has {len(pt)} coordinates, ring has {ring.n} variables")
    return pt


def parse_problem(text: str) -> Problem:
    ring = None
    point = None
    gens: List[Polynomial] = []
    state = "header"
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if state == "header":
            head, _, rest = line.partition(" ")
            if head == "ring":
                if ring is not None:
                    raise ProblemFileError("ring declared twice", lineno)
                try:
                    ring = Ring([v.strip() for v in rest.split(",")])
                except ValueError as exc:
                    raise ProblemFileError(str(exc), lineno) from exc
            elif head == "point":
                if ring is None:
                    raise ProblemFileError("point before ring", lineno)
                try:
                    point = parse_point(rest, ring)
                except ValueError as exc:
                    raise ProblemFileError(str(exc), lineno) from exc
            elif line == "ideal":
                if ring is None:
                    raise ProblemFileError("ideal before ring", lineno)
                state = "ideal"
            else:
                raise ProblemFileError(f"unexpected line {line!r}", lineno)
        elif state == "ideal":
            if line == "end":
                state = "done"
                continue
            try:
                g = ring(line)
            except PolynomialParseError as exc:
                raise ProblemFileError(exc.message, lineno, exc.pos) from exc
            if g.is_zero():
                raise ProblemFileError("zero generator", lineno)
            gens.append(g)
        else:
            raise ProblemFileError(f"text after end: {line!r}", lineno)
    if ring is None:
        raise ProblemFileError("missing ring declaration")
    if state != "done":
        raise ProblemFileError("missing 'ideal' section or 'end'")
    if not gens:
        raise ProblemFileError("ideal has no generators")
    return Problem(ring, point or (Fraction(0),) * ring.n, gens)


def read_problem(path: Union[str, Path]) -> Problem:
    return parse_problem(Path(path).read_text())


def format_problem(problem: Problem) -> str:
    lines = ["ring " + ", ".join(problem.ring.variables)]
    if any(problem.point):
        lines.append("point " + ", ".join(str(a) for a in problem.point))
    lines.append("ideal")
    lines.extend(format_polynomial(g) for g in problem.generators)
    lines.append("end")
    return "\n".join(lines) + "\n"


def polynomial_to_json(f: Polynomial) -> str:
    return format_polynomial(f)


def fraction_to_json(a: Fraction) -> str:
    return str(a)
