"""Recursive-descent parser for polynomial text.

Grammar (whitespace insignificant)::

    poly   := ['-'] term (('+'|'-') term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    factor := var ('^' nat)?
    coeff  := int ('/' nat)?
    var    := [A-Za-z_][A-Za-z0-9_]*

A leading minus sign is accepted so that printed polynomials parse back.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .exceptions import ExponentOverflowError, PolynomialParseError, UnknownVariableError
from .poly import Polynomial, Ring

MAX_EXPONENT = 2**31 - 1

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            m = _TOKEN.match(stripped, pos)
            if not m:
                bad = pos + len(stripped[pos:]) - len(stripped[pos:].lstrip())
                raise PolynomialParseError(
                    f"unexpected character {stripped[bad]!r}", text, bad
                )
            kind = m.lastgroup
            start = m.start(kind)
            self.tokens.append((kind, m.group(kind), start))
            pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return PolynomialParseError(message, self.text, tok[2])


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    lx = _Lexer(text)
    terms = {}

    def add(exp, c):
        v = terms.get(exp, 0) + c
        if v:
            terms[exp] = v
        else:
            terms.pop(exp, None)

    sign = 1
    if lx.peek()[:2] == ("op", "-"):
        lx.next()
        sign = -1
    while True:
        exp, c = _term(lx, ring)
        add(exp, sign * c)
        tok = lx.peek()
        if tok[0] == "end":
            break
        if tok[0] == "op" and tok[1] in "+-":
            lx.next()
            sign = 1 if tok[1] == "+" else -1
            continue
        raise lx.error(f"expected '+', '-' or end of input, got {tok[1]!r}")
    return Polynomial._raw(ring, terms)


def _term(lx: _Lexer, ring: Ring):
    exp = [0] * ring.n
    coeff = Fraction(1)
    tok = lx.peek()
    if tok[0] == "int":
        lx.next()
        num = int(tok[1])
        if lx.peek()[:2] == ("op", "/"):
            lx.next()
            dtok = lx.next()
            if dtok[0] != "int":
                raise lx.error("expected a denominator", dtok)
            den = int(dtok[1])
            if den == 0:
                raise lx.error("zero denominator", dtok)
            coeff = Fraction(num, den)
        else:
            coeff = Fraction(num)
        if lx.peek()[:2] != ("op", "*"):
            return tuple(exp), coeff
        lx.next()
        _factor(lx, ring, exp)
    elif tok[0] == "var":
        _factor(lx, ring, exp)
    else:
        raise lx.error(f"expected a coefficient or variable, got {tok[1] or 'end of input'!r}")
    while lx.peek()[:2] == ("op", "*"):
        lx.next()
        _factor(lx, ring, exp)
    return tuple(exp), coeff


def _factor(lx: _Lexer, ring: Ring, exp: list) -> None:
    tok = lx.next()
    if tok[0] != "var":
        raise lx.error(f"expected a variable, got {tok[1] or 'end of input'!r}", tok)
    if tok[1] not in ring:
        raise UnknownVariableError(f"unknown variable {tok[1]!r}", lx.text, tok[2])
    power = 1
    if lx.peek()[:2] == ("op", "^"):
        lx.next()
        ptok = lx.next()
        if ptok[0] != "int":
            raise lx.error("expected a natural number exponent", ptok)
        power = int(ptok[1])
    i = ring.index(tok[1])
    exp[i] += power
    if exp[i] > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent exceeds {MAX_EXPONENT}", lx.text, tok[2])
