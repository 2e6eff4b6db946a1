"""Text formats: polynomials, systems (one per line) and point lists.

Polynomial grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := INT | VAR ['^' INT] | '(' expr ')'
    VAR    := 'x' INT          (x1, x2, ...)

``#`` starts a comment that runs to the end of the line.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from .heights import PointVariety
from .poly import MPoly


class ParseError(ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\s+|#[^\n]*|(?P<int>\d+)|(?P<var>x\d+)|(?P<op>[-+*^()])|(?P<bad>.)")


def _tokenize(text: str, line0: int = 1):
    tokens = []
    line, start = line0, 0
    for m in _TOKEN.finditer(text):
        col = m.start() - start + 1
        kind = m.lastgroup
        if kind is None:
            nl = m.group().count("\n")
            if nl:
                line += nl
                start = m.start() + m.group().rfind("\n") + 1
            continue
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group()!r}", line, col)
        tokens.append((kind, m.group(), line, col))
    tokens.append(("end", "", line, len(text) - start + 1))
    return tokens


class _Parser:
    def __init__(self, tokens, nvars):
        self.tokens = tokens
        self.pos = 0
        self.nvars = nvars

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], tok[3])

    def expect_op(self, op):
        tok = self.peek()
        if tok[0] != "op" or tok[1] != op:
            self.fail(f"expected {op!r}, found {tok[1] or 'end of input'!r}")
        return self.take()

    def expr(self) -> MPoly:
        neg = False
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            self.take()
            neg = True
        acc = self.term()
        if neg:
            acc = -acc
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if tok[1] == "+" else acc - rhs
            else:
                return acc

    def term(self) -> MPoly:
        acc = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> MPoly:
        tok = self.take()
        kind, val = tok[0], tok[1]
        if kind == "int":
            return MPoly.constant(self.nvars, int(val))
        if kind == "var":
            idx = int(val[1:])
            if idx < 1:
                self.fail("variables are numbered from x1", tok)
            x = MPoly.var(self.nvars, idx - 1)
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                self.take()
                etok = self.peek()
                if etok[0] != "int":
                    self.fail("exponent must be a nonnegative integer literal", etok)
                self.take()
                return x ** int(etok[1])
            return x
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        self.fail(f"unexpected {val or 'end of input'!r}", tok)


def _max_var(tokens) -> int:
    return max((int(v[1:]) for k, v, _, _ in tokens if k == "var"), default=0)


def _parse_tokens(tokens, nvars):
    p = _Parser(tokens, nvars)
    if p.peek()[0] == "end":
        p.fail("empty expression")
    out = p.expr()
    if p.peek()[0] != "end":
        p.fail(f"unexpected {p.peek()[1]!r}")
    return out


def parse_poly(text: str, nvars: Optional[int] = None) -> MPoly:
    """Parse one polynomial; ``nvars`` defaults to the highest variable index used (at least 1)."""
    tokens = _tokenize(text)
    need = _max_var(tokens)
    if nvars is None:
        nvars = max(need, 1)
    elif need > nvars:
        raise ParseError(f"x{need} exceeds the {nvars} declared variables")
    return _parse_tokens(tokens, nvars)


def parse_system(text: str, nvars: Optional[int] = None) -> list[MPoly]:
    """One polynomial per nonblank line, all in the ring of the highest variable used."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if body.strip():
            lines.append((lineno, _tokenize(body, lineno)))
    if not lines:
        raise ParseError("no polynomials in system", 1, 1)
    need = max(_max_var(t) for _, t in lines)
    n = max(need, 1) if nvars is None else nvars
    if need > n:
        raise ParseError(f"x{need} exceeds the {n} declared variables")
    return [_parse_tokens(t, n) for _, t in lines]


def _parse_scalar(s: str, lineno: int, col: int):
    s = s.strip()
    if not re.fullmatch(r"[-+]?\d+(/\d+)?", s):
        raise ParseError(f"invalid rational {s!r}", lineno, col)
    q = Fraction(s)
    return q.numerator if q.denominator == 1 else q


def parse_points(text: str) -> PointVariety:
    """One point per line, comma-separated integers or ``a/b`` rationals."""
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        coords, col = [], 1
        for field in body.split(","):
            try:
                coords.append(_parse_scalar(field, lineno, col))
            except ZeroDivisionError:
                raise ParseError("zero denominator", lineno, col) from None
            col += len(field) + 1
        pts.append((lineno, tuple(coords)))
    if not pts:
        raise ParseError("no points given", 1, 1)
    n = len(pts[0][1])
    for lineno, p in pts:
        if len(p) != n:
            raise ParseError(f"expected {n} coordinates, found {len(p)}", lineno, 1)
    seen = set()
    for lineno, p in pts:
        if p in seen:
            raise ParseError("duplicate point", lineno, 1)
        seen.add(p)
    return PointVariety(n, tuple(p for _, p in pts))
