"""Polynomial text syntax: integers, named variables, ``+ - * ^`` and parentheses.

Juxtaposition (``2x``, ``x y``) is rejected so that every product is explicit.
"""

from __future__ import annotations

import re
from typing import List, Tuple

from ..errors import CmlabError
from .polyring import Poly, PolyRing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()]))")


class ParseError(CmlabError, ValueError):
    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__("line %d, col %d: %s" % (line, col, message))
        self.line = line
        self.col = col
        self.message = message


def tokenize(text: str, line: int = 1, col0: int = 1) -> List[Tuple[str, str, int]]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos
            while bad < n and text[bad].isspace():
                bad += 1
            raise ParseError("unexpected character %r" % text[bad], line, col0 + bad)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", m.group(1), col0 + start))
        elif m.group(2):
            out.append(("name", m.group(2), col0 + start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            out.append(("op", op, col0 + start))
        pos = m.end()
    out.append(("end", "", col0 + n))
    return out


class _Parser:
    def __init__(self, ring: PolyRing, text: str, line: int, col0: int):
        self.ring = ring
        self.toks = tokenize(text, line, col0)
        self.i = 0
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    def parse(self) -> Poly:
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("int", "name") or tok[1] == "(":
                self.fail("juxtaposition is not allowed; use '*'")
            self.fail("unexpected %r" % tok[1])
        return f

    def expr(self) -> Poly:
        ring = self.ring
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        f = self.term()
        if sign < 0:
            f = ring.neg(f)
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            g = self.term()
            f = ring.add(f, g) if op == "+" else ring.sub(f, g)
        return f

    def term(self) -> Poly:
        f = self.power()
        while self.peek()[1] == "*":
            self.take()
            f = self.ring.mul(f, self.power())
        return f

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a non-negative integer", tok)
            base = self.ring.pow(base, int(tok[1]))
        return base

    def atom(self) -> Poly:
        tok = self.take()
        kind, text = tok[0], tok[1]
        if kind == "int":
            return self.ring.const(int(text))
        if kind == "name":
            if text not in self.ring.names:
                self.fail("unknown variable %r" % text, tok)
            return self.ring.var(text)
        if text == "(":
            f = self.expr()
            close = self.take()
            if close[1] != ")":
                self.fail("expected ')'", close)
            return f
        if text == "-":
            return self.ring.neg(self.power())
        self.fail("unexpected %r" % (text or "end of input"), tok)


def parse_poly(ring: PolyRing, text: str, line: int = 1, col: int = 1) -> Poly:
    """Parse ``text`` into a polynomial of ``ring``; errors carry line/column."""
    return _Parser(ring, text, line, col).parse()
