"""Curve expressions: polynomials in x over the Gaussian rationals.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor | factor)*      juxtaposition multiplies
    factor  := '-' factor | power
    power   := primary ('^' INTEGER)?
    primary := NUMBER | 'x' | 'i' | '(' expr ')'

Division is only by nonzero constants.  A leading '+' is rejected.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .dihedral import CurveError, HyperellipticCurve
from .exact import ExactPoly, ExactScalar, squarefree


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


_TOKEN = re.compile(r"\s*(?:(\d+)|([xi])|(\*\*|[-+*/^()]))")


def _tokens(text: str):
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            off = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[off]!r}", off)
        kind = "num" if m.group(1) else ("name" if m.group(2) else "op")
        value = m.group(m.lastindex)
        if value == "**":
            value = "^"
        out.append((kind, value, m.start(m.lastindex)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def fail(self, msg=None):
        kind, val, off = self.peek()
        raise ParseError(msg or (f"unexpected {val!r}" if kind != "end" else "unexpected end"), off)

    def parse(self) -> ExactPoly:
        if self.peek()[1] == "+":
            self.fail("leading '+' is not allowed")
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail()
        return p

    def expr(self) -> ExactPoly:
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def _starts_primary(self) -> bool:
        kind, val, _ = self.peek()
        return kind in ("num", "name") or val == "("

    def term(self) -> ExactPoly:
        p = self.factor()
        while True:
            kind, val, off = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                q = self.factor()
                if not q.is_constant() or not q:
                    raise ParseError("division by a non-constant or zero", off)
                p = p * ExactPoly.const(q.constant_value().inverse())
            elif self._starts_primary():
                p = p * self.power()
            else:
                return p

    def factor(self) -> ExactPoly:
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return -self.factor()
        return self.power()

    def power(self) -> ExactPoly:
        base = self.primary()
        if self.peek()[1] == "^":
            self.take()
            kind, val, off = self.peek()
            if kind != "num":
                self.fail("exponent must be a nonnegative integer")
            self.take()
            return base ** int(val)
        return base

    def primary(self) -> ExactPoly:
        kind, val, off = self.peek()
        if kind == "num":
            self.take()
            return ExactPoly.const(ExactScalar(Fraction(int(val))))
        if kind == "name":
            self.take()
            if val == "x":
                return ExactPoly.var(0, 1)
            return ExactPoly.const(ExactScalar(0, 1))
        if val == "(":
            self.take()
            p = self.expr()
            if self.peek()[1] != ")":
                self.fail("expected ')'")
            self.take()
            return p
        self.fail()


def parse_polynomial(text: str) -> ExactPoly:
    return _Parser(text).parse()


@dataclass(frozen=True)
class CurveExpression:
    source: str
    poly: ExactPoly

    def curve(self) -> HyperellipticCurve:
        return HyperellipticCurve(self.poly)


def parse_curve(text: str, check: bool = True) -> CurveExpression:
    """Parse ``text``; with ``check`` enforce degree 7 or 8 and squarefreeness."""
    p = parse_polynomial(text)
    if check:
        if p.degree() not in (7, 8):
            raise CurveError(f"genus 3 needs degree 7 or 8, got {p.degree()}")
        if not squarefree(p):
            raise CurveError("right-hand side has a repeated root")
    return CurveExpression(text, p)


_TUPLE = re.compile(r"^\s*(W|UW|U)\s*\((.*)\)\s*$")


def parse_tuple(text: str):
    """'U(2,5,2)', 'UW(u1,w,u3)' or 'W(9)' with constant entries."""
    from .dihedral import DihedralTuple
    m = _TUPLE.match(text)
    if not m:
        raise ParseError("expected W(..), UW(..) or U(..)", 0)
    shape, body = m.group(1), m.group(2)
    vals, start = [], m.start(2)
    for piece in body.split(","):
        p = parse_polynomial(piece) if piece.strip() else None
        if p is None or not p.is_constant():
            raise ParseError("tuple entries must be constants", start)
        vals.append(p.constant_value())
        start += len(piece) + 1
    try:
        return DihedralTuple(shape, tuple(vals))
    except ValueError as e:
        raise ParseError(str(e), 0) from None


__all__ = ["ParseError", "CurveExpression", "parse_curve", "parse_polynomial", "parse_tuple"]
