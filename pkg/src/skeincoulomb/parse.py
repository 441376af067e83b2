"""Recursive-descent parser for skein expressions.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | factor
    factor := atom ('^' ['-'] int)?
    atom   := 'a' | 'b' | 'c' | 'g' '(' ['-'] int ')' | scalar name | int | '(' expr ')'

Scalar names: A = q^{-1/2}, l = q^{-1} t, q, t, s = q^{1/2}, u = t^{1/2}.
Division and negative powers are only allowed for scalars.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .scalars import PARAMS, RatFunc
from .skein import SkeinExpr, gamma_expr

SCALAR_NAMES = {
    "A": PARAMS["A"],
    "l": PARAMS["lambda"],
    "q": PARAMS["q"],
    "t": PARAMS["t"],
    "s": PARAMS["q_half"],
    "u": PARAMS["t_half"],
}
GENERATORS = ("a", "b", "c")

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", "name", "op", "end"
    text: str
    offset: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m.group(1):
            toks.append(_Tok("int", m.group(1), m.start(1)))
        elif m.group(2):
            toks.append(_Tok("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            toks.append(_Tok("op", ch, m.start(3)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def _take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def _accept(self, op: str) -> bool:
        if self.cur.kind == "op" and self.cur.text == op:
            self.i += 1
            return True
        return False

    def _expect(self, op: str) -> None:
        if not self._accept(op):
            raise ParseError(f"expected {op!r}", self.cur.offset)

    def _signed_int(self) -> int:
        neg = self._accept("-")
        tok = self.cur
        if tok.kind != "int":
            raise ParseError("expected an integer", tok.offset)
        self.i += 1
        return -int(tok.text) if neg else int(tok.text)

    def parse(self) -> SkeinExpr:
        e = self.expr()
        if self.cur.kind != "end":
            raise ParseError(f"unexpected {self.cur.text!r}", self.cur.offset)
        return e

    def expr(self) -> SkeinExpr:
        e = self.term()
        while True:
            if self._accept("+"):
                e = e + self.term()
            elif self._accept("-"):
                e = e - self.term()
            else:
                return e

    def term(self) -> SkeinExpr:
        e = self.unary()
        while True:
            if self._accept("*"):
                e = e * self.unary()
            elif self.cur.kind == "op" and self.cur.text == "/":
                offset = self._take().offset
                d = self.unary()
                e = e * _scalar_inverse(d, offset)
            else:
                return e

    def unary(self) -> SkeinExpr:
        if self._accept("-"):
            return -self.unary()
        return self.factor()

    def factor(self) -> SkeinExpr:
        e = self.atom()
        if self.cur.kind == "op" and self.cur.text == "^":
            offset = self._take().offset
            n = self._signed_int()
            if n < 0:
                e = _scalar_inverse(e, offset) ** (-n)
            else:
                e = e ** n
        return e

    def atom(self) -> SkeinExpr:
        tok = self.cur
        if tok.kind == "int":
            self.i += 1
            return SkeinExpr.scalar(int(tok.text))
        if tok.kind == "name":
            self.i += 1
            if tok.text in GENERATORS:
                return SkeinExpr.gen(tok.text)
            if tok.text == "g":
                self._expect("(")
                k = self._signed_int()
                self._expect(")")
                return gamma_expr(k)
            if tok.text in SCALAR_NAMES:
                return SkeinExpr.scalar(SCALAR_NAMES[tok.text])
            raise ParseError(f"unknown identifier {tok.text!r}", tok.offset)
        if self._accept("("):
            e = self.expr()
            self._expect(")")
            return e
        if tok.kind == "end":
            raise ParseError("unexpected end of input", tok.offset)
        raise ParseError(f"unexpected {tok.text!r}", tok.offset)


def _scalar_inverse(e: SkeinExpr, offset: int) -> SkeinExpr:
    if not e.is_scalar():
        raise ParseError("division by a non-scalar", offset)
    c = e.scalar_part()
    if c.is_zero():
        raise ParseError("division by zero", offset)
    return SkeinExpr.scalar(c.inverse())


def parse_expr(text: str) -> SkeinExpr:
    return _Parser(text).parse()


def parse_scalar(text: str) -> RatFunc:
    e = parse_expr(text)
    if not e.is_scalar():
        raise ParseError("expected a scalar expression", 0)
    return e.scalar_part()
