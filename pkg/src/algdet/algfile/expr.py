"""Expressions that are linear in basis symbols with polynomial coefficients in parameters."""

from __future__ import annotations

from dataclasses import dataclass

from ..arith import MPoly
from .lexer import AlgfileError, Token, TokenStream


@dataclass
class Linear:
    """const + sum vec[k] * e_k, every coefficient an MPoly in the parameters."""

    const: MPoly
    vec: dict

    @property
    def is_scalar(self) -> bool:
        return not self.vec

    def __add__(self, o: "Linear") -> "Linear":
        vec = dict(self.vec)
        for k, c in o.vec.items():
            s = vec[k] + c if k in vec else c
            if s.is_zero():
                vec.pop(k, None)
            else:
                vec[k] = s
        return Linear(self.const + o.const, vec)

    def __neg__(self) -> "Linear":
        return Linear(-self.const, {k: -c for k, c in self.vec.items()})

    def __sub__(self, o: "Linear") -> "Linear":
        return self + (-o)

    def scale(self, c: MPoly) -> "Linear":
        return Linear(self.const * c, {k: v * c for k, v in self.vec.items() if not (v * c).is_zero()})


class ExprParser:
    """Recursive descent over: sum := term (('+'|'-') term)*; term := unary (('*'|'/') unary)*;
    unary := '-' unary | power; power := atom ('^' INT)?; atom := INT | ID | '(' sum ')'.
    """

    def __init__(self, ts: TokenStream, field, pvt, basis: dict, params: set):
        self.ts, self.field, self.pvt = ts, field, pvt
        self.basis, self.params = basis, params

    def parse(self) -> Linear:
        return self.sum()

    def sum(self) -> Linear:
        acc = self.term()
        while self.ts.at("+") or self.ts.at("-"):
            op = self.ts.next().text
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def _mul(self, a: Linear, b: Linear, tok: Token) -> Linear:
        if not a.is_scalar and not b.is_scalar:
            raise AlgfileError("nonlinear expression: product of two basis elements", tok.line, tok.col)
        if a.is_scalar:
            return b.scale(a.const)
        return a.scale(b.const)

    def term(self) -> Linear:
        acc = self.unary()
        while self.ts.at("*") or self.ts.at("/"):
            tok = self.ts.next()
            rhs = self.unary()
            if tok.text == "*":
                acc = self._mul(acc, rhs, tok)
                continue
            if self.field.characteristic != 0:
                raise AlgfileError("fractions are only allowed over QQ", tok.line, tok.col)
            if not rhs.is_scalar or not rhs.const.is_constant() or rhs.const.is_zero():
                raise AlgfileError("can only divide by a nonzero number", tok.line, tok.col)
            inv = self.field.inv(rhs.const.constant_value())
            acc = acc.scale(MPoly.const(self.field, self.pvt, inv))
        return acc

    def unary(self) -> Linear:
        if self.ts.at("-"):
            self.ts.next()
            return -self.unary()
        if self.ts.at("+"):
            self.ts.next()
            return self.unary()
        return self.power()

    def power(self) -> Linear:
        base = self.atom()
        if self.ts.at("^"):
            tok = self.ts.next()
            e = int(self.ts.expect_kind("INT", "integer exponent").text)
            if base.is_scalar:
                return Linear(base.const**e, {})
            if e == 0:
                raise AlgfileError("zeroth power of a basis element is ambiguous; write the unit", tok.line, tok.col)
            if e > 1:
                raise AlgfileError("nonlinear expression: power of a basis element", tok.line, tok.col)
        return base

    def atom(self) -> Linear:
        ts = self.ts
        tok = ts.peek()
        zero = MPoly.zero(self.field, self.pvt)
        if tok.kind == "INT":
            ts.next()
            return Linear(MPoly.const(self.field, self.pvt, int(tok.text)), {})
        if tok.kind == "ID":
            ts.next()
            if tok.text in self.basis:
                return Linear(zero, {self.basis[tok.text]: MPoly.const(self.field, self.pvt, 1)})
            if tok.text in self.params:
                return Linear(MPoly.var(self.field, self.pvt, tok.text), {})
            raise AlgfileError(f"unknown identifier {tok.text!r}", tok.line, tok.col)
        if ts.at("("):
            ts.next()
            inner = self.sum()
            ts.expect(")")
            return inner
        raise ts.error(f"expected an expression, found {tok.text or 'end of input'!r}")


def to_coords(lin: Linear, unit, n: int, field, pvt, where: Token | None = None):
    """Coordinates of a Linear, reading scalars as multiples of the unit."""
    coords = [lin.vec.get(k, MPoly.zero(field, pvt)) for k in range(n)]
    if not lin.const.is_zero():
        if unit is None:
            line, col = (where.line, where.col) if where else (0, 0)
            raise AlgfileError("scalar term needs a unit (none declared yet)", line, col)
        coords = [c + lin.const * u for c, u in zip(coords, unit)]
    return coords

