"""Fractions of polynomials, compared by cross-multiplication."""

from __future__ import annotations

from .mpoly import MPoly


class RatFunc:
    __slots__ = ("num", "den")
    _is_ratfunc = True

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = MPoly.const(num.field, num.vt, 1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        # content normalisation only: denominator leading coefficient 1
        lc = den.leading_coefficient()
        if lc != 1:
            inv = den.field.inv(lc)
            num, den = num * inv, den * inv
        if not den.is_constant():
            q = num.try_divide(den)
            if q is not None:
                num, den = q, MPoly.const(num.field, num.vt, 1)
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @property
    def vt(self):
        return self.num.vt

    @staticmethod
    def lift(x, like: "RatFunc | MPoly") -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, MPoly):
            return RatFunc(x)
        return RatFunc(MPoly.const(like.field, like.vt, x))

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def to_mpoly(self) -> MPoly:
        if not self.den.is_constant():
            raise ValueError(f"{self} is not a polynomial")
        return self.num * self.field.inv(self.den.constant_value())

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        o = RatFunc.lift(other, self.num)
        if o.den == self.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.lift(other, self.num))

    def __rsub__(self, other):
        return RatFunc.lift(other, self.num) - self

    def __mul__(self, other):
        o = RatFunc.lift(other, self.num)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc.lift(other, self.num)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFunc.lift(other, self.num) / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFunc(self.den, self.num) ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def __eq__(self, other):
        if isinstance(other, (RatFunc, MPoly)) or isinstance(other, int):
            o = RatFunc.lift(other, self.num)
            return self.num * o.den == o.num * self.den
        return NotImplemented

    def __hash__(self):
        raise TypeError("RatFunc equality is cross-multiplicative; not hashable")

    def __str__(self):
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        num = str(self.num) if len(self.num) == 1 else f"({self.num})"
        den = str(self.den) if len(self.den) == 1 else f"({self.den})"
        return f"{num}/{den}"

    __repr__ = __str__


def divide(p, q):
    """p / q as an MPoly when exact, else a RatFunc."""
    if isinstance(p, MPoly) and isinstance(q, MPoly):
        r = p.try_divide(q)
        if r is not None:
            return r
        return RatFunc(p, q)
    return RatFunc.lift(p, q if isinstance(q, (MPoly, RatFunc)) else p) / q


def simplify(x):
    """Demote a RatFunc with constant denominator to an MPoly."""
    if isinstance(x, RatFunc) and x.is_polynomial():
        return x.to_mpoly()
    return x
