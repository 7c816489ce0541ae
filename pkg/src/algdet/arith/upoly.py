"""Univariate polynomials in T with MPoly or RatFunc coefficients."""

from __future__ import annotations

from .mpoly import MPoly, format_mpoly
from .ratfunc import RatFunc, simplify


def _is_zero(c) -> bool:
    return c.is_zero()


class UPoly:
    """coeffs[k] is the coefficient of T^k; no trailing zeros."""

    __slots__ = ("coeffs", "field", "vt")

    def __init__(self, coeffs, field=None, vt=None):
        coeffs = list(coeffs)
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        if coeffs:
            field, vt = coeffs[0].field, coeffs[0].vt
        if field is None or vt is None:
            raise ValueError("empty UPoly needs an explicit field and VarTable")
        self.coeffs = coeffs
        self.field = field
        self.vt = vt

    @classmethod
    def monomial(cls, field, vt, k: int, c=1):
        zero = MPoly.zero(field, vt)
        cc = c if isinstance(c, (MPoly, RatFunc)) else MPoly.const(field, vt, c)
        return cls([zero] * k + [cc], field, vt)

    @classmethod
    def T(cls, field, vt):
        return cls.monomial(field, vt, 1)

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        lc = self.leading()
        return isinstance(lc, MPoly) and lc.is_constant() and lc.constant_value() == 1

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return MPoly.zero(self.field, self.vt)

    def _zero(self):
        return MPoly.zero(self.field, self.vt)

    def _lift(self, other) -> "UPoly":
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (MPoly, RatFunc)):
            return UPoly([other], self.field, self.vt)
        return UPoly([MPoly.const(self.field, self.vt, other)], self.field, self.vt)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UPoly([simplify(self[k] + o[k]) for k in range(n)], self.field, self.vt)

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-c for c in self.coeffs], self.field, self.vt)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return UPoly([], self.field, self.vt)
        out = [self._zero() for _ in range(len(self.coeffs) + len(o.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(o.coeffs):
                if not _is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return UPoly([simplify(c) for c in out], self.field, self.vt)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self._lift(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            other = self._lift(other)
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(str(c) for c in self.coeffs))

    def divmod(self, q: "UPoly"):
        """(quotient, remainder) with self = q*quotient + remainder."""
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lc = q.leading()
        dq = q.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < dq:
            return UPoly([], self.field, self.vt), self
        quot = [self._zero() for _ in range(len(rem) - dq)]
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq]
            if _is_zero(c):
                continue
            if isinstance(lc, MPoly) and isinstance(c, MPoly):
                f = c.try_divide(lc)
                if f is None:
                    f = RatFunc(c, lc)
            else:
                f = simplify(RatFunc.lift(c, lc) / lc)
            quot[k] = f
            for j, b in enumerate(q.coeffs):
                rem[k + j] = simplify(rem[k + j] - f * b)
        return UPoly(quot, self.field, self.vt), UPoly(rem[:dq], self.field, self.vt)

    def __divmod__(self, q):
        return self.divmod(q)

    def evaluate(self, x):
        """Horner evaluation at an MPoly, RatFunc, or scalar."""
        acc = self._zero()
        for c in reversed(self.coeffs):
            acc = simplify(acc * x + c)
        return acc

    def map_coeffs(self, fn) -> "UPoly":
        out = [fn(c) for c in self.coeffs]
        if out:
            return UPoly(out)
        return UPoly([], self.field, self.vt)

    def __str__(self):
        return format_upoly(self)

    def __repr__(self):
        return f"UPoly({format_upoly(self)!r})"


def _tpow(k: int, var: str) -> str:
    return "" if k == 0 else var if k == 1 else f"{var}^{k}"


def format_upoly(P: UPoly, var: str = "T") -> str:
    """`T^2 - (2*r + a*s)*T + (r^2 + a*r*s - b*s^2)`, descending powers."""
    if P.is_zero():
        return "0"
    pieces = []
    for k in range(P.degree, -1, -1):
        c = P.coeffs[k]
        if _is_zero(c):
            continue
        tp = _tpow(k, var)
        neg = False
        if isinstance(c, MPoly) and c.field.characteristic == 0:
            neg = c.leading_coefficient() < 0
        body_poly = -c if neg else c
        if isinstance(body_poly, MPoly) and len(body_poly) == 1:
            inner = format_mpoly(body_poly)
            if tp:
                body = tp if inner == "1" else f"{inner}*{tp}"
            else:
                body = inner
        else:
            inner = str(body_poly)
            body = f"({inner})*{tp}" if tp else f"({inner})"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f" - {body}" if neg else f" + {body}")
    return "".join(pieces)


def upoly_divmod(P: UPoly, Q: UPoly):
    return P.divmod(Q)
