"""Exact base fields: the rationals and prime fields."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import gmpy2
from gmpy2 import mpq


class FieldMismatch(ValueError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "QQ" or "GF"
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "QQ":
            if self.characteristic != 0:
                raise ValueError("QQ has characteristic 0")
        elif self.kind == "GF":
            if self.characteristic < 2 or not gmpy2.is_prime(self.characteristic):
                raise ValueError(f"GF({self.characteristic}): characteristic must be prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "GF"

    def __str__(self) -> str:
        return "QQ" if self.kind == "QQ" else f"GF({self.characteristic})"

    # raw element helpers; polynomial code stores raw values (mpq or int mod p)

    def coerce(self, x):
        p = self.characteristic
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"scalar over {x.field} used in {self}")
            return x.value
        if p == 0:
            if isinstance(x, str):
                return mpq(Fraction(x))
            return mpq(x)
        if isinstance(x, int):
            return x % p
        q = Fraction(x) if not isinstance(x, Fraction) else x
        num, den = int(q.numerator), int(q.denominator)
        if den % p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes in {self}")
        return num * pow(den, -1, p) % p

    def zero(self):
        return mpq(0) if self.characteristic == 0 else 0

    def one(self):
        return mpq(1) if self.characteristic == 0 else 1

    def add(self, a, b):
        p = self.characteristic
        return a + b if p == 0 else (a + b) % p

    def sub(self, a, b):
        p = self.characteristic
        return a - b if p == 0 else (a - b) % p

    def mul(self, a, b):
        p = self.characteristic
        return a * b if p == 0 else a * b % p

    def neg(self, a):
        p = self.characteristic
        return -a if p == 0 else -a % p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return 1 / mpq(a) if p == 0 else pow(int(a), -1, p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, a) -> str:
        return str(a)

    def elements(self):
        """Every element of a prime field, in order 0..p-1."""
        if self.characteristic == 0:
            raise ValueError("QQ is infinite")
        return range(self.characteristic)


QQ = FieldSpec("QQ", 0)


def GF(p: int) -> FieldSpec:
    return FieldSpec("GF", p)


def parse_field(text: str) -> FieldSpec:
    t = text.replace(" ", "")
    if t == "QQ":
        return QQ
    if t.startswith("GF(") and t.endswith(")"):
        return GF(int(t[3:-1]))
    raise ValueError(f"unrecognised field {text!r}")


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field."""

    value: object
    field: FieldSpec

    @classmethod
    def of(cls, x, field: FieldSpec) -> "Scalar":
        return cls(field.coerce(x), field)

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field.add(self.value, self._other(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field.sub(self.value, self._other(other)), self.field)

    def __rsub__(self, other):
        return Scalar(self.field.sub(self._other(other), self.value), self.field)

    def __mul__(self, other):
        return Scalar(self.field.mul(self.value, self._other(other)), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field.div(self.value, self._other(other)), self.field)

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def __pow__(self, k: int):
        if k < 0:
            return Scalar(self.field.inv(self.value), self.field) ** (-k)
        p = self.field.characteristic
        v = self.value ** k if p == 0 else pow(int(self.value), k, p)
        return Scalar(v, self.field)

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Scalar({self.value}, {self.field})"
