"""Published closed forms for named catalog algebras, kept apart from the engine.

The engine never consults these; `compare` reports agreement or a discrepancy
so that a disagreement is visible instead of silently matched.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from ..algebra import Algebra
from ..arith import MPoly
from .chardata import determinant


@dataclass
class Comparison:
    name: str
    formula: str
    reference: MPoly
    engine: MPoly

    @property
    def agrees(self) -> bool:
        return self.reference == self.engine

    def message(self) -> str:
        if self.agrees:
            return f"reference formula {self.formula} agrees"
        return (
            f"DISCREPANCY with reference formula {self.formula}: reference gives {self.reference}, "
            f"engine gives {self.engine} (engine convention det = (-1)^d P(0))"
        )


def _sign(perm) -> int:
    s, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        s *= (-1) ** (length - 1)
    return s


def _reference(A: Algebra):
    kind, _, arg = A.name.partition(":")
    v = {name: MPoly.var(A.field, A.vt, name) for name in A.vt.names}
    one = MPoly.const(A.field, A.vt, 1)
    if kind == "quaternion":
        a, b, c, d, al, be = (v[x] for x in ("a", "b", "c", "d", "al", "be"))
        return "a^2 - al*b^2 - be*c^2 + al*be*d^2", a**2 - al * b**2 - be * c**2 + al * be * d**2
    if kind == "exterior":
        r = int(arg)
        return f"(x_empty)^{r}", v[A.coords[0]] ** r
    if kind == "dim2":
        r, s, a, b = (v[x] for x in ("r", "s", "a", "b"))
        return "r^2 - s^2*b + a*r*s", r**2 - s**2 * b + a * r * s
    if kind == "dim3nc":
        r, s, t, e, f, h, i = (v[x] for x in "rstefhi")
        return "(r + i*s + e*t)*(r + f*s + h*t)", (r + i * s + e * t) * (r + f * s + h * t)
    if kind == "matrix":
        n = int(arg)
        x = [[v[A.coords[i * n + j]] for j in range(n)] for i in range(n)]
        acc = MPoly.zero(A.field, A.vt)
        for perm in permutations(range(n)):
            term = one * _sign(perm)
            for i in range(n):
                term = term * x[i][perm[i]]
            acc = acc + term
        return "Leibniz expansion", acc
    if kind == "inseparable":
        p = int(arg)
        t = v["t"]
        acc = MPoly.zero(A.field, A.vt)
        for k, name in enumerate(A.coords):
            acc = acc + v[name] ** p * t**k
        return "-sum_I (x_I)^p t^I", -acc
    return None


def compare(A: Algebra) -> Comparison | None:
    """Engine determinant against the published closed form, when one is known."""
    try:
        ref = _reference(A)
    except (KeyError, ValueError):
        return None
    if ref is None:
        return None
    formula, poly = ref
    return Comparison(A.name, formula, poly, determinant(A))
