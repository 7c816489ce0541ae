"""Associativity locus of 3-dimensional unital algebras with basis {1, x, y}.

The table x^2 = a+bx+cy, xy = d+ex+fy, yx = g+hx+iy, y^2 = j+kx+ly has
12 coordinates a..l.  The locus is claimed to be cut out by four
elimination equations together with the product of the ideals
p1 = (e-h, f-i) and p2 = (c, k, f+i-b, e+h-l).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..algebra import validate
from ..algebra.catalog import dim3comm, dim3generic, dim3nc
from ..arith import GF, QQ, MPoly

NAMES = "abcdefghijkl"


@dataclass
class StrataReport:
    prime: int
    points: int
    associative: int
    component_p1: int
    component_p2: int
    intersection: int
    counterexamples: list = field(default_factory=list)
    families_ok: bool = True
    n_counterexamples: int = 0

    @property
    def passed(self) -> bool:
        return self.families_ok and self.n_counterexamples == 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.points} points, components 2 "
            f"(p1: {self.component_p1}, p2: {self.component_p2}, both: {self.intersection}, "
            f"associative: {self.associative}, counterexamples: {self.n_counterexamples})"
        )


def associativity_residuals(field=QQ) -> list:
    """The nonzero residual polynomials of the unconstrained table."""
    return [v.residual for v in validate(dim3generic(field))]


def families_associative() -> bool:
    return not validate(dim3comm(QQ)) and not validate(dim3nc(QQ))


def _eval_all(p: MPoly, cols, prime: int):
    acc = np.zeros_like(cols[0])
    for exps, c in p.monomials():
        term = np.full_like(cols[0], int(c) % prime)
        for v, e in zip(exps, cols):
            if v:
                term = term * (e**v) % prime
        acc = (acc + term) % prime
    return acc


def alg3_strata_check(prime: int, max_counterexamples: int = 10) -> StrataReport:
    if prime not in (2, 3):
        raise ValueError("enumeration is only supported for p in {2, 3}")
    field_ = GF(prime)
    N = prime**12
    idx = np.arange(N, dtype=np.int64)
    # variable a is the most significant digit
    cols = [(idx // prime ** (11 - k)) % prime for k in range(12)]
    v = dict(zip(NAMES, cols))

    assoc = np.ones(N, dtype=bool)
    for r in associativity_residuals(field_):
        assoc &= _eval_all(r, cols, prime) == 0

    def z(arr):
        return arr % prime == 0

    a, b, c, d, e, f, g, h, i, j, k, l = (v[n] for n in NAMES)
    elim = (
        z(a - f * (f - b) - c * (e - l))
        & z(d - (c * k - e * f))
        & z(g - (c * k - h * i))
        & z(j - (k * (f - b) + e * (e - l)))
    )
    p1 = z(e - h) & z(f - i)
    p2 = z(c) & z(k) & z(f + i - b) & z(e + h - l)
    predicted = elim & (p1 | p2)
    bad = np.nonzero(assoc != predicted)[0]
    examples = [dict(zip(NAMES, (int(col[t]) for col in cols))) for t in bad[:max_counterexamples]]
    return StrataReport(
        prime=prime,
        points=N,
        associative=int(assoc.sum()),
        component_p1=int((assoc & elim & p1).sum()),
        component_p2=int((assoc & elim & p2).sum()),
        intersection=int((assoc & elim & p1 & p2).sum()),
        counterexamples=examples,
        families_ok=families_associative(),
        n_counterexamples=int(len(bad)),
    )
