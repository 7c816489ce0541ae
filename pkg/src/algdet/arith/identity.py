"""Randomised polynomial identity testing (Schwartz-Zippel).

Identities over QQ are evaluated in F_q for a fixed 62-bit prime q;
identities over F_p are evaluated in an extension F_{p^m} large enough
that the sample set dwarfs the degree.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

from .field import FieldSpec
from .mpoly import MPoly

Q62 = 2**62 - 57  # prime
MIN_SAMPLE_SET = 2**31


class Resample(ArithmeticError):
    """A denominator vanished at the sampled point."""


class PrimeFieldOps:
    """Arithmetic in F_q on plain ints."""

    def __init__(self, q: int):
        self.q = q
        self.zero = 0
        self.one = 1
        self.size = q

    def from_raw(self, c, field: FieldSpec):
        if field.characteristic == 0:
            den = int(c.denominator) % self.q
            if den == 0:
                raise Resample("denominator vanishes mod q")
            return int(c.numerator) * pow(den, -1, self.q) % self.q
        return int(c) % self.q

    def from_int(self, n: int):
        return n % self.q

    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def neg(self, a):
        return -a % self.q

    def mul(self, a, b):
        return a * b % self.q

    def pow(self, a, e):
        return pow(a, e, self.q)

    def inv(self, a):
        if a % self.q == 0:
            raise Resample("inverse of zero")
        return pow(a, -1, self.q)

    def is_zero(self, a):
        return a % self.q == 0

    def random(self, rng: random.Random):
        return rng.randrange(self.q)


def _pmod(a, f, p):
    """a mod f over F_p, lists low->high, f monic."""
    a = list(a)
    df = len(f) - 1
    for k in range(len(a) - 1, df - 1, -1):
        c = a[k] % p
        if c:
            for j in range(df + 1):
                a[k - df + j] = (a[k - df + j] - c * f[j]) % p
    a = [x % p for x in a[:df]]
    return a + [0] * (df - len(a))


def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _strip(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pgcd(a, b, p):
    a, b = _strip(a), _strip(b)
    while b:
        inv = pow(b[-1], -1, p)
        bm = [x * inv % p for x in b]
        r = a
        while len(r) >= len(bm):
            c = r[-1]
            shift = len(r) - len(bm)
            r = [(r[i] - c * bm[i - shift]) % p if i >= shift else r[i] for i in range(len(r))]
            r = _strip(r)
            if not r:
                break
        a, b = bm, r
    return a


def _is_irreducible(f, p) -> bool:
    m = len(f) - 1
    x = _pmod([0, 1], f, p)
    power = x
    for _ in range(m // 2):
        # power <- power^p mod f
        acc = [1] + [0] * (m - 1)
        base, e = power, p
        while e:
            if e & 1:
                acc = _pmod(_pmul(acc, base, p), f, p)
            base = _pmod(_pmul(base, base, p), f, p)
            e >>= 1
        power = acc
        diff = [(power[i] - x[i]) % p for i in range(m)]
        g = _pgcd(f, diff, p)
        if len(g) > 1:
            return False
    return True


def irreducible_poly(p: int, m: int, seed: int = 0):
    """A monic irreducible polynomial of degree m over F_p (low->high)."""
    if m == 1:
        return [0, 1]
    rng = random.Random(seed)
    while True:
        f = [rng.randrange(p) for _ in range(m)] + [1]
        if f[0] and _is_irreducible(f, p):
            return f


class ExtFieldOps:
    """Arithmetic in F_{p^m} = F_p[x]/(f); elements are tuples of length m."""

    def __init__(self, p: int, m: int):
        self.p, self.m = p, m
        self.f = irreducible_poly(p, m)
        self.zero = (0,) * m
        self.one = (1,) + (0,) * (m - 1)
        self.size = p**m

    def from_int(self, n: int):
        return ((n % self.p),) + (0,) * (self.m - 1)

    def from_raw(self, c, field: FieldSpec):
        if field.characteristic != self.p:
            raise ValueError("coefficient field does not embed")
        return self.from_int(int(c))

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        return tuple(_pmod(_pmul(a, b, self.p), self.f, self.p))

    def pow(self, a, e):
        acc, base = self.one, a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def inv(self, a):
        if not any(a):
            raise Resample("inverse of zero")
        return self.pow(a, self.size - 2)

    def is_zero(self, a):
        return not any(a)

    def random(self, rng: random.Random):
        return tuple(rng.randrange(self.p) for _ in range(self.m))


def eval_ops(field: FieldSpec, degree: int = 1):
    """Evaluation ring for identity testing of polynomials over `field`."""
    if field.characteristic == 0:
        return PrimeFieldOps(Q62)
    p = field.characteristic
    need = max(2 * degree + 1, MIN_SAMPLE_SET)
    m = 1
    while p**m < need:
        m += 1
    if m == 1:
        return PrimeFieldOps(p)
    return ExtFieldOps(p, m)


@dataclass
class Verdict:
    equal: bool
    trials: int
    bound: float | None = None
    witness: dict | None = None
    log10_bound: float | None = None  # survives when `bound` underflows

    def bound_text(self) -> str:
        if self.log10_bound is None or self.log10_bound == float("-inf"):
            return "0"
        if self.bound:
            return f"{self.bound:.3g}"
        return f"10^{self.log10_bound:.1f}"

    def __str__(self):
        if self.equal:
            return f"equal-whp (failure bound {self.bound_text()} after {self.trials} trials)"
        return f"unequal (witness {self.witness})"


def _as_evaluator(p) -> Callable:
    if isinstance(p, MPoly):
        return lambda point, ops: p.eval_with(point, ops)
    return p


def random_eval_equal(
    p,
    q,
    trials: int,
    seed: int,
    *,
    field: FieldSpec | None = None,
    variables=None,
    degree: int | None = None,
) -> Verdict:
    """Compare p and q at random points.

    p, q are MPolys or callables ``f(point, ops)`` where point maps
    variable names to elements of the evaluation ring.  For callables,
    `field`, `variables`, and a total `degree` bound must be given.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    polys = [x for x in (p, q) if isinstance(x, MPoly)]
    if field is None:
        field = polys[0].field
    if variables is None:
        names = []
        for x in polys:
            for n in x.vt.names:
                if n not in names:
                    names.append(n)
        variables = names
    if degree is None:
        degree = max((x.total_degree() for x in polys if not x.is_zero()), default=0)
    ops = eval_ops(field, degree)
    fp, fq = _as_evaluator(p), _as_evaluator(q)
    rng = random.Random(seed)
    done = 0
    attempts = 0
    while done < trials:
        attempts += 1
        if attempts > 100 * trials:
            raise RuntimeError("too many resampled trials")
        point = {n: ops.random(rng) for n in variables}
        try:
            a, b = fp(point, ops), fq(point, ops)
        except Resample:
            continue
        done += 1
        if a != b:
            return Verdict(False, done, witness=point)
    if not degree:
        return Verdict(True, trials, bound=0.0, log10_bound=float("-inf"))
    log10_bound = trials * (math.log10(degree) - math.log10(ops.size))
    return Verdict(True, trials, bound=10.0**log10_bound, log10_bound=log10_bound)
