"""Sparse multivariate polynomials over an exact field.

Monomials are packed into a single Python int.  Each variable gets a
16-bit field, and one extra field on top holds the *graded* degree:
the sum of exponents of coordinate and aux variables (parameters carry
weight 0).  Integer comparison of packed monomials is then the term order
used everywhere: graded by coordinate degree, ties broken
lexicographically in VarTable order.  Monomial multiplication is integer
addition.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Mapping

from .field import FieldSpec, FieldMismatch, Scalar

WIDTH = 16
MASK = (1 << WIDTH) - 1
MAX_EXP = (1 << (WIDTH - 1)) - 1

COORDINATE = "coordinate"
PARAMETER = "parameter"
AUX = "aux"
_KIND_ORDER = {COORDINATE: 0, PARAMETER: 1, AUX: 2}


class VarTableMismatch(ValueError):
    pass


class InexactDivision(ArithmeticError):
    pass


@dataclass(frozen=True)
class VarTable:
    """Ordered, immutable variable names tagged coordinate/parameter/aux."""

    names: tuple
    kinds: tuple

    def __post_init__(self):
        if len(self.names) != len(self.kinds):
            raise ValueError("names and kinds differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        for k in self.kinds:
            if k not in _KIND_ORDER:
                raise ValueError(f"bad variable kind {k!r}")
        order = [_KIND_ORDER[k] for k in self.kinds]
        if order != sorted(order):
            raise ValueError("variables must be ordered coordinates, parameters, aux")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    @classmethod
    def build(cls, coords: Iterable[str] = (), params: Iterable[str] = (), aux: Iterable[str] = ()):
        coords, params, aux = list(coords), list(params), list(aux)
        names = tuple(coords + params + aux)
        kinds = (COORDINATE,) * len(coords) + (PARAMETER,) * len(params) + (AUX,) * len(aux)
        return cls(names, kinds)

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise VarTableMismatch(f"unknown variable {name!r}") from None

    def __contains__(self, name):
        return name in self._index

    def of_kind(self, kind: str) -> tuple:
        return tuple(n for n, k in zip(self.names, self.kinds) if k == kind)

    @property
    def coordinates(self):
        return self.of_kind(COORDINATE)

    @property
    def parameters(self):
        return self.of_kind(PARAMETER)

    @property
    def aux(self):
        return self.of_kind(AUX)

    def kind(self, name: str) -> str:
        return self.kinds[self.index(name)]

    def extend(self, coords=(), params=(), aux=()):
        return VarTable.build(
            list(self.coordinates) + list(coords),
            list(self.parameters) + list(params),
            list(self.aux) + list(aux),
        )

    # packing ------------------------------------------------------------

    def _graded(self, i: int) -> bool:
        return self.kinds[i] != PARAMETER

    def pack(self, exps) -> int:
        n = len(self.names)
        if len(exps) != n:
            raise VarTableMismatch(f"exponent vector of length {len(exps)} for {n} variables")
        m = 0
        g = 0
        for i, e in enumerate(exps):
            if e < 0 or e > MAX_EXP:
                raise ValueError(f"exponent {e} out of range")
            m = (m << WIDTH) | e
            if self._graded(i):
                g += e
        if g > MAX_EXP:
            raise ValueError("degree out of range")
        return (g << (WIDTH * n)) | m

    def unpack(self, m: int) -> tuple:
        n = len(self.names)
        return tuple((m >> (WIDTH * (n - 1 - i))) & MASK for i in range(n))

    def var_monomial(self, i: int) -> int:
        n = len(self.names)
        m = 1 << (WIDTH * (n - 1 - i))
        if self._graded(i):
            m |= 1 << (WIDTH * n)
        return m

    def guard(self) -> int:
        n = len(self.names)
        g = 0
        for _ in range(n + 1):
            g = (g << WIDTH) | (1 << (WIDTH - 1))
        return g

    def graded_degree(self, m: int) -> int:
        return m >> (WIDTH * len(self.names))


_GUARDS: dict = {}


def _guard(vt: VarTable) -> int:
    g = _GUARDS.get(vt)
    if g is None:
        g = _GUARDS[vt] = vt.guard()
    return g


class MPoly:
    """Immutable sparse polynomial: packed monomial -> nonzero raw coefficient."""

    __slots__ = ("field", "vt", "terms", "_hash")

    def __init__(self, field: FieldSpec, vt: VarTable, terms: dict | None = None):
        self.field = field
        self.vt = vt
        self.terms = terms if terms is not None else {}
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, field, vt):
        return cls(field, vt, {})

    @classmethod
    def const(cls, field, vt, c):
        c = field.coerce(c)
        return cls(field, vt, {0: c} if c else {})

    @classmethod
    def var(cls, field, vt, name: str, power: int = 1):
        i = vt.index(name)
        return cls(field, vt, {vt.var_monomial(i) * power: field.one()})

    @classmethod
    def from_dict(cls, field, vt, d: Mapping):
        """Build from {exponent tuple: coefficient}."""
        terms = {}
        for exps, c in d.items():
            c = field.coerce(c)
            if c:
                m = vt.pack(exps)
                terms[m] = field.add(terms.get(m, field.zero()), c)
                if not terms[m]:
                    del terms[m]
        return cls(field, vt, terms)

    def _like(self, terms):
        return MPoly(self.field, self.vt, terms)

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.vt != self.vt:
                raise VarTableMismatch(f"{self.vt.names} vs {other.vt.names}")
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        return MPoly.const(self.field, self.vt, other)

    # predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        return self.terms.get(0, self.field.zero())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.vt == other.vt and self.field == other.field and self.terms == other.terms
        if isinstance(other, (int, Scalar)) or hasattr(other, "denominator"):
            try:
                return self.terms == MPoly.const(self.field, self.vt, other).terms
            except (TypeError, ValueError, ZeroDivisionError, FieldMismatch):
                return NotImplemented
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vt, self.field, frozenset(self.terms.items())))
        return self._hash

    # ring operations ----------------------------------------------------

    def __add__(self, other):
        if getattr(other, "_is_ratfunc", False):
            return NotImplemented
        other = self._coerce(other)
        p = self.field.characteristic
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        r = dict(a)
        for m, c in b.items():
            v = r.get(m)
            if v is None:
                r[m] = c
            else:
                v = v + c
                if p:
                    v %= p
                if v:
                    r[m] = v
                else:
                    del r[m]
        return self._like(r)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.characteristic
        if p:
            return self._like({m: (-c) % p for m, c in self.terms.items()})
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if getattr(other, "_is_ratfunc", False):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        if getattr(other, "_is_ratfunc", False):
            return NotImplemented
        return self._coerce(other) - self

    def __mul__(self, other):
        if getattr(other, "_is_ratfunc", False):
            return NotImplemented
        if not isinstance(other, MPoly):
            c = self.field.coerce(other)
            if not c:
                return self._like({})
            p = self.field.characteristic
            if p:
                return self._like({m: v * c % p for m, v in self.terms.items()})
            return self._like({m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if not b:
            return self._like({})
        r: dict = {}
        get = r.get
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = m1 + m2
                r[m] = get(m, 0) + c1 * c2
        p = self.field.characteristic
        if p:
            r = {m: c % p for m, c in r.items() if c % p}
        else:
            r = {m: c for m, c in r.items() if c}
        return self._like(r)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("integer exponent required")
        if k < 0:
            raise ValueError("negative exponent")
        result = MPoly.const(self.field, self.vt, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        return self * c

    # division -----------------------------------------------------------

    def leading(self):
        """(packed monomial, coefficient) of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms)
        return m, self.terms[m]

    def leading_coefficient(self):
        return self.leading()[1]

    def try_divide(self, q: "MPoly"):
        """Exact quotient self / q, or None when q does not divide self."""
        q = self._coerce(q)
        if not q.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return self._like({})
        field = self.field
        p = field.characteristic
        if len(q.terms) == 1:
            (mq, cq), = q.terms.items()
            inv = field.inv(cq)
            guard = _guard(self.vt)
            out = {}
            for m, c in self.terms.items():
                if ((m | guard) - mq) & guard != guard:
                    return None
                out[m - mq] = c * inv % p if p else c * inv
            return self._like(out)
        lm, lc = q.leading()
        inv = field.inv(lc)
        guard = _guard(self.vt)
        qterms = list(q.terms.items())
        r = dict(self.terms)
        heap = [-m for m in r]
        heapq.heapify(heap)
        quot = {}
        pop, push = heapq.heappop, heapq.heappush
        while heap:
            m = -pop(heap)
            c = r.pop(m, None)
            if c is None:
                continue
            if ((m | guard) - lm) & guard != guard:
                return None
            qm = m - lm
            qc = c * inv % p if p else c * inv
            quot[qm] = qc
            for mq, cq in qterms:
                if mq == lm:
                    continue
                mm = qm + mq
                old = r.get(mm)
                if old is None:
                    v = -qc * cq
                    if p:
                        v %= p
                    if v:
                        r[mm] = v
                        push(heap, -mm)
                else:
                    v = old - qc * cq
                    if p:
                        v %= p
                    if v:
                        r[mm] = v
                    else:
                        del r[mm]
        return self._like(quot)

    def exact_divide(self, q: "MPoly") -> "MPoly":
        out = self.try_divide(q)
        if out is None:
            raise InexactDivision(f"{q} does not divide {self}")
        return out

    def __floordiv__(self, q):
        return self.exact_divide(self._coerce(q))

    # structure ----------------------------------------------------------

    def monomials(self):
        """Yield (exponent tuple, coefficient) in descending term order."""
        unpack = self.vt.unpack
        for m in sorted(self.terms, reverse=True):
            yield unpack(m), self.terms[m]

    def variables(self) -> set:
        used = set()
        for exps, _ in self.monomials():
            for name, e in zip(self.vt.names, exps):
                if e:
                    used.add(name)
        return used

    def degree_in(self, name: str) -> int:
        i = self.vt.index(name)
        n = len(self.vt)
        shift = WIDTH * (n - 1 - i)
        return max(((m >> shift) & MASK for m in self.terms), default=0)

    def weighted_degrees(self, weights: Mapping[str, int]) -> set:
        w = [weights.get(n, 0) for n in self.vt.names]
        return {sum(a * b for a, b in zip(w, exps)) for exps, _ in self.monomials()}

    def total_degree(self) -> int:
        """Total degree in all variables (parameters included)."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(self.vt.unpack(m)) for m in self.terms)

    def coordinate_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.vt.graded_degree(m) for m in self.terms)

    def coefficients(self):
        return list(self.terms.values())

    def content(self):
        """Scalar content: gcd of coefficients over QQ (positive), else 1."""
        if self.field.characteristic or not self.terms:
            return self.field.one()
        from gmpy2 import gcd, lcm, mpq

        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return mpq(num, den)

    def monic(self) -> "MPoly":
        return self * self.field.inv(self.leading_coefficient())

    # substitution / evaluation -----------------------------------------

    def embed(self, vt: VarTable) -> "MPoly":
        """Re-express over a VarTable that contains all variables used here."""
        if vt == self.vt:
            return self
        src = self.vt
        pos = []
        for i, name in enumerate(src.names):
            pos.append(vt.index(name) if name in vt else None)
        out = {}
        for m, c in self.terms.items():
            exps = src.unpack(m)
            new = [0] * len(vt)
            for i, e in enumerate(exps):
                if e:
                    j = pos[i]
                    if j is None:
                        raise VarTableMismatch(f"variable {src.names[i]!r} missing from target table")
                    new[j] = e
            out[vt.pack(new)] = c
        return MPoly(self.field, vt, out)

    def substitute(self, mapping: Mapping[str, "MPoly"], vt: VarTable | None = None) -> "MPoly":
        """Replace variables by polynomials over `vt`; other variables carry over by name."""
        vt = vt or self.vt
        field = self.field
        images = []
        for name in self.vt.names:
            if name in mapping:
                img = mapping[name]
                if not isinstance(img, MPoly):
                    img = MPoly.const(field, vt, img)
                elif img.vt != vt:
                    img = img.embed(vt)
                images.append(img)
            elif name in vt:
                images.append(MPoly.var(field, vt, name))
            else:
                images.append(None)
        powers: dict = {}

        def power(i, e):
            key = (i, e)
            v = powers.get(key)
            if v is None:
                if images[i] is None:
                    raise VarTableMismatch(f"no image for variable {self.vt.names[i]!r}")
                v = powers[key] = images[i] ** e
            return v

        acc: dict = {}
        one = MPoly.const(field, vt, 1)
        for exps, c in self.monomials():
            t = one
            for i, e in enumerate(exps):
                if e:
                    t = t * power(i, e)
            for m, v in t.terms.items():
                acc[m] = acc.get(m, 0) + c * v
        return _clean(field, vt, acc)

    def partial_eval(self, values: Mapping[str, object]) -> "MPoly":
        field = self.field
        consts = {k: MPoly.const(field, self.vt, v) for k, v in values.items()}
        return self.substitute(consts, self.vt)

    def eval(self, values: Mapping[str, object]) -> Scalar:
        field = self.field
        vals = [None] * len(self.vt)
        for k, v in values.items():
            vals[self.vt.index(k)] = field.coerce(v)
        acc = field.zero()
        for exps, c in self.monomials():
            t = c
            for i, e in enumerate(exps):
                if e:
                    if vals[i] is None:
                        raise ValueError(f"no value for variable {self.vt.names[i]!r}")
                    t = field.mul(t, vals[i] ** e if not field.characteristic else pow(int(vals[i]), e, field.characteristic))
            acc = field.add(acc, t)
        return Scalar(acc, field)

    def eval_with(self, values: Mapping[str, object], ops) -> object:
        """Evaluate in a foreign ring described by `ops` (see identity.py)."""
        vals = [None] * len(self.vt)
        for k, v in values.items():
            if k in self.vt:
                vals[self.vt.index(k)] = v
        acc = ops.zero
        for exps, c in self.monomials():
            t = ops.from_raw(c, self.field)
            for i, e in enumerate(exps):
                if e:
                    if vals[i] is None:
                        raise ValueError(f"no value for variable {self.vt.names[i]!r}")
                    t = ops.mul(t, ops.pow(vals[i], e))
            acc = ops.add(acc, t)
        return acc

    # text ---------------------------------------------------------------

    def __str__(self):
        return format_mpoly(self)

    def __repr__(self):
        return f"MPoly({format_mpoly(self)!r})"


def _clean(field: FieldSpec, vt: VarTable, acc: dict) -> MPoly:
    p = field.characteristic
    if p:
        return MPoly(field, vt, {m: c % p for m, c in acc.items() if c % p})
    return MPoly(field, vt, {m: c for m, c in acc.items() if c})


def poly_sum(field: FieldSpec, vt: VarTable, polys) -> MPoly:
    acc: dict = {}
    for q in polys:
        for m, c in q.terms.items():
            acc[m] = acc.get(m, 0) + c
    return _clean(field, vt, acc)


def _coeff_sign_abs(field: FieldSpec, c):
    if field.characteristic == 0 and c < 0:
        return True, -c
    return False, c


def format_monomial(vt: VarTable, exps) -> str:
    # parameters print before coordinates inside a term: al*b^2, a*r*s
    order = [i for i, k in enumerate(vt.kinds) if k == PARAMETER]
    order += [i for i, k in enumerate(vt.kinds) if k != PARAMETER]
    parts = []
    for i in order:
        name, e = vt.names[i], exps[i]
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_term(field, vt, exps, c, first: bool) -> str:
    neg, a = _coeff_sign_abs(field, c)
    mono = format_monomial(vt, exps)
    if not mono:
        body = str(a)
    elif a == 1:
        body = mono
    else:
        body = f"{a}*{mono}"
    if first:
        return f"-{body}" if neg else body
    return f" - {body}" if neg else f" + {body}"


def format_mpoly(p: MPoly) -> str:
    if not p.terms:
        return "0"
    out = []
    for k, (exps, c) in enumerate(p.monomials()):
        out.append(format_term(p.field, p.vt, exps, c, k == 0))
    return "".join(out)


def is_homogeneous(p: MPoly, weights: Mapping[str, int] | None = None):
    """Common weighted degree of all terms, or None.

    Default weights: 1 on coordinate variables, 0 elsewhere.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no degree")
    if weights is None:
        weights = {n: 1 for n in p.vt.coordinates}
    degs = p.weighted_degrees(weights)
    return degs.pop() if len(degs) == 1 else None


def exact_divide(p: MPoly, q: MPoly) -> MPoly:
    return p.exact_divide(q)


def variables(field: FieldSpec, vt: VarTable):
    """Tuple of the variables of `vt` as polynomials, in table order."""
    return tuple(MPoly.var(field, vt, n) for n in vt.names)
