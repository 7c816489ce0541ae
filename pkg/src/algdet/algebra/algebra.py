"""Finite-dimensional unital algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..arith import (
    FieldSpec,
    MPoly,
    PolyMatrix,
    RatFunc,
    VarTable,
    bareiss_solve,
)
from ..arith.mpoly import poly_sum


class AlgebraError(ValueError):
    pass


class Algebra:
    """An n-dimensional algebra with structure constants in parameters.

    ``table[i][j]`` is the coordinate vector of e_i*e_j, a tuple of n
    MPolys over the parameter-only VarTable ``pvt``.
    """

    def __init__(
        self,
        name: str,
        field: FieldSpec,
        params: Sequence[str],
        basis: Sequence[str],
        table,
        unit,
        coords: Sequence[str] | None = None,
    ):
        self.name = name
        self.field = field
        self.params = tuple(params)
        self.basis = tuple(basis)
        n = self.dim = len(self.basis)
        if n < 1:
            raise AlgebraError("dimension must be positive")
        if len(set(self.basis)) != n:
            raise AlgebraError("duplicate basis names")
        self.coords = tuple(coords) if coords is not None else tuple(f"t{i + 1}" for i in range(n))
        if len(self.coords) != n or len(set(self.coords)) != n:
            raise AlgebraError("need n distinct coordinate names")
        clash = set(self.coords) & set(self.params)
        if clash:
            raise AlgebraError(f"coordinate names clash with parameters: {sorted(clash)}")
        self.pvt = VarTable.build(params=self.params)
        self.vt = VarTable.build(self.coords, self.params)
        self.table = tuple(tuple(tuple(self._poly(c) for c in table[i][j]) for j in range(n)) for i in range(n))
        for i in range(n):
            for j in range(n):
                if len(self.table[i][j]) != n:
                    raise AlgebraError(f"product e{i}*e{j} has wrong length")
        self.unit = tuple(self._poly(c) for c in unit)
        if len(self.unit) != n:
            raise AlgebraError("unit has wrong length")
        self._lift_cache: dict = {}
        self.meta: dict = {}

    def _poly(self, c) -> MPoly:
        if isinstance(c, MPoly):
            if c.vt != self.pvt:
                c = c.embed(self.pvt)
            return c
        return MPoly.const(self.field, self.pvt, c)

    def __repr__(self):
        return f"Algebra({self.name!r}, dim={self.dim}, field={self.field}, params={list(self.params)})"

    def structurally_equal(self, other: "Algebra") -> bool:
        return (
            self.field == other.field
            and self.params == other.params
            and self.basis == other.basis
            and self.coords == other.coords
            and self.table == other.table
            and self.unit == other.unit
        )

    def unit_index(self):
        """Index of the basis vector equal to the unit, if any."""
        for i in range(self.dim):
            if all((c.is_constant() and c.constant_value() == (1 if k == i else 0)) for k, c in enumerate(self.unit)):
                return i
        return None

    def lifted(self, vt: VarTable):
        """Nonzero structure constants as (i, j, [(k, c)]) over `vt`."""
        got = self._lift_cache.get(vt)
        if got is None:
            got = []
            for i in range(self.dim):
                for j in range(self.dim):
                    ks = [(k, c.embed(vt)) for k, c in enumerate(self.table[i][j]) if not c.is_zero()]
                    if ks:
                        got.append((i, j, ks))
            self._lift_cache[vt] = got
        return got

    def with_params(self, extra: Sequence[str]) -> "Algebra":
        """Same algebra with additional (unused) parameters declared."""
        params = list(self.params) + [p for p in extra if p not in self.params]
        pvt = VarTable.build(params=params)
        table = [[[c.embed(pvt) for c in self.table[i][j]] for j in range(self.dim)] for i in range(self.dim)]
        unit = [c.embed(pvt) for c in self.unit]
        return Algebra(self.name, self.field, params, self.basis, table, unit, self.coords)

    def specialize(self, values: dict) -> "Algebra":
        """Substitute field values for some parameters."""
        rest = [p for p in self.params if p not in values]
        pvt = VarTable.build(params=rest)
        consts = {k: MPoly.const(self.field, pvt, v) for k, v in values.items()}

        def sub(c: MPoly):
            return c.substitute(consts, pvt)

        table = [[[sub(c) for c in self.table[i][j]] for j in range(self.dim)] for i in range(self.dim)]
        unit = [sub(c) for c in self.unit]
        return Algebra(self.name, self.field, rest, self.basis, table, unit, self.coords)

    def change_field(self, field: FieldSpec) -> "Algebra":
        """Reduce rational structure constants into another field (e.g. QQ -> GF(p))."""
        pvt = self.pvt

        def conv(c: MPoly):
            return MPoly(field, pvt, {m: v for m, v in ((m, field.coerce(v if field.characteristic == 0 else _frac(v))) for m, v in c.terms.items()) if v})

        table = [[[conv(c) for c in self.table[i][j]] for j in range(self.dim)] for i in range(self.dim)]
        unit = [conv(c) for c in self.unit]
        return Algebra(self.name, field, self.params, self.basis, table, unit, self.coords)

    # elements -----------------------------------------------------------

    def element(self, coords, vt: VarTable | None = None) -> "Element":
        vt = vt or self.pvt
        return Element(self, [_lift(c, self.field, vt) for c in coords], vt)

    def basis_element(self, i: int, vt: VarTable | None = None) -> "Element":
        return self.element([int(k == i) for k in range(self.dim)], vt)

    def unit_element(self, vt: VarTable | None = None) -> "Element":
        vt = vt or self.pvt
        return Element(self, [c.embed(vt) for c in self.unit], vt)

    def zero_element(self, vt: VarTable | None = None) -> "Element":
        return self.element([0] * self.dim, vt)


def _frac(v):
    from fractions import Fraction

    return Fraction(int(v.numerator), int(v.denominator))


def _lift(c, field, vt):
    if isinstance(c, MPoly):
        return c if c.vt == vt else c.embed(vt)
    if isinstance(c, RatFunc):
        if c.vt != vt:
            return RatFunc(c.num.embed(vt), c.den.embed(vt))
        return c
    return MPoly.const(field, vt, c)


class Element:
    """Coordinates of an algebra element over a VarTable containing the parameters."""

    __slots__ = ("algebra", "coords", "vt")

    def __init__(self, algebra: Algebra, coords, vt: VarTable):
        if len(coords) != algebra.dim:
            raise AlgebraError("coordinate vector has wrong length")
        for p in algebra.params:
            if p not in vt:
                raise AlgebraError(f"element VarTable lacks parameter {p!r}")
        self.algebra = algebra
        self.coords = tuple(coords)
        self.vt = vt

    def _check(self, other: "Element"):
        if not isinstance(other, Element):
            raise TypeError("expected an Element")
        if other.algebra is not self.algebra and not other.algebra.structurally_equal(self.algebra):
            raise AlgebraError("elements of different algebras")
        if other.vt != self.vt:
            raise AlgebraError("elements over different VarTables")

    def __add__(self, other):
        self._check(other)
        return Element(self.algebra, [a + b for a, b in zip(self.coords, other.coords)], self.vt)

    def __sub__(self, other):
        self._check(other)
        return Element(self.algebra, [a - b for a, b in zip(self.coords, other.coords)], self.vt)

    def __neg__(self):
        return Element(self.algebra, [-a for a in self.coords], self.vt)

    def scale(self, c) -> "Element":
        if isinstance(c, MPoly) and c.vt != self.vt:
            c = c.embed(self.vt)
        return Element(self.algebra, [_times(a, c) for a in self.coords], self.vt)

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self.algebra.unit_element(self.vt)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra.basis == other.algebra.basis and all(a == b for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        return hash(tuple(str(c) for c in self.coords))

    def __repr__(self):
        return f"Element({format_element(self)})"

    def __str__(self):
        return format_element(self)


def _times(a, c):
    return a * c


def format_element(x: Element) -> str:
    from ..arith.mpoly import format_mpoly

    parts = []
    for c, b in zip(x.coords, x.algebra.basis):
        if c.is_zero():
            continue
        if isinstance(c, MPoly) and len(c) == 1:
            s = format_mpoly(c)
            if s == "1":
                piece = b
            elif s == "-1":
                piece = f"-{b}"
            else:
                piece = f"{s}*{b}"
        else:
            piece = f"({c})*{b}"
        parts.append(piece)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def multiply(x: Element, y: Element) -> Element:
    """Bilinear product through the structure constants."""
    x._check(y)
    A = x.algebra
    vt = x.vt
    n = A.dim
    has_rat = any(isinstance(c, RatFunc) for c in x.coords + y.coords)
    if has_rat:
        from ..arith.ratfunc import simplify

        out = [MPoly.zero(A.field, vt) for _ in range(n)]
        for i, j, ks in A.lifted(vt):
            if x.coords[i].is_zero() or y.coords[j].is_zero():
                continue
            xy = x.coords[i] * y.coords[j]
            for k, c in ks:
                out[k] = out[k] + xy * c
        return Element(A, [simplify(c) for c in out], vt)
    buckets = [[] for _ in range(n)]
    for i, j, ks in A.lifted(vt):
        a, b = x.coords[i], y.coords[j]
        if a.is_zero() or b.is_zero():
            continue
        ab = a * b
        for k, c in ks:
            if c.is_constant():
                buckets[k].append(ab * c.constant_value())
            else:
                buckets[k].append(ab * c)
    return Element(A, [poly_sum(A.field, vt, bs) for bs in buckets], vt)


def universal_element(A: Algebra, prefix: str | None = None, vt: VarTable | None = None) -> Element:
    """alpha = t_1 e_1 + ... + t_n e_n with fresh coordinate variables.

    With no prefix the algebra's coordinate names are used; otherwise
    the names are prefix1..prefixn.
    """
    names = list(A.coords) if prefix is None else [f"{prefix}{i + 1}" for i in range(A.dim)]
    clash = set(names) & set(A.params)
    if clash:
        raise AlgebraError(f"coordinate names clash with parameters: {sorted(clash)}")
    if vt is None:
        vt = VarTable.build(names, A.params)
    for nm in names:
        if nm not in vt:
            raise AlgebraError(f"VarTable lacks {nm!r}")
    return Element(A, [MPoly.var(A.field, vt, nm) for nm in names], vt)


def universal_pair(A: Algebra, p1: str = "s", p2: str = "t"):
    """Two independent universal elements over one VarTable."""
    n1 = [f"{p1}{i + 1}" for i in range(A.dim)]
    n2 = [f"{p2}{i + 1}" for i in range(A.dim)]
    vt = VarTable.build(n1 + n2, A.params)
    return universal_element(A, p1, vt), universal_element(A, p2, vt)


def left_regular_matrix(x: Element) -> PolyMatrix:
    """Matrix of y -> x*y in the basis; column j is x*e_j."""
    A = x.algebra
    cols = []
    for j in range(A.dim):
        cols.append(list((x * A.basis_element(j, x.vt)).coords))
    return PolyMatrix([[cols[j][i] for j in range(A.dim)] for i in range(A.dim)], A.field, x.vt)


@dataclass
class Violation:
    kind: str  # "assoc", "unit-left", "unit-right"
    indices: tuple
    component: int
    residual: MPoly

    def describe(self, A: Algebra) -> str:
        names = "".join(f"({A.basis[i]})" for i in self.indices)
        return f"{self.kind} {names} component {A.basis[self.component]}: {self.residual}"


def validate(A: Algebra) -> list:
    """All violated associativity and unit identities, as data."""
    vt = A.pvt
    E = [A.basis_element(i, vt) for i in range(A.dim)]
    prods = [[E[i] * E[j] for j in range(A.dim)] for i in range(A.dim)]
    out = []
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                lhs = prods[i][j] * E[k]
                rhs = E[i] * prods[j][k]
                for c, (a, b) in enumerate(zip(lhs.coords, rhs.coords)):
                    r = a - b
                    if not r.is_zero():
                        out.append(Violation("assoc", (i, j, k), c, r))
    u = A.unit_element(vt)
    for i in range(A.dim):
        for kind, z in (("unit-left", u * E[i]), ("unit-right", E[i] * u)):
            for c, (a, b) in enumerate(zip(z.coords, E[i].coords)):
                r = a - b
                if not r.is_zero():
                    out.append(Violation(kind, (i,), c, r))
    return out


class AlgebraHom:
    """Linear map source -> target given on basis vectors, flagged hom/anti."""

    def __init__(self, source: Algebra, target: Algebra, matrix, kind: str = "hom", name: str = ""):
        if kind not in ("hom", "anti"):
            raise ValueError("kind must be 'hom' or 'anti'")
        self.source, self.target, self.kind, self.name = source, target, kind, name
        pvt = target.pvt
        rows = [[_lift(c, target.field, pvt) for c in row] for row in matrix]
        if len(rows) != target.dim or any(len(r) != source.dim for r in rows):
            raise AlgebraError("hom matrix must be target.dim x source.dim")
        self.matrix = PolyMatrix(rows, target.field, pvt)

    def image_of_basis(self, j: int, vt=None) -> Element:
        vt = vt or self.target.pvt
        return self.target.element([self.matrix[i, j].embed(vt) for i in range(self.target.dim)], vt)

    def apply(self, x: Element, vt: VarTable | None = None) -> Element:
        vt = vt or x.vt
        out = []
        for i in range(self.target.dim):
            acc = MPoly.zero(self.target.field, vt)
            for j in range(self.source.dim):
                f = self.matrix[i, j]
                if f.is_zero() or x.coords[j].is_zero():
                    continue
                acc = acc + x.coords[j].embed(vt) * f.embed(vt)
            out.append(acc)
        return self.target.element(out, vt)

    def problems(self) -> list:
        """Failed hom axioms as text; empty when f is a (anti)homomorphism."""
        S, T = self.source, self.target
        vt = T.pvt
        if S.params != T.params and set(S.params) - set(T.params):
            vt = VarTable.build(params=list(T.params) + [p for p in S.params if p not in T.params])
        bad = []
        f_unit = self.apply(S.unit_element(vt), vt)
        if f_unit != T.unit_element(vt):
            bad.append("unit is not mapped to unit")
        imgs = [self.image_of_basis(j, vt) for j in range(S.dim)]
        for i in range(S.dim):
            for j in range(S.dim):
                lhs = self.apply(S.basis_element(i, vt) * S.basis_element(j, vt), vt)
                rhs = imgs[i] * imgs[j] if self.kind == "hom" else imgs[j] * imgs[i]
                if lhs != rhs:
                    bad.append(f"f({S.basis[i]}*{S.basis[j]}) mismatch")
        return bad

    def is_surjective(self) -> bool:
        return bareiss_solve(self.matrix, "rank").rank == self.target.dim

    def pullback(self, p: MPoly, vt: VarTable | None = None) -> MPoly:
        """p in target coordinates -> polynomial in source coordinates."""
        S, T = self.source, self.target
        vt = vt or VarTable.build(S.coords, list(S.params) + [q for q in T.params if q not in S.params])
        alpha = universal_element(S, None, vt)
        image = self.apply(alpha, vt)
        mapping = {T.coords[i]: image.coords[i] for i in range(T.dim)}
        return p.substitute(mapping, vt)
