"""Minimal polynomial of the universal element and everything derived from it."""

from __future__ import annotations

import random

from dataclasses import dataclass

from ..algebra import (
    Algebra,
    AlgebraError,
    AlgebraHom,
    Element,
    left_regular_matrix,
    universal_element,
)
from ..arith import (
    ColumnEliminator,
    MPoly,
    PolyMatrix,
    RatFunc,
    UPoly,
    charpoly_matrix,
    is_homogeneous,
)
from ..arith import determinant as matrix_determinant
from ..arith.ratfunc import simplify


class InternalError(AssertionError):
    """A computed object violated a guaranteed property (exit code 3)."""


class NotInvertible(ArithmeticError):
    pass


@dataclass
class CharData:
    algebra: Algebra
    degree: int
    minpoly: UPoly
    det: MPoly
    coeffs: list  # c_1..c_d
    trace: MPoly

    @property
    def vt(self):
        return self.det.vt


@dataclass
class CofactorData:
    Q0: UPoly


@dataclass
class CHData:
    CH: UPoly
    psi: UPoly
    P: UPoly


def _cache(A: Algebra) -> dict:
    c = A.meta.get("_engine_cache")
    if c is None:
        c = A.meta["_engine_cache"] = {}
    return c


def _power_ladder(x: Element):
    """Feed 1, x, x^2, ... to an eliminator until the first dependence."""
    A = x.algebra
    el = ColumnEliminator(A.dim, A.field, x.vt)
    power = A.unit_element(x.vt)
    el.add_column(list(power.coords))
    m = 0
    while True:
        m += 1
        if m > A.dim:
            raise InternalError("powers stayed independent past the dimension")
        power = power * x
        if not el.add_column(list(power.coords)):
            return m, el


def element_degree(x: Element) -> int:
    """Dimension of the subalgebra generated by x (over the parameter fraction field)."""
    coordinate_vars = set(x.vt.coordinates)
    for c in x.coords:
        if isinstance(c, RatFunc) or (c.variables() & coordinate_vars):
            raise AlgebraError("element_degree expects scalar or parameter coordinates")
    m, _ = _power_ladder(x)
    return m


def degree_of_algebraicity(A: Algebra) -> int:
    """Least d with 1, alpha, ..., alpha^d dependent over the coordinate fraction field."""
    cache = _cache(A)
    if "degree" not in cache:
        d, el = _power_ladder(universal_element(A))
        cache["degree"] = d
        cache["ladder"] = el
    return cache["degree"]


def char_data(A: Algebra) -> CharData:
    cache = _cache(A)
    if "char" in cache:
        return cache["char"]
    d = degree_of_algebraicity(A)
    el: ColumnEliminator = cache["ladder"]
    v = el.dependence()
    lead = v[d]
    coeffs = []
    for k in range(d + 1):
        q = v[k].try_divide(lead)
        if q is None:
            raise InternalError(f"minimal polynomial coefficient of T^{k} is not a polynomial")
        coeffs.append(q)
    P = UPoly(coeffs)
    if not P.is_monic() or P.degree != d:
        raise InternalError("minimal polynomial is not monic of degree d")
    cs = []
    for i in range(1, d + 1):
        c = P[d - i] * (-1) ** i
        if not c.is_zero() and is_homogeneous(c) != i:
            raise InternalError(f"characteristic coefficient c_{i} is not homogeneous of degree {i}")
        cs.append(c)
    det = cs[-1]
    if det.is_zero():
        raise InternalError("determinant vanished identically")
    cd = CharData(A, d, P, det, cs, cs[0])
    cache["char"] = cd
    return cd


def minimal_polynomial(A: Algebra) -> UPoly:
    return char_data(A).minpoly


def determinant(A: Algebra) -> MPoly:
    return char_data(A).det


def trace(A: Algebra) -> MPoly:
    return char_data(A).trace


def characteristic_coefficients(A: Algebra) -> list:
    return char_data(A).coeffs


def _at(p: MPoly, A: Algebra, coords, vt) -> MPoly:
    """Evaluate a polynomial in A's coordinates at a coordinate vector over `vt`."""
    mapping = {A.coords[i]: coords[i] for i in range(A.dim)}
    return p.substitute(mapping, vt)


def evaluate_form(p: MPoly, x: Element):
    """A polynomial in coordinates (e.g. det, trace) evaluated at x."""
    A = x.algebra
    if any(isinstance(c, RatFunc) for c in x.coords):
        acc = None
        for exps, c in p.monomials():
            t = RatFunc(MPoly.const(A.field, x.vt, c))
            for name, e in zip(p.vt.names, exps):
                if e:
                    if name in A.coords:
                        t = t * (x.coords[A.coords.index(name)] ** e)
                    else:
                        t = t * (MPoly.var(A.field, x.vt, name) ** e)
            acc = t if acc is None else acc + t
        return simplify(acc) if acc is not None else MPoly.zero(A.field, x.vt)
    return _at(p, A, x.coords, x.vt)


def det_of(x: Element):
    return evaluate_form(determinant(x.algebra), x)


def trace_of(x: Element):
    return evaluate_form(trace(x.algebra), x)


def upoly_at_element(P: UPoly, x: Element) -> Element:
    """P(x), with P's coefficients (polynomials in coordinates) evaluated at x."""
    A = x.algebra
    acc = A.zero_element(x.vt)
    u = A.unit_element(x.vt)
    for c in reversed(P.coeffs):
        acc = acc * x + u.scale(evaluate_form(c, x))
    return acc


def annihilates(A: Algebra) -> bool:
    """P(alpha) = 0 for the universal element."""
    alpha = universal_element(A)
    P = minimal_polynomial(A)
    acc = A.zero_element(alpha.vt)
    u = A.unit_element(alpha.vt)
    for c in reversed(P.coeffs):
        acc = acc * alpha + u.scale(c)
    return acc.is_zero()


def discriminant(A: Algebra) -> MPoly:
    """det [tr(e_i e_j)], a polynomial in the parameters."""
    tr = trace(A)
    pvt = A.pvt
    rows = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            row.append(_at(tr, A, A.table[i][j], pvt))
        rows.append(row)
    return matrix_determinant(PolyMatrix(rows, A.field, pvt))


def unimodular_equation(A: Algebra) -> MPoly:
    return determinant(A) - 1


def cofactor(A: Algebra) -> CofactorData:
    """Q0 with alpha*Q0(alpha) = det(alpha).

    Writing P(T) = T*R(T) + P(0), Q0 = (-1)^(d+1) R.
    """
    cd = char_data(A)
    sign = (-1) ** (cd.degree + 1)
    R = [c * sign for c in cd.minpoly.coeffs[1:]]
    return CofactorData(UPoly(R, A.field, cd.vt))


def invert_element(x: Element, values: dict | None = None) -> Element:
    """x^-1 = Q0(x)/det(x); `values` optionally fixes parameter values first."""
    A = x.algebra
    coordinate_vars = set(A.coords)
    for c in x.coords:
        if isinstance(c, RatFunc) or (c.variables() & coordinate_vars):
            raise AlgebraError("invert_element expects scalar or parameter coordinates")
    Q0 = cofactor(A).Q0
    det = determinant(A)
    if values:
        B = A.specialize(values)
        sub = {k: MPoly.const(A.field, B.vt, v) for k, v in values.items()}
        det = det.substitute(sub, B.vt)
        Q0 = UPoly([c.substitute(sub, B.vt) for c in Q0.coeffs], A.field, B.vt)
        x = Element(B, [_drop_params(c, values, B) for c in x.coords], B.pvt)
        A = B
    dx = evaluate_form(det, x)
    if dx.is_zero():
        raise NotInvertible("det(x) = 0")
    qx = upoly_at_element(Q0, x)
    if dx.is_constant():
        inv = qx.scale(A.field.inv(dx.constant_value()))
    else:
        inv = Element(A, [simplify(RatFunc.lift(c, dx) / dx) for c in qx.coords], x.vt)
    check = x * inv
    if check != A.unit_element(x.vt):
        raise InternalError("x * x^-1 != 1")
    return inv


def _drop_params(c: MPoly, values: dict, B: Algebra) -> MPoly:
    consts = {k: MPoly.const(B.field, c.vt, v) for k, v in values.items()}
    return c.substitute(consts, c.vt).embed(B.pvt)


def cayley_hamilton(A: Algebra) -> CHData:
    """CH = charpoly of left multiplication by alpha, and psi = CH / P."""
    cache = _cache(A)
    if "ch" in cache:
        return cache["ch"]
    alpha = universal_element(A)
    CH = charpoly_matrix(left_regular_matrix(alpha))
    P = minimal_polynomial(A)
    psi, rem = CH.divmod(P)
    if not rem.is_zero():
        raise InternalError("minimal polynomial does not divide the Cayley-Hamilton polynomial")
    if any(isinstance(c, RatFunc) for c in psi.coeffs):
        raise InternalError("Cayley-Hamilton cofactor has non-polynomial coefficients")
    if psi.degree != A.dim - char_data(A).degree:
        raise InternalError("deg psi != n - d")
    out = CHData(CH, psi, P)
    cache["ch"] = out
    return out


def relative_determinant(A: Algebra, B: Algebra, f: AlgebraHom) -> MPoly:
    """det_A / f^* det_B for a surjective homomorphism f: A -> B."""
    if f.kind != "hom":
        raise AlgebraError("relative determinant needs a homomorphism")
    bad = f.problems()
    if bad:
        raise AlgebraError("not a homomorphism: " + "; ".join(bad))
    if not f.is_surjective():
        raise AlgebraError("homomorphism is not surjective")
    detA = determinant(A)
    pulled = f.pullback(determinant(B))
    vt = pulled.vt
    q = detA.embed(vt).try_divide(pulled)
    if q is None:
        raise AlgebraError("f^* det_B does not divide det_A")
    dA, dB = char_data(A).degree, char_data(B).degree
    if is_homogeneous(q) != dA - dB:
        raise InternalError("relative determinant has the wrong degree")
    if not _multiplicative_at_random(A, q):
        raise InternalError("relative determinant failed the multiplicativity spot check")
    return q


def _multiplicative_at_random(A: Algebra, q: MPoly, trials: int = 3, seed: int = 0) -> bool:
    """q(xy) = q(x) q(y) at a few random points with integer coordinates."""
    rng = random.Random(seed)
    names = [n for n in q.vt.names if n not in A.coords]
    for _ in range(trials):
        values = {n: rng.randint(-5, 5) for n in names}
        B = A.specialize({k: v for k, v in values.items() if k in A.params})
        x = [rng.randint(-5, 5) for _ in range(A.dim)]
        y = [rng.randint(-5, 5) for _ in range(A.dim)]
        z = [c.constant_value() for c in (B.element(x) * B.element(y)).coords]

        def at(coords):
            point = dict(values)
            point.update(zip(A.coords, coords))
            return q.eval(point)

        if at(z) != at(x) * at(y):
            return False
    return True
