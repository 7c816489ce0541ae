"""Building new algebras from old ones."""

from __future__ import annotations

from ..arith import MPoly, PolyMatrix, VarTable, adjugate
from ..arith.field import FieldMismatch
from .algebra import Algebra, AlgebraError


def opposite(A: Algebra, name: str | None = None) -> Algebra:
    """Same module, product reversed: a *op b = b * a."""
    n = A.dim
    table = [[A.table[j][i] for j in range(n)] for i in range(n)]
    if name is None:
        name = A.name[len("opposite:"):] if A.name.startswith("opposite:") else f"opposite:{A.name}"
    out = Algebra(name, A.field, A.params, A.basis, table, A.unit, A.coords)
    # engine caches (underscore keys) belong to A alone
    out.meta.update({k: v for k, v in A.meta.items() if not k.startswith("_")})
    return out


def _rename(names_a, names_b):
    """Suffix clashing names with _L/_R; returns (new_a, new_b, renaming)."""
    clash = set(names_a) & set(names_b)
    ra = [f"{x}_L" if x in clash else x for x in names_a]
    rb = [f"{x}_R" if x in clash else x for x in names_b]
    renaming = {}
    for x in sorted(clash):
        renaming[x] = (f"{x}_L", f"{x}_R")
    return ra, rb, renaming


def _reparam(A: Algebra, new_params, pvt: VarTable):
    mapping = {old: MPoly.var(A.field, pvt, new) for old, new in zip(A.params, new_params)}

    def conv(c: MPoly) -> MPoly:
        return c.substitute(mapping, pvt)

    table = [[[conv(c) for c in A.table[i][j]] for j in range(A.dim)] for i in range(A.dim)]
    unit = [conv(c) for c in A.unit]
    return table, unit


def _binary_setup(A: Algebra, B: Algebra):
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    pa, pb, pren = _rename(A.params, B.params)
    params = pa + [p for p in pb if p not in pa]
    pvt = VarTable.build(params=params)
    ta, ua = _reparam(A, pa, pvt)
    tb, ub = _reparam(B, pb, pvt)
    return params, pvt, (ta, ua), (tb, ub), pren


def direct_product(A: Algebra, B: Algebra, name: str | None = None) -> Algebra:
    """A x B with block-diagonal structure and unit (1_A, 1_B)."""
    params, pvt, (ta, ua), (tb, ub), pren = _binary_setup(A, B)
    na, nb = A.dim, B.dim
    n = na + nb
    zero = MPoly.zero(A.field, pvt)
    table = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(na):
        for j in range(na):
            table[i][j] = list(ta[i][j]) + [zero] * nb
    for i in range(nb):
        for j in range(nb):
            table[na + i][na + j] = [zero] * na + list(tb[i][j])
    basis_a, basis_b, bren = _rename(A.basis, B.basis)
    coords_a, coords_b, cren = _rename(A.coords, B.coords)
    coords = coords_a + coords_b
    if cren or set(coords) & set(params):
        # clashing coordinate names: renumber the whole block
        coords = [f"t{i + 1}" for i in range(n)]
    cren = {"A": dict(zip(A.coords, coords[:na])), "B": dict(zip(B.coords, coords[na:]))}
    out = Algebra(
        name or f"{A.name}*{B.name}",
        A.field,
        params,
        basis_a + basis_b,
        table,
        list(ua) + list(ub),
        coords,
    )
    out.meta["renaming"] = {"params": pren, "basis": bren, "coords": cren}
    out.meta["factors"] = (A, B)
    return out


def tensor_product(A: Algebra, B: Algebra, name: str | None = None) -> Algebra:
    """A (x) B, basis a_i (x) b_j ordered lexicographically in (i, j)."""
    params, pvt, (ta, ua), (tb, ub), pren = _binary_setup(A, B)
    na, nb = A.dim, B.dim
    n = na * nb
    zero = MPoly.zero(A.field, pvt)

    def idx(i, j):
        return i * nb + j

    table = [[None] * n for _ in range(n)]
    for i in range(na):
        for j in range(nb):
            for k in range(na):
                for l in range(nb):
                    vec = [zero] * n
                    ca, cb = ta[i][k], tb[j][l]
                    for p in range(na):
                        if ca[p].is_zero():
                            continue
                        for q in range(nb):
                            if not cb[q].is_zero():
                                vec[idx(p, q)] = vec[idx(p, q)] + ca[p] * cb[q]
                    table[idx(i, j)][idx(k, l)] = vec
    unit = [ua[p] * ub[q] for p in range(na) for q in range(nb)]
    basis = [f"{a}_{b}" for a in A.basis for b in B.basis]
    if len(set(basis)) != n:
        basis = [f"b{i + 1}" for i in range(n)]
    out = Algebra(name or f"{A.name}(x){B.name}", A.field, params, basis, table, unit)
    out.meta["renaming"] = {"params": pren}
    return out


def base_change(A: Algebra, M, name: str | None = None) -> Algebra:
    """New basis f_j = sum_i M[i][j] e_i.

    M has field or parameter-polynomial entries with a nonzero constant
    determinant.
    """
    n = A.dim
    pvt = A.pvt
    rows = [[c.embed(pvt) if isinstance(c, MPoly) else MPoly.const(A.field, pvt, c) for c in row] for row in M]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise AlgebraError("base change matrix must be n x n")
    Mm = PolyMatrix(rows, A.field, pvt)
    try:
        det, adj = adjugate(Mm)
    except ZeroDivisionError:
        raise AlgebraError("singular base change matrix") from None
    if det.is_zero():
        raise AlgebraError("singular base change matrix")
    if not det.is_constant():
        raise AlgebraError("base change matrix must have a constant determinant")
    inv_det = A.field.inv(det.constant_value())

    def to_new(v):
        out = []
        for i in range(n):
            acc = MPoly.zero(A.field, pvt)
            for k in range(n):
                if not adj[i, k].is_zero() and not v[k].is_zero():
                    acc = acc + adj[i, k] * v[k]
            out.append(acc * inv_det)
        return out

    table = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            v = [MPoly.zero(A.field, pvt) for _ in range(n)]
            for i in range(n):
                if rows[i][a].is_zero():
                    continue
                for j in range(n):
                    if rows[j][b].is_zero():
                        continue
                    f = rows[i][a] * rows[j][b]
                    for k, c in enumerate(A.table[i][j]):
                        if not c.is_zero():
                            v[k] = v[k] + f * c
            table[a][b] = to_new(v)
    unit = to_new(list(A.unit))
    out = Algebra(name or f"{A.name}[basechange]", A.field, A.params, A.basis, table, unit, A.coords)
    out.meta["base_change_matrix"] = Mm
    return out
