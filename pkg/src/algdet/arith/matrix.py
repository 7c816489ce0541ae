"""Polynomial matrices and fraction-free (Bareiss) elimination.

The eliminator works column by column in Gauss-Jordan form: after k
steps every pivot row holds the current pivot on its diagonal and zeros
in the other pivot columns, and every entry is a minor of the input.
All divisions are exact polynomial divisions by the previous pivot.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .mpoly import MPoly, VarTable, AUX, InexactDivision
from .upoly import UPoly


class PolyMatrix:
    """Dense matrix of MPoly entries over one field and VarTable."""

    __slots__ = ("rows", "cols", "entries", "field", "vt")

    def __init__(self, entries: Sequence[Sequence[MPoly]], field=None, vt=None):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        self.field = field or rows[0][0].field
        self.vt = vt or rows[0][0].vt
        for r in rows:
            for i, e in enumerate(r):
                if not isinstance(e, MPoly):
                    r[i] = MPoly.const(self.field, self.vt, e)
        self.rows = len(rows)
        self.cols = ncols
        self.entries = rows

    @classmethod
    def identity(cls, field, vt, n: int):
        return cls([[MPoly.const(field, vt, int(i == j)) for j in range(n)] for i in range(n)], field, vt)

    @classmethod
    def from_columns(cls, columns):
        cols = [list(c) for c in columns]
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j):
        return [r[j] for r in self.entries]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return PolyMatrix([self.column(j) for j in range(self.cols)], self.field, self.vt)

    def __matmul__(self, other: "PolyMatrix"):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = MPoly.zero(self.field, self.vt)
                for k in range(self.cols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, self.field, self.vt)

    def __add__(self, other):
        return PolyMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.field, self.vt)

    def __sub__(self, other):
        return PolyMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.field, self.vt)

    def scale(self, c):
        return PolyMatrix([[a * c for a in r] for r in self.entries], self.field, self.vt)

    def map(self, fn):
        return PolyMatrix([[fn(a) for a in r] for r in self.entries])

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __str__(self):
        return "[" + ",\n ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.entries) + "]"

    __repr__ = __str__


def _pivot_cost(p: MPoly):
    return (len(p.terms), p.total_degree())


@dataclass
class _Step:
    row: int
    col: int
    pivot: MPoly
    prev: MPoly
    multipliers: list  # reduced pivot column just before this step


@dataclass
class ColumnEliminator:
    """Fraction-free Gauss-Jordan elimination, fed one column at a time."""

    nrows: int
    field: object
    vt: VarTable
    steps: list = dc_field(default_factory=list)
    columns: list = dc_field(default_factory=list)
    independent: list = dc_field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.steps)

    @property
    def pivot_rows(self):
        return [s.row for s in self.steps]

    @property
    def last_pivot(self) -> MPoly:
        if self.steps:
            return self.steps[-1].pivot
        return MPoly.const(self.field, self.vt, 1)

    def reduce(self, col):
        col = [c if isinstance(c, MPoly) else MPoly.const(self.field, self.vt, c) for c in col]
        if len(col) != self.nrows:
            raise ValueError("column length mismatch")
        for st in self.steps:
            col = _apply_step(st, col)
        return col

    def add_column(self, col) -> bool:
        """Append a column; True if it raised the rank."""
        red = self.reduce(col)
        self.columns.append(red)
        used = set(self.pivot_rows)
        best = None
        for i in range(self.nrows):
            if i in used or red[i].is_zero():
                continue
            if best is None or _pivot_cost(red[i]) < _pivot_cost(red[best]):
                best = i
        if best is None:
            self.independent.append(False)
            return False
        st = _Step(best, len(self.columns) - 1, red[best], self.last_pivot, red)
        # earlier columns are already reduced to Gauss-Jordan form
        for j in range(len(self.columns) - 1):
            self.columns[j] = _apply_step(st, self.columns[j])
        self.columns[-1] = _apply_step(st, red)
        self.steps.append(st)
        self.independent.append(True)
        return True

    def dependence(self):
        """Kernel vector for the last (dependent) column.

        Returns coefficients v_0..v_m over all columns fed so far with
        sum v_j * column_j = 0, the last entry equal to -D where D is the
        final pivot.
        """
        if not self.independent or self.independent[-1]:
            raise ValueError("last column is independent")
        last = self.columns[-1]
        D = self.last_pivot
        zero = MPoly.zero(self.field, self.vt)
        v = [zero] * len(self.columns)
        for st in self.steps:
            v[st.col] = last[st.row]
        v[-1] = -D
        return v


def _apply_step(st: _Step, col):
    r = st.row
    a_r = col[r]
    out = list(col)
    piv, prev, mult = st.pivot, st.prev, st.multipliers
    prev_is_one = prev.is_constant() and prev.constant_value() == 1
    for i in range(len(col)):
        if i == r:
            continue
        m = mult[i]
        x = col[i]
        if x.is_zero() and (m.is_zero() or a_r.is_zero()):
            continue
        val = piv * x
        if not (m.is_zero() or a_r.is_zero()):
            val = val - m * a_r
        if not prev_is_one:
            q = val.try_divide(prev)
            if q is None:
                raise InexactDivision("Bareiss step produced a non-exact division")
            val = q
        out[i] = val
    return out


@dataclass
class BareissResult:
    rank: int
    pivot_rows: list
    pivot_cols: list
    pivots: list
    kernel: list | None = None
    solution: list | None = None
    denominator: MPoly | None = None


def remove_content(vec):
    """Divide a vector of MPolys by the scalar content of its entries."""
    nonzero = [v for v in vec if not v.is_zero()]
    if not nonzero:
        return vec
    field = nonzero[0].field
    if field.characteristic:
        lc = nonzero[-1].leading_coefficient()
        inv = field.inv(lc)
        return [v * inv for v in vec]
    from gmpy2 import gcd, lcm, mpq

    num, den = 0, 1
    for v in nonzero:
        c = v.content()
        num = gcd(num, c.numerator)
        den = lcm(den, c.denominator)
    g = mpq(num, den)
    if nonzero[-1].leading_coefficient() < 0:
        g = -g
    return [v * (1 / g) for v in vec]


def bareiss_solve(M: PolyMatrix, mode: str = "rank") -> BareissResult:
    """rank | kernel-of-columns | linear-solve over the fraction field.

    kernel-of-columns returns the first column dependence found, with
    denominators cleared and scalar content removed.  linear-solve treats
    the last column as the right-hand side and returns numerators plus a
    common denominator (None solution when inconsistent).
    """
    if mode not in ("rank", "kernel-of-columns", "linear-solve"):
        raise ValueError(f"unknown mode {mode!r}")
    el = ColumnEliminator(M.rows, M.field, M.vt)
    cols = M.columns()
    if mode == "linear-solve":
        body, rhs = cols[:-1], cols[-1]
        for c in body:
            el.add_column(c)
        red = el.reduce(rhs)
        used = set(el.pivot_rows)
        if any(not red[i].is_zero() for i in range(M.rows) if i not in used):
            return _result(el, solution=None)
        zero = MPoly.zero(M.field, M.vt)
        sol = [zero] * len(body)
        for st in el.steps:
            sol[st.col] = red[st.row]
        return _result(el, solution=sol, denominator=el.last_pivot)
    for c in cols:
        grew = el.add_column(c)
        if not grew and mode == "kernel-of-columns":
            v = el.dependence()
            v = v + [MPoly.zero(M.field, M.vt)] * (M.cols - len(v))
            return _result(el, kernel=remove_content(v))
    return _result(el)


def _result(el: ColumnEliminator, **kw) -> BareissResult:
    return BareissResult(
        rank=el.rank,
        pivot_rows=[s.row for s in el.steps],
        pivot_cols=[s.col for s in el.steps],
        pivots=[s.pivot for s in el.steps],
        **kw,
    )


def _perm_sign(seq) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        while seq[i] != i:
            j = seq[i]
            seq[i], seq[j] = seq[j], seq[i]
            sign = -sign
    return sign


def determinant(M: PolyMatrix) -> MPoly:
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    el = ColumnEliminator(M.rows, M.field, M.vt)
    for c in M.columns():
        if not el.add_column(c):
            return MPoly.zero(M.field, M.vt)
    return el.last_pivot * _perm_sign(el.pivot_rows)


def adjugate(M: PolyMatrix):
    """(det M, adj M) with M @ adj = det * I, fraction-free."""
    n = M.rows
    if n != M.cols:
        raise ValueError("adjugate of a non-square matrix")
    I = PolyMatrix.identity(M.field, M.vt, n)
    el = ColumnEliminator(n, M.field, M.vt)
    for c in M.columns():
        if not el.add_column(c):
            raise ZeroDivisionError("singular matrix")
    D = el.last_pivot
    sign = _perm_sign(el.pivot_rows)
    # solve M X = e_j: reduced rhs holds D * x in pivot rows
    adj_cols = []
    for c in I.columns():
        red = el.reduce(c)
        x = [None] * n
        for st in el.steps:
            x[st.col] = red[st.row] * sign
        adj_cols.append(x)
    adj = PolyMatrix.from_columns(adj_cols)
    return D * sign, adj


def charpoly_matrix(M: PolyMatrix, var: str = "T") -> UPoly:
    """det(T*I - M) by fraction-free elimination over R[T]."""
    if M.rows != M.cols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    name = var
    while name in M.vt:
        name = "_" + name
    vt = M.vt.extend(aux=[name])
    T = MPoly.var(M.field, vt, name)
    n = M.rows
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            e = -M[i, j].embed(vt)
            if i == j:
                e = e + T
            row.append(e)
        entries.append(row)
    det = determinant(PolyMatrix(entries, M.field, vt))
    return _split_by_var(det, name, M.vt)


def _split_by_var(p: MPoly, name: str, vt: VarTable) -> UPoly:
    idx = p.vt.index(name)
    keep = [i for i in range(len(p.vt)) if i != idx]
    buckets: dict = {}
    for exps, c in p.monomials():
        k = exps[idx]
        buckets.setdefault(k, {})[tuple(exps[i] for i in keep)] = c
    deg = max(buckets) if buckets else 0
    coeffs = [MPoly.from_dict(p.field, vt, buckets.get(k, {})) for k in range(deg + 1)]
    return UPoly(coeffs, p.field, vt)
