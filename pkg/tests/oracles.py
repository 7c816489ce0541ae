"""Independent reference computations used to check the library.

Nothing here imports the library's arithmetic: sympy, fractions and plain
integer recursion provide the answers.
"""

from fractions import Fraction
from itertools import permutations

import sympy


def to_sympy(p):
    """Read an MPoly through its canonical text form."""
    names = {n: sympy.Symbol(n) for n in p.vt.names}
    return sympy.parse_expr(str(p).replace("^", "**"), local_dict=names)


def sym_equal(p, expr, modulus=None) -> bool:
    diff = sympy.expand(to_sympy(p) - expr)
    if modulus:
        if diff == 0:
            return True
        return sympy.Poly(diff, *sorted(diff.free_symbols, key=str), modulus=modulus).is_zero
    return diff == 0


def cofactor_det(m):
    """Laplace expansion along the first row (works for any commutative entries)."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = (-1) ** inv
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def fraction_rank(rows) -> int:
    """Plain Gaussian elimination over Fraction."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def charpoly_cofactor(m, T):
    """det(T*I - M) by cofactor expansion."""
    n = len(m)
    tm = [[(T if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)]
    return sympy.expand(cofactor_det(tm))
