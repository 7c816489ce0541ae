"""Named example algebras."""

from __future__ import annotations

from itertools import combinations

from ..arith import GF, QQ, FieldSpec, MPoly, VarTable
from .algebra import Algebra, AlgebraError

NAMES = (
    "matrix",
    "quaternion",
    "exterior",
    "split",
    "dim2",
    "dim3nc",
    "dim3comm",
    "boolean2",
    "inseparable",
    "group",
    "galois-quadratic",
)


def _make(name, field, params, basis, rule, unit, coords=None):
    """rule(i, j, P) -> {k: coefficient} for e_i * e_j; P maps param names to MPolys."""
    pvt = VarTable.build(params=params)
    P = {p: MPoly.var(field, pvt, p) for p in params}
    n = len(basis)
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            vec = [MPoly.zero(field, pvt) for _ in range(n)]
            for k, c in rule(i, j, P).items():
                vec[k] = vec[k] + (c if isinstance(c, MPoly) else MPoly.const(field, pvt, c))
            row.append(vec)
        table.append(row)
    return Algebra(name, field, params, basis, table, unit, coords)


def matrix_algebra(n: int, field: FieldSpec = QQ) -> Algebra:
    basis = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]

    def rule(a, b, P):
        i, j = divmod(a, n)
        k, l = divmod(b, n)
        return {i * n + l: 1} if j == k else {}

    unit = [int(a // n == a % n) for a in range(n * n)]
    return _make(f"matrix:{n}", field, [], basis, rule, unit)


def quaternion(field: FieldSpec = QQ) -> Algebra:
    # index 0..3 = one, i, j, k
    def rule(a, b, P):
        al, be = P["al"], P["be"]
        if a == 0:
            return {b: 1}
        if b == 0:
            return {a: 1}
        t = {
            (1, 1): {0: al},
            (2, 2): {0: be},
            (3, 3): {0: -al * be},
            (1, 2): {3: 1},
            (2, 1): {3: -1},
            (1, 3): {2: al},
            (3, 1): {2: -al},
            (2, 3): {1: -be},
            (3, 2): {1: be},
        }
        return t[(a, b)]

    return _make("quaternion", field, ["al", "be"], ["one", "i", "j", "k"], rule, [1, 0, 0, 0], ["a", "b", "c", "d"])


def exterior(r: int, field: FieldSpec = QQ) -> Algebra:
    subsets = [s for k in range(r + 1) for s in combinations(range(1, r + 1), k)]
    index = {s: i for i, s in enumerate(subsets)}

    def label(s):
        return "".join(str(x) for x in s) if s else "0"

    basis = ["one" if not s else "e" + label(s) for s in subsets]
    coords = [f"t_{label(s)}" for s in subsets]

    def rule(a, b, P):
        I, J = subsets[a], subsets[b]
        if set(I) & set(J):
            return {}
        inversions = sum(1 for x in I for y in J if x > y)
        return {index[tuple(sorted(I + J))]: -1 if inversions % 2 else 1}

    unit = [int(i == 0) for i in range(len(subsets))]
    return _make(f"exterior:{r}", field, [], basis, rule, unit, coords)


def split(n: int, field: FieldSpec = QQ) -> Algebra:
    basis = [f"f{i + 1}" for i in range(n)]
    return _make(f"split:{n}", field, [], basis, lambda a, b, P: {a: 1} if a == b else {}, [1] * n)


def dim2(field: FieldSpec = QQ) -> Algebra:
    def rule(a, b, P):
        if a == 0:
            return {b: 1}
        if b == 0:
            return {a: 1}
        return {0: P["b"], 1: P["a"]}

    return _make("dim2", field, ["a", "b"], ["one", "x"], rule, [1, 0], ["r", "s"])


def _dim3(name, field, params, x2, xy, yx, y2):
    prods = {(1, 1): x2, (1, 2): xy, (2, 1): yx, (2, 2): y2}

    def rule(a, b, P):
        if a == 0:
            return {b: 1}
        if b == 0:
            return {a: 1}
        return dict(enumerate(prods[(a, b)](P)))

    return _make(name, field, params, ["one", "x", "y"], rule, [1, 0, 0], ["r", "s", "t"])


def dim3nc(field: FieldSpec = QQ) -> Algebra:
    return _dim3(
        "dim3nc",
        field,
        ["e", "f", "h", "i"],
        lambda P: (-P["f"] * P["i"], P["f"] + P["i"], 0),
        lambda P: (-P["e"] * P["f"], P["e"], P["f"]),
        lambda P: (-P["h"] * P["i"], P["h"], P["i"]),
        lambda P: (-P["e"] * P["h"], 0, P["e"] + P["h"]),
    )


def dim3comm(field: FieldSpec = QQ) -> Algebra:
    def xy(P):
        return (P["c"] * P["k"] - P["e"] * P["f"], P["e"], P["f"])

    return _dim3(
        "dim3comm",
        field,
        ["b", "c", "e", "f", "k", "l"],
        lambda P: (P["f"] * (P["f"] - P["b"]) + P["c"] * (P["e"] - P["l"]), P["b"], P["c"]),
        xy,
        xy,
        lambda P: (P["k"] * (P["f"] - P["b"]) + P["e"] * (P["e"] - P["l"]), P["k"], P["l"]),
    )


def dim3generic(field: FieldSpec = QQ) -> Algebra:
    """Unconstrained table x^2=a+bx+cy, xy=d+ex+fy, yx=g+hx+iy, y^2=j+kx+ly.

    Not associative in general; used to derive the associativity equations.
    """
    names = list("abcdefghijkl")

    def trip(a, b, c):
        return lambda P: (P[a], P[b], P[c])

    return _dim3(
        "dim3generic",
        field,
        names,
        trip("a", "b", "c"),
        trip("d", "e", "f"),
        trip("g", "h", "i"),
        trip("j", "k", "l"),
    )


def boolean2() -> Algebra:
    """F_2[x,y]/(x^2-x, xy, y^2-y)."""

    def rule(a, b, P):
        if a == 0:
            return {b: 1}
        if b == 0:
            return {a: 1}
        return {a: 1} if a == b else {}

    return _make("boolean2", GF(2), [], ["one", "x", "y"], rule, [1, 0, 0], ["r", "s", "t"])


def inseparable(p: int) -> Algebra:
    """F_p(t)[u]/(u^p - t), basis 1, u, ..., u^(p-1), parameter t."""
    field = GF(p)
    basis = ["one", "u"] + [f"u{k}" for k in range(2, p)]
    coords = [f"t_{k}" for k in range(p)]

    def rule(a, b, P):
        s = a + b
        return {s: 1} if s < p else {s - p: P["t"]}

    alg = _make(f"inseparable:{p}", field, ["t"], basis, rule, [1] + [0] * (p - 1), coords)
    return alg


def cyclic_group(n: int, field: FieldSpec = QQ) -> Algebra:
    basis = [f"g{k}" for k in range(n)]
    coords = list("rst")[:n] if n <= 3 else [f"t{k + 1}" for k in range(n)]
    return _make(f"group:C{n}", field, [], basis, lambda a, b, P: {(a + b) % n: 1}, [1] + [0] * (n - 1), coords)


def galois_quadratic(field: FieldSpec = QQ) -> Algebra:
    def rule(a, b, P):
        if a == 0:
            return {b: 1}
        if b == 0:
            return {a: 1}
        return {0: P["m"]}

    return _make("galois-quadratic", field, ["m"], ["one", "x"], rule, [1, 0], ["r", "s"])


def catalog(spec: str, field: FieldSpec | None = None) -> Algebra:
    """Look up `name[:arg]`, e.g. ``matrix:2``, ``exterior:3``, ``group:C3``."""
    name, _, arg = spec.partition(":")
    fixed_field = name in ("boolean2", "inseparable")
    if field is not None and fixed_field:
        raise AlgebraError(f"{name} has a fixed base field")
    f = field or QQ

    def need_int(lo=1):
        try:
            v = int(arg)
        except ValueError:
            raise AlgebraError(f"{name} needs an integer argument, got {arg!r}") from None
        if v < lo:
            raise AlgebraError(f"{name}:{v} out of range")
        return v

    if name == "matrix":
        return matrix_algebra(need_int(), f)
    if name == "quaternion":
        return quaternion(f)
    if name == "exterior":
        return exterior(need_int(0), f)
    if name == "split":
        return split(need_int(), f)
    if name == "dim2":
        return dim2(f)
    if name == "dim3nc":
        return dim3nc(f)
    if name == "dim3comm":
        return dim3comm(f)
    if name == "dim3generic":
        return dim3generic(f)
    if name == "boolean2":
        return boolean2()
    if name == "inseparable":
        p = need_int(2)
        try:
            return inseparable(p)
        except ValueError as e:
            raise AlgebraError(str(e)) from None
    if name == "group":
        if not arg.startswith("C"):
            raise AlgebraError("only cyclic groups group:Cn are supported")
        arg = arg[1:]
        return cyclic_group(need_int(), f)
    if name == "galois-quadratic":
        return galois_quadratic(f)
    raise AlgebraError(f"unknown catalog algebra {spec!r}")


# the QQ catalog the engine invariants are stated over
QQ_CATALOG = (
    "matrix:2",
    "matrix:3",
    "quaternion",
    "exterior:2",
    "exterior:3",
    "split:2",
    "split:3",
    "split:4",
    "dim2",
    "dim3nc",
    "dim3comm",
    "group:C2",
    "group:C3",
    "galois-quadratic",
)
