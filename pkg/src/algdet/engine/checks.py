"""Verification of the determinant's defining identities on a given algebra."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..algebra import (
    Algebra,
    AlgebraHom,
    base_change,
    catalog,
    direct_product,
    left_regular_matrix,
    opposite,
    universal_element,
    universal_pair,
)
from ..arith import GF, MPoly, PolyMatrix, is_homogeneous, random_eval_equal
from ..arith import determinant as matrix_determinant
from .chardata import (
    InternalError,
    NotInvertible,
    annihilates,
    char_data,
    determinant,
    invert_element,
    trace,
)

PROPERTIES = (
    "mult",
    "annihilation",
    "homogeneity",
    "units",
    "opposite",
    "product",
    "invariance",
    "base-change",
    "degree-divides",
    "trace-symmetry",
)

EXACT_MULT_MAX_VARS = 8


@dataclass
class CheckConfig:
    mode: str = "auto"  # auto | exact | random
    trials: int = 20
    seed: int = 0
    prime: int = 5
    samples: int = 200
    hom: AlgebraHom | None = None
    other: Algebra | None = None
    matrix: list | None = None


@dataclass
class CheckResult:
    property: str
    status: str  # PASS | FAIL | INFO
    detail: str = ""
    bound: str | None = None
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status != "FAIL"

    def line(self) -> str:
        out = f"{self.status} {self.property}"
        if self.detail:
            out += f": {self.detail}"
        if self.bound is not None:
            out += f" (failure bound {self.bound})"
        return out


def _det_at(det: MPoly, A: Algebra, coords, vt) -> MPoly:
    return det.substitute({A.coords[i]: coords[i] for i in range(A.dim)}, vt)


def det_at_unit(A: Algebra) -> MPoly:
    return _det_at(determinant(A), A, A.unit, A.pvt)


# -- numeric evaluation helpers for random mode ----------------------------


def _numeric_structure(A: Algebra, point: dict, ops):
    out = []
    for i, j, ks in A.lifted(A.pvt):
        out.append((i, j, [(k, c.eval_with(point, ops)) for k, c in ks]))
    return out


def _numeric_mul(S, n, x, y, ops):
    z = [ops.zero] * n
    for i, j, ks in S:
        if ops.is_zero(x[i]) or ops.is_zero(y[j]):
            continue
        xy = ops.mul(x[i], y[j])
        for k, c in ks:
            z[k] = ops.add(z[k], ops.mul(xy, c))
    return z


def _form_at(p: MPoly, A: Algebra, coords, point, ops):
    values = dict(point)
    for name, v in zip(A.coords, coords):
        values[name] = v
    return p.eval_with(values, ops)


def _struct_degree(A: Algebra) -> int:
    return max((c.total_degree() for _, _, ks in A.lifted(A.pvt) for _, c in ks), default=0)


# -- individual properties -------------------------------------------------


def check_mult(A: Algebra, cfg: CheckConfig) -> CheckResult:
    det = determinant(A)
    unit_ok = det_at_unit(A) == 1
    mode = cfg.mode
    if mode == "auto":
        mode = "exact" if 2 * A.dim <= EXACT_MULT_MAX_VARS else "random"
    if mode == "exact":
        a, b = universal_pair(A, "s", "t")
        vt = a.vt
        ab = a * b
        lhs = _det_at(det, A, ab.coords, vt)
        rhs = _det_at(det, A, a.coords, vt) * _det_at(det, A, b.coords, vt)
        ok = lhs == rhs and unit_ok
        return CheckResult("mult", "PASS" if ok else "FAIL", f"exact, det(1)={'1' if unit_ok else 'not 1'}")
    n = A.dim
    s_names = [f"s{i + 1}" for i in range(n)]
    t_names = [f"t{i + 1}" for i in range(n)]

    def lhs(point, ops):
        S = _numeric_structure(A, point, ops)
        x = [point[v] for v in s_names]
        y = [point[v] for v in t_names]
        return _form_at(det, A, _numeric_mul(S, n, x, y, ops), point, ops)

    def rhs(point, ops):
        x = [point[v] for v in s_names]
        y = [point[v] for v in t_names]
        return ops.mul(_form_at(det, A, x, point, ops), _form_at(det, A, y, point, ops))

    degree = det.total_degree() * (2 + _struct_degree(A))
    verdict = random_eval_equal(
        lhs,
        rhs,
        cfg.trials,
        cfg.seed,
        field=A.field,
        variables=s_names + t_names + list(A.params),
        degree=degree,
    )
    ok = verdict.equal and unit_ok
    detail = f"random, {cfg.trials} trials, seed {cfg.seed}"
    if not verdict.equal:
        detail += f", witness {verdict.witness}"
    return CheckResult("mult", "PASS" if ok else "FAIL", detail, bound=verdict.bound_text())


def check_annihilation(A: Algebra, cfg: CheckConfig) -> CheckResult:
    ok = annihilates(A)
    return CheckResult("annihilation", "PASS" if ok else "FAIL", "P(alpha) = 0" if ok else "P(alpha) != 0")


def check_homogeneity(A: Algebra, cfg: CheckConfig) -> CheckResult:
    cd = char_data(A)
    bad = [i + 1 for i, c in enumerate(cd.coeffs) if not c.is_zero() and is_homogeneous(c) != i + 1]
    ok = not bad and is_homogeneous(cd.det) == cd.degree
    return CheckResult("homogeneity", "PASS" if ok else "FAIL", f"d={cd.degree}" + (f", bad c_{bad}" if bad else ""))


def units_samples(A: Algebra, prime: int, samples: int, seed: int) -> dict:
    """Sample x over F_p: det(x) != 0 iff L_x invertible; inverses round-trip."""
    B = A if A.field.characteristic == prime else A.change_field(GF(prime))
    det = determinant(B)
    rng = random.Random(seed)
    discrepancies = []
    invertible = roundtrips = 0
    spec_cache: dict = {}
    for _ in range(samples):
        values = {p: rng.randrange(prime) for p in B.params}
        x = [rng.randrange(prime) for _ in range(B.dim)]
        key = tuple(sorted(values.items()))
        Bs = spec_cache.get(key)
        if Bs is None:
            Bs = spec_cache[key] = B.specialize(values) if values else B
        point = dict(values)
        point.update(zip(B.coords, x))
        dx = det.eval(point)
        L = left_regular_matrix(Bs.element(x))
        lx = matrix_determinant(L)
        if bool(dx) != (not lx.is_zero()):
            discrepancies.append((values, x))
        if dx:
            invertible += 1
            try:
                invert_element(B.element(x), values=values or None)
                roundtrips += 1
            except (NotInvertible, InternalError):
                pass
    return {
        "prime": prime,
        "samples": samples,
        "discrepancies": discrepancies,
        "invertible": invertible,
        "roundtrips": roundtrips,
    }


def check_units(A: Algebra, cfg: CheckConfig) -> CheckResult:
    r = units_samples(A, cfg.prime, cfg.samples, cfg.seed)
    ok = not r["discrepancies"] and r["roundtrips"] == r["invertible"]
    detail = (
        f"GF({cfg.prime}), {cfg.samples} samples, {len(r['discrepancies'])} discrepancies, "
        f"{r['roundtrips']}/{r['invertible']} inverses round-trip"
    )
    return CheckResult("units", "PASS" if ok else "FAIL", detail, data=r)


def check_opposite(A: Algebra, cfg: CheckConfig) -> CheckResult:
    ok = determinant(opposite(A)) == determinant(A)
    return CheckResult("opposite", "PASS" if ok else "FAIL")


def _renamed_det(F: Algebra, C: Algebra, offset: int, param_names) -> MPoly:
    """det_F re-expressed in the coordinates of a product C, block at `offset`."""
    det = determinant(F)
    mapping = {F.coords[i]: MPoly.var(C.field, C.vt, C.coords[offset + i]) for i in range(F.dim)}
    for old, new in zip(F.params, param_names):
        mapping[old] = MPoly.var(C.field, C.vt, new)
    return det.substitute(mapping, C.vt)


def product_formula(A: Algebra, B: Algebra):
    C = direct_product(A, B)
    ren = C.meta["renaming"]["params"]
    pa = [ren[p][0] if p in ren else p for p in A.params]
    pb = [ren[p][1] if p in ren else p for p in B.params]
    lhs = determinant(C)
    rhs = _renamed_det(A, C, 0, pa) * _renamed_det(B, C, A.dim, pb)
    return lhs, rhs


def check_product(A: Algebra, cfg: CheckConfig) -> CheckResult:
    B = cfg.other or catalog("split:1", A.field)
    lhs, rhs = product_formula(A, B)
    ok = lhs == rhs
    return CheckResult("product", "PASS" if ok else "FAIL", f"with {B.name}")


def check_invariance(A: Algebra, cfg: CheckConfig) -> CheckResult:
    f = cfg.hom
    if f is None:
        return CheckResult("invariance", "FAIL", "no (anti)automorphism supplied")
    bad = f.problems()
    if bad:
        return CheckResult("invariance", "FAIL", "not an (anti)automorphism: " + "; ".join(bad[:3]))
    det = determinant(A)
    pulled = f.pullback(det)
    ok = pulled == det.embed(pulled.vt)
    return CheckResult("invariance", "PASS" if ok else "FAIL", f"{f.kind} {f.name}".strip())


def random_unimodular(n: int, seed: int, steps: int | None = None):
    """Seeded integer matrix of determinant 1 (product of elementary matrices)."""
    rng = random.Random(seed)
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps or 3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            break
        c = rng.choice([-2, -1, 1, 2])
        for r in range(n):
            M[r][j] += c * M[r][i]
    return M


def base_change_equivariance(A: Algebra, M) -> bool:
    """det_{A'}(s) == det_A(M s) for A' = base_change(A, M)."""
    B = base_change(A, M)
    vt = A.vt
    alpha = universal_element(A)
    rows = [[c if isinstance(c, MPoly) else MPoly.const(A.field, vt, c) for c in row] for row in M]
    Ms = [MPoly.zero(A.field, vt) for _ in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            Ms[i] = Ms[i] + rows[i][j].embed(vt) * alpha.coords[j]
    rhs = _det_at(determinant(A), A, Ms, vt)
    return determinant(B) == rhs


def check_base_change(A: Algebra, cfg: CheckConfig) -> CheckResult:
    M = cfg.matrix or random_unimodular(A.dim, cfg.seed)
    ok = base_change_equivariance(A, M)
    return CheckResult("base-change", "PASS" if ok else "FAIL", f"matrix {M}")


def check_degree_divides(A: Algebra, cfg: CheckConfig) -> CheckResult:
    d = char_data(A).degree
    n = A.dim
    return CheckResult(
        "degree-divides",
        "INFO",
        f"d={d} n={n} d|n={'yes' if n % d == 0 else 'no'} (diagnostic only)",
        data={"d": d, "n": n, "divides": n % d == 0},
    )


def check_trace_symmetry(A: Algebra, cfg: CheckConfig) -> CheckResult:
    a, b = universal_pair(A, "s", "t")
    tr = trace(A)
    vt = a.vt
    ok = _det_at(tr, A, (a * b).coords, vt) == _det_at(tr, A, (b * a).coords, vt)
    return CheckResult("trace-symmetry", "PASS" if ok else "FAIL", "exploratory")


_CHECKS = {
    "mult": check_mult,
    "annihilation": check_annihilation,
    "homogeneity": check_homogeneity,
    "units": check_units,
    "opposite": check_opposite,
    "product": check_product,
    "invariance": check_invariance,
    "base-change": check_base_change,
    "degree-divides": check_degree_divides,
    "trace-symmetry": check_trace_symmetry,
}


def check_suite(A: Algebra, prop: str, cfg: CheckConfig | None = None) -> CheckResult:
    if prop not in _CHECKS:
        raise ValueError(f"unknown property {prop!r}; expected one of {', '.join(PROPERTIES)}")
    return _CHECKS[prop](A, cfg or CheckConfig())
