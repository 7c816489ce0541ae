"""The twelve acceptance criteria, one test each.

Every test records a single PASS/FAIL line with its runtime; the lines are
printed at the end of the pytest run (see conftest.py) and also when this
file is executed directly: `python3 tests/test_acceptance.py`.
"""

import contextlib
import io
import time
from pathlib import Path

import sympy

from algdet.algebra import QQ_CATALOG, AlgebraHom, catalog, direct_product, tensor_product
from algdet.algfile import parse_algebra, parse_hom
from algdet.algfile.cli import main as cli_main
from algdet.arith import GF
from algdet.engine import (
    cayley_hamilton,
    char_data,
    degree_of_algebraicity,
    det_of,
    determinant,
    element_degree,
    minimal_polynomial,
    relative_determinant,
)
from algdet.engine.checks import CheckConfig, check_suite, product_formula
from algdet.engine.reference import compare
from algdet.engine.strata import alg3_strata_check
from oracles import cofactor_det, sym_equal

DATA = Path(__file__).resolve().parent.parent / "data"
RESULTS: list = []


class Criterion:
    def __init__(self, number: int, title: str, limit: float | None = None):
        self.number, self.title, self.limit = number, title, limit
        self.notes: list = []
        self.ok = True

    def require(self, cond, note):
        if not cond:
            self.ok = False
            self.notes.append(note)

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        if exc is not None:
            self.ok = False
            self.notes.append(f"{exc_type.__name__}: {exc}")
        if self.limit is not None and elapsed > self.limit:
            self.ok = False
            self.notes.append(f"took {elapsed:.1f}s > {self.limit}s")
        status = "PASS" if self.ok else "FAIL"
        line = f"[{status}] criterion {self.number:2d}: {self.title} ({elapsed:.2f}s)"
        if self.notes:
            line += " -- " + "; ".join(self.notes)
        RESULTS.append(line)
        print(line)
        assert self.ok, line
        return False


def S(*names):
    return [sympy.Symbol(n) for n in names]


def test_c01_quaternion_determinant():
    with Criterion(1, "quaternion determinant", limit=1.0) as c:
        det = str(determinant(catalog("quaternion")))
        c.require(det == "a^2 - al*b^2 - be*c^2 + al*be*d^2", det)


def test_c02_exterior_determinants():
    with Criterion(2, "exterior:2 and exterior:3 determinants over QQ", limit=5.0) as c:
        for r in (2, 3):
            det = str(determinant(catalog(f"exterior:{r}")))
            c.require(det == f"t_0^{r}", f"exterior:{r} gave {det}")


def test_c03_dim2_constant_coefficient():
    with Criterion(3, "dim-2 family constant coefficient r^2 + a*r*s - b*s^2", limit=1.0) as c:
        P = minimal_polynomial(catalog("dim2"))
        r, s, a, b = S("r", "s", "a", "b")
        c.require(sym_equal(P[0], r**2 - s**2 * b + a * r * s), str(P[0]))


def test_c04_dim3_noncommutative():
    with Criterion(4, "dim-3 noncommutative family: d = 2, det = (r+is+et)(r+fs+ht)", limit=1.0) as c:
        A = catalog("dim3nc")
        c.require(degree_of_algebraicity(A) == 2, "degree != 2")
        r, s, t, e, f, h, i = S(*"rstefhi")
        c.require(sym_equal(determinant(A), sympy.expand((r + i * s + e * t) * (r + f * s + h * t))), str(determinant(A)))


def _matrix_case(c, n):
    A = catalog(f"matrix:{n}")
    cd = char_data(A)
    X = sympy.Matrix(n, n, [sympy.Symbol(v) for v in A.coords])
    c.require(sym_equal(cd.det, sympy.expand(cofactor_det(X.tolist()))), f"matrix:{n} det {cd.det}")
    c.require(cd.degree == n, f"matrix:{n} degree {cd.degree}")
    ch = cayley_hamilton(A)
    c.require(ch.CH == cd.minpoly**n, f"matrix:{n} CH != P^{n}")


def test_c05_matrix_algebras():
    with Criterion(5, "matrix:2 (< 1 s) classical determinant, d = n, CH = P^n", limit=1.0) as c:
        _matrix_case(c, 2)
    with Criterion(5, "matrix:3 (< 60 s) classical determinant, d = n, CH = P^n", limit=60.0) as c:
        _matrix_case(c, 3)


ALL_CATALOG = list(QQ_CATALOG) + ["boolean2", "inseparable:2", "inseparable:3", "split:1"]


def test_c06_degree_examples():
    with Criterion(6, "degree(boolean2) = 3, element_degree(x) = 2, d <= n everywhere") as c:
        B = catalog("boolean2")
        c.require(degree_of_algebraicity(B) == 3, "boolean2 degree")
        c.require(element_degree(B.basis_element(B.basis.index("x"))) == 2, "element degree of x")
        for name in ALL_CATALOG:
            A = catalog(name)
            d = degree_of_algebraicity(A)
            c.require(d <= A.dim and d == minimal_polynomial(A).degree, f"{name}: d={d}")


def test_c07_identity_suite():
    with Criterion(7, "identity suite on catalog algebras of dim <= 4; random mult on matrix:3 and M2(x)M2", limit=300.0) as c:
        small = [n for n in ALL_CATALOG if catalog(n).dim <= 4]
        for name in small:
            A = catalog(name)
            c.require(det_of(A.unit_element()) == 1, f"{name}: det(1) != 1")
            for prop in ("annihilation", "homogeneity", "opposite", "product", "base-change"):
                r = check_suite(A, prop, CheckConfig(seed=0))
                c.require(r.status == "PASS", f"{name} {r.line()}")
            r = check_suite(A, "mult", CheckConfig(mode="exact"))
            c.require(r.status == "PASS", f"{name} {r.line()}")
        big = {"matrix:3": catalog("matrix:3"), "M2(x)M2": tensor_product(catalog("matrix:2"), catalog("matrix:2"))}
        bounds = []
        for name, A in big.items():
            cfg = CheckConfig(mode="random", trials=20, seed=2024)
            r1, r2 = check_suite(A, "mult", cfg), check_suite(A, "mult", cfg)
            c.require(r1.status == "PASS" and r1.bound is not None, f"{name} {r1.line()}")
            c.require(r1.line() == r2.line(), f"{name} not seed-deterministic")
            bounds.append(f"{name} bound {r1.bound}")
        c.require(char_data(big["M2(x)M2"]).degree == 4, "M2(x)M2 degree != 4")
        c.notes.extend(bounds) if c.ok else None


def test_c08_units():
    with Criterion(8, "units: det(x) != 0 iff L_x invertible over F5 and F7, inverses round-trip") as c:
        total = 0
        for name in ALL_CATALOG:
            A = catalog(name)
            primes = (5, 7) if A.field.characteristic == 0 else (A.field.characteristic,)
            for p in primes:
                r = check_suite(A, "units", CheckConfig(prime=p, samples=200, seed=p))
                total += r.data["samples"]
                c.require(r.status == "PASS", f"{name}: {r.line()}")
        c.notes.append(f"{total} samples") if c.ok else None


def test_c09_relative_determinant():
    with Criterion(9, "relative determinant: det_A/B * f*det_B = det_A") as c:
        A = parse_algebra((DATA / "alg" / "dim2_zero.alg").read_text())
        B = parse_algebra((DATA / "alg" / "dim1.alg").read_text())
        f = parse_hom((DATA / "hom" / "dim2_zero_to_dim1.hom").read_text(), A, B)
        rel = relative_determinant(A, B, f)
        c.require(rel * f.pullback(determinant(B)) == determinant(A).embed(rel.vt), "dual numbers")
        c.require(str(rel) == "r", f"dual numbers gave {rel}")
        M2, S1 = catalog("matrix:2"), catalog("split:1")
        C = direct_product(M2, S1)
        proj = AlgebraHom(C, S1, [[0, 0, 0, 0, 1]])
        rel = relative_determinant(C, S1, proj)
        c.require(rel * proj.pullback(determinant(S1)) == determinant(C).embed(rel.vt), "M2 x split:1")
        c.require(str(rel) == "t1*t4 - t2*t3", f"M2 x split:1 gave {rel}")
        lhs, rhs = product_formula(M2, S1)
        c.require(lhs == rhs, "product formula")


def test_c10_alg3_strata():
    with Criterion(10, "Alg_3: families associative, zero counterexamples over F2 and F3", limit=120.0) as c:
        for p in (2, 3):
            r = alg3_strata_check(p)
            c.require(r.families_ok, "parametric families fail associativity")
            c.require(r.n_counterexamples == 0, f"p={p}: {r.n_counterexamples} counterexamples")
            c.notes.append(f"p={p}: {r.associative} associative of {r.points}") if c.ok else None


def test_c11_inseparable():
    with Criterion(11, "inseparable: exact determinants, published sign discrepancy flagged") as c:
        c.require(str(determinant(catalog("inseparable:2"))) == "t_0^2 + t*t_1^2", "inseparable:2")
        A3 = catalog("inseparable:3")
        cd = char_data(A3)
        c.require(str(cd.det) == "t_0^3 + t*t_1^3 + t^2*t_2^3", f"inseparable:3 gave {cd.det}")
        c.require(cd.det == cd.minpoly[0] * (-1) ** cd.degree, "det != (-1)^d P(0)")
        cmp = compare(A3)
        c.require(cmp is not None and not cmp.agrees, "discrepancy not detected")
        err = io.StringIO()
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(io.StringIO()):
            code = cli_main(["det", str(DATA / "alg" / "inseparable_3.alg")])
        c.require(code == 0 and "DISCREPANCY" in err.getvalue(), "CLI did not flag the discrepancy")


def test_c12_invariance():
    with Criterion(12, "invariance under quaternion conjugation and matrix:2 transpose") as c:
        for alg, hom in (("quaternion", "quaternion_conjugation"), ("matrix_2", "matrix2_transpose")):
            A = parse_algebra((DATA / "alg" / f"{alg}.alg").read_text())
            f = parse_hom((DATA / "hom" / f"{hom}.hom").read_text(), A)
            c.require(f.kind == "anti", f"{hom} should be an antiautomorphism")
            r = check_suite(A, "invariance", CheckConfig(hom=f))
            c.require(r.status == "PASS", r.line())


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
