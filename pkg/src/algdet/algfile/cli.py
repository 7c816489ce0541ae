"""Command-line interface: `algdet <command> <file.alg> ...`.

Exit codes: 0 success, 1 check failure or validation violations,
2 parse or usage error, 3 internal assertion.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from ..algebra import AlgebraError, catalog, direct_product, opposite, tensor_product
from ..arith import parse_field
from ..engine import (
    InternalError,
    NotInvertible,
    cayley_hamilton,
    char_data,
    degree_of_algebraicity,
    determinant,
    discriminant,
    element_degree,
    invert_element,
    minimal_polynomial,
    relative_determinant,
    trace,
    unimodular_equation,
)
from ..engine.checks import PROPERTIES, CheckConfig, check_suite
from ..engine.reference import compare
from ..engine.strata import alg3_strata_check
from .lexer import AlgfileError
from .parser import ValidationFailed, parse_algebra, parse_element, parse_hom, serialize, violation_report

EPILOG = """\
Coordinate variables: output polynomials are written in the algebra's
coordinate names, taken from the optional `coords = [...]` clause of the
.alg file and defaulting to t1..tn. Basis names are not reused as
coordinates, since a basis symbol such as `one` or `i` would read badly as
a variable.

Exit codes: 0 ok, 1 check FAIL / validation violations, 2 parse or usage
error, 3 internal assertion. ALGDET_SEED sets the default --seed.
"""


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def load(path: str, check: bool = True):
    return parse_algebra(_read(path), check=check)


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _default_seed() -> int:
    raw = os.environ.get("ALGDET_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"ALGDET_SEED must be an integer, got {raw!r}") from None


# -- commands -----------------------------------------------------------------


def cmd_validate(a) -> int:
    A = load(a.file, check=False)
    report = violation_report(A)
    for line in report:
        print(line)
    if not report:
        print("OK")
    return 1 if report else 0


def _simple(fn):
    def run(a) -> int:
        print(serialize(fn(load(a.file))))
        return 0

    return run


def cmd_degree(a) -> int:
    print(degree_of_algebraicity(load(a.file)))
    return 0


def cmd_det(a) -> int:
    A = load(a.file)
    print(serialize(determinant(A)))
    cmp = compare(A)
    if cmp is not None and not cmp.agrees:
        print(f"note: {cmp.message()}", file=sys.stderr)
    return 0


def cmd_charpoly(a) -> int:
    A = load(a.file)
    print(serialize(minimal_polynomial(A)))
    return 0


def cmd_coeffs(a) -> int:
    cd = char_data(load(a.file))
    for c in cd.coeffs:
        print(serialize(c))
    return 0


def cmd_ch(a) -> int:
    ch = cayley_hamilton(load(a.file))
    print(serialize(ch.CH))
    print(serialize(ch.psi))
    return 0


def _assignments(A, items) -> dict:
    values = {}
    for item in items or ():
        name, sep, raw = item.partition("=")
        name = name.strip()
        if not sep or name not in A.params:
            raise UsageError(f"--set expects param=value with a declared parameter, got {item!r}")
        try:
            values[name] = A.field.coerce(Fraction(raw.strip()))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad value in {item!r}") from None
    return values


def cmd_invert(a) -> int:
    A = load(a.file)
    x = parse_element(a.element, A)
    values = _assignments(A, a.set)
    try:
        print(serialize(invert_element(x, values=values or None)))
    except NotInvertible as e:
        print(f"not invertible: {e}", file=sys.stderr)
        return 1
    return 0


def cmd_eldeg(a) -> int:
    A = load(a.file)
    print(element_degree(parse_element(a.element, A)))
    return 0


def cmd_check(a) -> int:
    A = load(a.file)
    mode = "exact" if a.exact else "random" if a.random else "auto"
    seed = a.seed if a.seed is not None else _default_seed()
    cfg = CheckConfig(mode=mode, trials=a.trials, seed=seed, prime=a.prime, samples=a.samples)
    if a.hom:
        cfg.hom = parse_hom(_read(a.hom), A)
    if a.with_:
        cfg.other = load(a.with_)
        if cfg.other.field != A.field:
            raise UsageError("--with algebra must be over the same field")
    if a.property == "invariance" and cfg.hom is None:
        raise UsageError("--property invariance needs --hom <file.hom>")
    r = check_suite(A, a.property, cfg)
    print(r.line())
    return 0 if r.passed else 1


def cmd_op(a) -> int:
    A = load(a.file_a)
    if a.op == "opposite":
        if a.file_b:
            raise UsageError("opposite takes one algebra")
        C = opposite(A)
    else:
        if not a.file_b:
            raise UsageError(f"{a.op} needs two algebras")
        B = load(a.file_b)
        C = direct_product(A, B) if a.op == "product" else tensor_product(A, B)
    _write(serialize(C), a.out)
    return 0


def cmd_catalog(a) -> int:
    try:
        field = parse_field(a.field) if a.field else None
        A = catalog(a.name, field)
    except (ValueError, AlgebraError) as e:
        raise UsageError(str(e)) from None
    _write(serialize(A), a.out)
    return 0


def cmd_strata3(a) -> int:
    if a.prime not in (2, 3):
        raise UsageError("--prime must be 2 or 3")
    r = alg3_strata_check(a.prime)
    print(r.line())
    for ex in r.counterexamples:
        print("counterexample " + " ".join(f"{k}={v}" for k, v in ex.items()))
    return 0 if r.passed else 1


def cmd_reldet(a) -> int:
    A, B = load(a.file_a), load(a.file_b)
    f = parse_hom(_read(a.hom), A, B)
    print(serialize(relative_determinant(A, B, f)))
    return 0


# -- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="algdet",
        description="Determinant, trace and minimal polynomial of algebras given by structure constants.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    def file_cmd(name, fn, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("file")
        s.set_defaults(fn=fn)
        return s

    file_cmd("validate", cmd_validate, "check associativity and unit axioms")
    file_cmd("degree", cmd_degree, "degree of algebraicity d")
    file_cmd("det", cmd_det, "the determinant form")
    file_cmd("charpoly", cmd_charpoly, "minimal polynomial P(T) of the universal element")
    file_cmd("coeffs", cmd_coeffs, "characteristic coefficients c1..cd, one per line")
    file_cmd("trace", _simple(trace), "the trace form c1")
    file_cmd("disc", _simple(discriminant), "discriminant det[tr(e_i e_j)]")
    file_cmd("unimodular", _simple(unimodular_equation), "equation det - 1")
    file_cmd("ch", cmd_ch, "characteristic polynomial of left multiplication, then psi = CH / P")
    for name, fn, h in (("invert", cmd_invert, "inverse of an element"), ("eldeg", cmd_eldeg, "degree of an element")):
        s = file_cmd(name, fn, h)
        s.add_argument("-e", "--element", required=True, help="element, e.g. '1 + 2*i'")
        if name == "invert":
            s.add_argument("--set", action="append", metavar="PARAM=VALUE", help="specialize a parameter")

    s = file_cmd("check", cmd_check, "verify an identity of the determinant")
    s.add_argument("--property", required=True, choices=PROPERTIES)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="expand identities fully")
    g.add_argument("--random", action="store_true", help="randomized identity testing")
    s.add_argument("--trials", type=int, default=20)
    s.add_argument("--seed", type=int, default=None, help="default: $ALGDET_SEED or 0")
    s.add_argument("--prime", type=int, default=5, help="prime for the units property")
    s.add_argument("--samples", type=int, default=200, help="samples for the units property")
    s.add_argument("--hom", help=".hom file with an (anti)automorphism")
    s.add_argument("--with", dest="with_", help="second algebra for the product property")

    s = sub.add_parser("op", help="build a new algebra")
    s.add_argument("op", choices=("product", "tensor", "opposite"))
    s.add_argument("file_a")
    s.add_argument("file_b", nargs="?")
    s.add_argument("-o", "--out")
    s.set_defaults(fn=cmd_op)

    s = sub.add_parser("catalog", help="write a named example algebra, e.g. matrix:3 or quaternion")
    s.add_argument("name")
    s.add_argument("-o", "--out")
    s.add_argument("--field", help="QQ or GF(p)")
    s.set_defaults(fn=cmd_catalog)

    s = sub.add_parser("strata3", help="enumerate the 3-dimensional associativity locus over F_p")
    s.add_argument("--prime", type=int, required=True)
    s.set_defaults(fn=cmd_strata3)

    s = sub.add_parser("reldet", help="relative determinant along a surjection A -> B")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("--hom", required=True, help=".hom file giving images of A's basis in B")
    s.set_defaults(fn=cmd_reldet)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.fn(args)
    except ValidationFailed as e:
        print(str(e), file=sys.stderr)
        return 1
    except (AlgfileError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InternalError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
