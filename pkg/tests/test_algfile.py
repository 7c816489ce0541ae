import pytest
from hypothesis import given
from hypothesis import strategies as st

from algdet.algebra import QQ_CATALOG, catalog
from algdet.algfile import AlgfileError, ValidationFailed, parse_algebra, parse_element, parse_hom, serialize, serialize_hom
from algdet.engine import degree_of_algebraicity, determinant, discriminant, minimal_polynomial, trace

QUATERNION = """\
# quaternions with symbolic structure constants
algebra "quaternion" {
  field = QQ
  params = [al, be]
  coords = [a, b, c, d]
  basis = [one, i, j, k]
  unit = one
  i*i = al*one
  j*j = be*one
  i*j = k
  j*i = -k
  i*k = al*j
  k*i = -al*j
  j*k = -be*i
  k*j = be*i
  k*k = -al*be*one
}
"""

ROUNDTRIP = list(QQ_CATALOG) + ["boolean2", "inseparable:2", "inseparable:3", "split:1"]


def test_parse_quaternion():
    A = parse_algebra(QUATERNION)
    assert A.structurally_equal(catalog("quaternion"))
    assert str(determinant(A)) == "a^2 - al*b^2 - be*c^2 + al*be*d^2"


def test_missing_clause_names_pair():
    text = QUATERNION.replace("  j*i = -k\n", "")
    with pytest.raises(AlgfileError, match=r"missing product clause j\*i"):
        parse_algebra(text)


def test_nonlinear_product():
    text = QUATERNION.replace("i*j = k", "i*j = i*j")
    with pytest.raises(AlgfileError, match="nonlinear") as e:
        parse_algebra(text)
    assert e.value.line == 10


@pytest.mark.parametrize(
    "mutation,pattern",
    [
        (("field = QQ", "field = GF(4)"), "not prime"),
        (("i*i = al*one", "i*i = gamma*one"), "unknown identifier 'gamma'"),
        (("  k*k = -al*be*one\n", "  k*k = -al*be*one\n  k*k = one\n"), "duplicate product clause"),
        (("  unit = one\n", ""), "unit"),
        (("k*j = be*i", "k*j = be*i $"), "unexpected character"),
        (("basis = [one, i, j, k]", "basis = [one, i, j, al]"), "both as params and basis"),
        (("i*i = al*one", "i*i = al*one/0"), "nonzero number"),
        (("field = QQ", "field = QQ\n  field = QQ"), "duplicate clause"),
        (("k*k = -al*be*one", "k*k = -al^2*one"), "not associative"),
        (("i*j = k", "i*j = i^2"), "nonlinear"),
    ],
)
def test_errors(mutation, pattern):
    text = QUATERNION.replace(*mutation)
    with pytest.raises(AlgfileError, match=pattern) as e:
        parse_algebra(text)
    assert e.value.line > 0 or isinstance(e.value, ValidationFailed)


def test_associativity_report_has_lines():
    text = QUATERNION.replace("k*k = -al*be*one", "k*k = al*be*one")
    with pytest.raises(ValidationFailed) as e:
        parse_algebra(text)
    assert all(line.startswith("line ") for line in e.value.report)
    assert any("16" in line.split(":")[0] for line in e.value.report)


def test_unit_products_checked_when_given():
    good = QUATERNION.replace("  i*i = al*one\n", "  i*i = al*one\n  one*i = i\n")
    parse_algebra(good)
    bad = QUATERNION.replace("  i*i = al*one\n", "  i*i = al*one\n  one*i = j\n")
    with pytest.raises(ValidationFailed):
        parse_algebra(bad)


def test_fractions_only_over_qq():
    text = 'algebra "f" { field = GF(3) basis = [one, x] unit = one x*x = 1/2*one }'
    with pytest.raises(AlgfileError, match="only allowed over QQ"):
        parse_algebra(text)
    ok = 'algebra "f" { field = QQ basis = [one, x] unit = one x*x = 1/4*one }'
    assert str(determinant(parse_algebra(ok))) == "t1^2 - 1/4*t2^2"


def test_parse_element():
    A = catalog("quaternion")
    assert [str(c) for c in parse_element("1 + 2*i", A).coords] == ["1", "2", "0", "0"]
    assert [str(c) for c in parse_element("al*one + i", A).coords] == ["al", "1", "0", "0"]
    assert [str(c) for c in parse_element("(1 + al)*(j - k)/2", A).coords] == ["0", "0", "1/2*al + 1/2", "-1/2*al - 1/2"]
    with pytest.raises(AlgfileError, match="nonlinear"):
        parse_element("i*j", A)
    # a scalar is read as a multiple of the unit
    M = catalog("matrix:2")
    assert [str(c) for c in parse_element("3", M).coords] == ["3", "0", "0", "3"]


def test_serialize_values():
    assert serialize(determinant(catalog("matrix:2"))) == "t1*t4 - t2*t3"
    assert serialize(minimal_polynomial(catalog("dim2"))) == "T^2 - (2*r + a*s)*T + (r^2 + a*r*s - b*s^2)"


def test_quaternion_roundtrip_text():
    s = serialize(parse_algebra(QUATERNION))
    assert serialize(parse_algebra(s)) == s


@pytest.mark.parametrize("name", ROUNDTRIP)
def test_roundtrip_engine_outputs(name):
    A = catalog(name)
    text = serialize(A)
    B = parse_algebra(text)
    assert B.structurally_equal(A)
    assert serialize(B) == text
    for fn in (degree_of_algebraicity, determinant, trace, discriminant):
        assert str(fn(A)) == str(fn(B))


def test_non_associative_roundtrip_without_check():
    from algdet.algebra.catalog import dim3generic

    A = dim3generic()
    B = parse_algebra(serialize(A), check=False)
    assert B.structurally_equal(A)


def test_hom_file():
    A = catalog("quaternion")
    text = 'hom "conj" {\n  kind = anti\n  one -> one\n  i -> -i\n  j -> -j\n  k -> -k\n}\n'
    f = parse_hom(text, A)
    assert f.kind == "anti" and f.problems() == []
    assert serialize_hom(f) == text
    with pytest.raises(AlgfileError, match="missing images"):
        parse_hom('hom "x" { one -> one }', A)


# -- fuzzing: malformed input never escapes as anything but AlgfileError ---------------

CORPUS = [serialize(catalog(n)) for n in ("quaternion", "matrix:2", "dim3nc", "boolean2", "exterior:2")]


def _safe_parse(text):
    try:
        parse_algebra(text)
    except AlgfileError as e:
        assert e.line >= 0
    # any other exception type is a crash and fails the test


@given(st.sampled_from(CORPUS), st.integers(0, 10**6))
def test_fuzz_truncation(text, cut):
    _safe_parse(text[: cut % (len(text) + 1)])


@given(
    st.sampled_from(CORPUS),
    st.lists(st.tuples(st.integers(0, 10**6), st.sampled_from(list("{}[]()=,+-*^/#\n xyz019\"") + ["->", "GF(", "one"])), max_size=4),
)
def test_fuzz_perturbation(text, edits):
    chars = list(text)
    for pos, piece in edits:
        p = pos % (len(chars) + 1)
        chars[p:p + 1] = list(piece)
    _safe_parse("".join(chars))


def test_lexer_positions():
    with pytest.raises(AlgfileError) as e:
        parse_algebra('algebra "x" {\n  field = QQ\n  basis = [one]\n  unit = one ?\n}')
    assert (e.value.line, e.value.col) == (4, 14)


def test_clause_order():
    late = 'algebra "x" { field = QQ basis = [one, x] unit = one params = [a] x*x = a*one }'
    with pytest.raises(AlgfileError, match="must precede 'unit'"):
        parse_algebra(late)
    shuffled = 'algebra "x" { basis = [one, x] field = QQ unit = one x*x = 0 }'
    assert parse_algebra(shuffled).dim == 2  # declarations may come in any order
    with pytest.raises(AlgfileError, match="'field' clause must come first"):
        parse_algebra('algebra "x" { basis = [one] unit = one field = QQ }')
    ok = 'algebra "x" { params = [a] field = QQ basis = [one, x] unit = one x*x = a*one }'
    assert parse_algebra(ok).params == ("a",)
