"""Reader and writer for the `.alg` algebra format and the `.hom` map format.

    algebra "name" {
      field = QQ | GF(p)
      params = [al, be]          # optional
      coords = [a, b, c, d]      # optional; default t1..tn
      basis = [one, i, j, k]
      unit = one
      i*j = k
      ...
    }

When the unit is a single basis symbol, its products are implied and only
checked if written out.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra import Algebra, AlgebraHom, Element, format_element, validate
from ..arith import GF, QQ, MPoly, UPoly, VarTable, format_upoly
from ..arith.field import FieldSpec
from .expr import ExprParser, to_coords
from .lexer import AlgfileError, Token, TokenStream

CLAUSES = ("field", "params", "coords", "basis", "unit")


class ValidationFailed(AlgfileError):
    """The file parsed but the table is not unital associative."""

    def __init__(self, report: list):
        self.report = report
        super().__init__("algebra is not associative and unital:\n" + "\n".join(report))


@dataclass
class AlgebraDoc:
    name: str
    field: FieldSpec
    params: list
    coords: list | None
    basis: list
    unit: list
    products: dict  # (i, j) -> (coords, line)
    lines: dict = field(default_factory=dict)  # clause name -> line


def _idlist(ts: TokenStream) -> list:
    ts.expect("[")
    out = []
    if not ts.at("]"):
        while True:
            tok = ts.expect_kind("ID", "identifier")
            if tok.text in out:
                raise ts.error(f"duplicate name {tok.text!r}", tok)
            out.append(tok.text)
            if not ts.at(","):
                break
            ts.next()
    ts.expect("]")
    return out


def _field(ts: TokenStream) -> FieldSpec:
    tok = ts.expect_kind("ID", "QQ or GF(p)")
    if tok.text == "QQ":
        return QQ
    if tok.text == "GF":
        ts.expect("(")
        ptok = ts.expect_kind("INT", "prime")
        ts.expect(")")
        try:
            return GF(int(ptok.text))
        except ValueError:
            raise ts.error(f"GF argument {ptok.text} is not prime", ptok) from None
    raise ts.error(f"unknown field {tok.text!r}", tok)


def parse_doc(text: str) -> AlgebraDoc:
    ts = TokenStream(text)
    head = ts.expect_kind("ID", "'algebra'")
    if head.text != "algebra":
        raise ts.error("file must start with 'algebra'", head)
    name = ts.expect_kind("STRING", "algebra name in quotes").text
    ts.expect("{")
    seen: dict = {}
    fld, params, coords, basis, unit = None, [], None, None, None
    products: dict = {}
    expr = None

    def parser():
        nonlocal expr
        if expr is None:
            pvt = VarTable.build(params=params)
            expr = ExprParser(ts, fld, pvt, {b: k for k, b in enumerate(basis)}, set(params))
        return expr

    while not ts.at("}"):
        tok = ts.peek()
        if tok.kind == "EOF":
            raise ts.error("unterminated algebra block (missing '}')")
        if tok.kind == "ID" and tok.text in CLAUSES and ts.at("=", 1):
            if tok.text in seen:
                raise ts.error(f"duplicate clause {tok.text!r} (first on line {seen[tok.text]})", tok)
            if products:
                raise ts.error(f"clause {tok.text!r} must precede the product lines", tok)
            if expr is not None and tok.text in ("field", "params", "basis"):
                raise ts.error(f"clause {tok.text!r} must precede 'unit'", tok)
            seen[tok.text] = tok.line
            ts.next()
            ts.next()
            if tok.text == "field":
                fld = _field(ts)
            elif tok.text == "params":
                params = _idlist(ts)
            elif tok.text == "coords":
                coords = _idlist(ts)
            elif tok.text == "basis":
                basis = _idlist(ts)
            else:
                _need(ts, tok, fld, basis)
                start = ts.peek()
                unit = to_coords(parser().parse(), None, len(basis), fld, parser().pvt, start)
            if basis is not None and set(params) & set(basis):
                clash = sorted(set(params) & set(basis))
                raise AlgfileError(f"names used both as params and basis: {clash}", tok.line, tok.col)
            continue
        # product line: ID * ID = expr
        _need(ts, tok, fld, basis)
        if unit is None:
            raise ts.error("'unit' clause must precede the product lines", tok)
        left = ts.expect_kind("ID", "basis symbol")
        ts.expect("*")
        right = ts.expect_kind("ID", "basis symbol")
        for t in (left, right):
            if t.text not in basis:
                raise ts.error(f"unknown basis symbol {t.text!r}", t)
        ts.expect("=")
        key = (basis.index(left.text), basis.index(right.text))
        if key in products:
            raise ts.error(f"duplicate product clause {left.text}*{right.text} (first on line {products[key][1]})", left)
        start = ts.peek()
        products[key] = (to_coords(parser().parse(), unit, len(basis), fld, parser().pvt, start), left.line)
    ts.expect("}")
    if ts.peek().kind != "EOF":
        raise ts.error("unexpected text after algebra block")
    end = ts.peek()
    for c in ("field", "basis", "unit"):
        if c not in seen:
            raise AlgfileError(f"missing clause {c!r}", end.line, end.col)
    if coords is not None and len(coords) != len(basis):
        raise AlgfileError("coords and basis differ in length", seen["coords"], 1)
    return AlgebraDoc(name, fld, params, coords, basis, unit, products, seen)


def _need(ts, tok: Token, fld, basis):
    if fld is None:
        raise ts.error("'field' clause must come first", tok)
    if basis is None:
        raise ts.error("'basis' clause must precede expressions", tok)


def _unit_symbol(unit, n):
    for i in range(n):
        if all(c.is_constant() and c.constant_value() == (1 if k == i else 0) for k, c in enumerate(unit)):
            return i
    return None


def build_algebra(doc: AlgebraDoc, check: bool = True) -> Algebra:
    n = len(doc.basis)
    u = _unit_symbol(doc.unit, n)
    table = [[None] * n for _ in range(n)]
    lines = {}
    for i in range(n):
        for j in range(n):
            if (i, j) in doc.products:
                table[i][j], lines[(i, j)] = doc.products[(i, j)]
            elif u is not None and (i == u or j == u):
                table[i][j] = [int(k == (j if i == u else i)) for k in range(n)]
            else:
                raise AlgfileError(
                    f"missing product clause {doc.basis[i]}*{doc.basis[j]}",
                    doc.lines.get("unit", 0),
                    1,
                )
    try:
        A = Algebra(doc.name, doc.field, doc.params, doc.basis, table, doc.unit, doc.coords)
    except ValueError as e:
        raise AlgfileError(str(e), doc.lines.get("basis", 0), 1) from None
    A.meta["source_lines"] = lines
    if check:
        report = violation_report(A)
        if report:
            raise ValidationFailed(report)
    return A


def violation_report(A: Algebra) -> list:
    """validate(A) rendered with the source lines of the product clauses involved."""
    lines = A.meta.get("source_lines", {})
    out = []
    for v in validate(A):
        if v.kind == "assoc":
            i, j, k = v.indices
            where = sorted({lines[p] for p in ((i, j), (j, k)) if p in lines})
        else:
            where = sorted(ln for (a, b), ln in lines.items() if v.indices[0] in (a, b) and A.unit_index() in (a, b))
        tag = f"line {','.join(map(str, where))}: " if where else ""
        out.append(tag + v.describe(A))
    return out


def parse_algebra(text: str, check: bool = True) -> Algebra:
    return build_algebra(parse_doc(text), check)


def parse_element(text: str, A: Algebra) -> Element:
    ts = TokenStream(text)
    ep = ExprParser(ts, A.field, A.pvt, {b: k for k, b in enumerate(A.basis)}, set(A.params))
    start = ts.peek()
    lin = ep.parse()
    if ts.peek().kind != "EOF":
        raise ts.error(f"unexpected {ts.peek().text!r} after element")
    return A.element(to_coords(lin, A.unit, A.dim, A.field, A.pvt, start))


def _field_text(F: FieldSpec) -> str:
    return "QQ" if F.characteristic == 0 else f"GF({F.characteristic})"


def serialize_algebra(A: Algebra) -> str:
    default_coords = tuple(f"t{i + 1}" for i in range(A.dim))
    out = [f'algebra "{A.name}" {{', f"  field = {_field_text(A.field)}"]
    if A.params:
        out.append(f"  params = [{', '.join(A.params)}]")
    if A.coords != default_coords:
        out.append(f"  coords = [{', '.join(A.coords)}]")
    out.append(f"  basis = [{', '.join(A.basis)}]")
    out.append(f"  unit = {format_element(A.unit_element())}")
    u = A.unit_index()
    for i in range(A.dim):
        for j in range(A.dim):
            if u is not None and u in (i, j):
                continue
            rhs = format_element(A.element(A.table[i][j]))
            out.append(f"  {A.basis[i]}*{A.basis[j]} = {rhs}")
    out.append("}")
    return "\n".join(out) + "\n"


def serialize(value) -> str:
    if isinstance(value, Algebra):
        return serialize_algebra(value)
    if isinstance(value, UPoly):
        return format_upoly(value)
    if isinstance(value, Element):
        return format_element(value)
    if isinstance(value, MPoly):
        return str(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


# -- .hom files --------------------------------------------------------------


def parse_hom(text: str, source: Algebra, target: Algebra | None = None) -> AlgebraHom:
    """hom "name" { kind = hom|anti  e -> expr ... } mapping source basis into target."""
    target = target or source
    ts = TokenStream(text)
    head = ts.expect_kind("ID", "'hom'")
    if head.text != "hom":
        raise ts.error("file must start with 'hom'", head)
    name = ts.expect_kind("STRING", "map name in quotes").text
    ts.expect("{")
    kind = "hom"
    images: dict = {}
    ep = ExprParser(ts, target.field, target.pvt, {b: k for k, b in enumerate(target.basis)}, set(target.params))
    while not ts.at("}"):
        tok = ts.expect_kind("ID", "'kind' or a basis symbol")
        if tok.text == "kind" and ts.at("="):
            ts.next()
            k = ts.expect_kind("ID", "hom or anti")
            if k.text not in ("hom", "anti"):
                raise ts.error("kind must be hom or anti", k)
            kind = k.text
            continue
        if tok.text not in source.basis:
            raise ts.error(f"unknown basis symbol {tok.text!r}", tok)
        j = source.basis.index(tok.text)
        if j in images:
            raise ts.error(f"duplicate image for {tok.text!r}", tok)
        ts.expect("->")
        start = ts.peek()
        images[j] = to_coords(ep.parse(), target.unit, target.dim, target.field, target.pvt, start)
    ts.expect("}")
    missing = [source.basis[j] for j in range(source.dim) if j not in images]
    if missing:
        raise ts.error(f"missing images for {missing}")
    matrix = [[images[j][i] for j in range(source.dim)] for i in range(target.dim)]
    return AlgebraHom(source, target, matrix, kind, name)


def serialize_hom(f: AlgebraHom) -> str:
    out = [f'hom "{f.name}" {{', f"  kind = {f.kind}"]
    for j, b in enumerate(f.source.basis):
        out.append(f"  {b} -> {format_element(f.image_of_basis(j))}")
    out.append("}")
    return "\n".join(out) + "\n"
