from .lexer import AlgfileError
from .parser import (
    AlgebraDoc,
    ValidationFailed,
    parse_algebra,
    parse_doc,
    parse_element,
    parse_hom,
    serialize,
    serialize_algebra,
    serialize_hom,
    violation_report,
)
