from .field import FieldSpec, Scalar, QQ, GF, parse_field, FieldMismatch
from .mpoly import (
    MPoly,
    VarTable,
    VarTableMismatch,
    InexactDivision,
    COORDINATE,
    PARAMETER,
    AUX,
    exact_divide,
    is_homogeneous,
    variables,
    poly_sum,
)
from .ratfunc import RatFunc
from .upoly import UPoly, upoly_divmod, format_upoly
from .matrix import (
    PolyMatrix,
    ColumnEliminator,
    BareissResult,
    bareiss_solve,
    determinant,
    adjugate,
    charpoly_matrix,
)
from .identity import random_eval_equal, Verdict, eval_ops
