from .algebra import (
    Algebra,
    AlgebraError,
    AlgebraHom,
    Element,
    Violation,
    format_element,
    left_regular_matrix,
    multiply,
    universal_element,
    universal_pair,
    validate,
)
from .constructions import base_change, direct_product, opposite, tensor_product
from .catalog import catalog, QQ_CATALOG
