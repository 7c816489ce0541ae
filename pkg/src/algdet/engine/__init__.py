from .chardata import (
    CharData,
    CHData,
    CofactorData,
    InternalError,
    NotInvertible,
    annihilates,
    cayley_hamilton,
    char_data,
    characteristic_coefficients,
    cofactor,
    degree_of_algebraicity,
    det_of,
    determinant,
    discriminant,
    element_degree,
    evaluate_form,
    invert_element,
    minimal_polynomial,
    relative_determinant,
    trace,
    trace_of,
    unimodular_equation,
    upoly_at_element,
)
