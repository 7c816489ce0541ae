"""Exact determinants of finite-dimensional algebras given by structure constants."""

from .algebra import Algebra, catalog, validate
from .engine import char_data, determinant, trace

__all__ = ["Algebra", "catalog", "validate", "char_data", "determinant", "trace"]
