"""Logarithms and elementary functions of multivectors in 3D Clifford algebras."""

from galog.branching import BranchParams, FreeFamily, arctan2
from galog.config import get_tolerance, set_tolerance, tolerance
from galog.core import (
    AlgebraError,
    Multivector,
    NonInvertibleError,
    Signature,
    determinant,
    geometric_product,
    inverse,
    isomorphism_cl30_cl12,
    norm,
)
from galog.exponential import exp, exp_closed_cl03, exp_extended, exp_series
from galog.extended import ExtendedMultivector
from galog.functions import NonRepresentableError, power, sqrt
from galog.logarithm import LogResult, NonExistentLogError, Row, log, log_series

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "BranchParams", "ExtendedMultivector", "FreeFamily", "LogResult",
    "Multivector", "NonExistentLogError", "NonInvertibleError", "NonRepresentableError",
    "Row", "Signature", "arctan2", "determinant", "exp", "exp_closed_cl03", "exp_extended",
    "exp_series", "geometric_product", "get_tolerance", "inverse", "isomorphism_cl30_cl12",
    "log", "log_series", "norm", "power", "set_tolerance", "sqrt", "tolerance",
]
