"""Multivector logarithms in the four real 3D Clifford algebras."""

from __future__ import annotations

import dataclasses
import math

from galog.branching import BranchParams
from galog.core import Multivector, Signature
from galog.logarithm.blades import log_blade_cl03, log_blade_cl30
from galog.logarithm.cl03 import log_cl03
from galog.logarithm.cl21 import d_condition, log_cl21
from galog.logarithm.cl30 import cl30_a_plus_minus, log_cl30
from galog.logarithm.coord import log_cl03_coordinate
from galog.logarithm.free import free_multivector
from galog.logarithm.minsheet import SheetScan, min_sheet
from galog.logarithm.result import LogResult, NonExistentLogError, Row
from galog.logarithm.series import SeriesLog, log_series

_DISPATCH = {
    Signature.CL03: log_cl03,
    Signature.CL30: log_cl30,
    Signature.CL12: log_cl30,
    Signature.CL21: log_cl21,
}


# outside this band squares of coefficients under- or overflow
_SCALE_LO, _SCALE_HI = 1e-100, 1e100


def log(a: Multivector, branch: BranchParams | None = None, tol: float | None = None) -> LogResult:
    """Logarithm of ``a`` in its own signature."""
    s = a.scale()
    if s == 0.0 or _SCALE_LO <= s <= _SCALE_HI:
        return _DISPATCH[a.sig](a, branch, tol)
    # log(s B) = log(s) + log(B) for a positive scalar s
    res = _DISPATCH[a.sig](Multivector(a.coeffs / s, a.sig), branch, tol)
    if not res.exists:
        return res
    return dataclasses.replace(res, value=res.value + math.log(s))


__all__ = [
    "LogResult", "NonExistentLogError", "Row", "SeriesLog", "SheetScan",
    "cl30_a_plus_minus", "d_condition", "free_multivector", "log", "log_blade_cl03",
    "log_blade_cl30", "log_cl03", "log_cl03_coordinate", "log_cl21", "log_cl30",
    "log_series", "min_sheet",
]
