"""Coordinate form of the generic Cl(0,3) logarithm.

Each coefficient of ``log B`` is written out explicitly in terms of the
coefficients of ``B``. Only the generic case (``b+ != 0`` and
``b- != 0``) is covered; it serves as an independent cross-check of
:func:`galog.logarithm.log_cl03`.
"""

from __future__ import annotations

import math

from galog.branching import arctan2
from galog.core import AlgebraError, Multivector, Signature
from galog.exponential import cl03_a_plus_minus
from galog.logarithm.result import Tol


def log_cl03_coordinate(b: Multivector, tol: float | None = None) -> Multivector:
    if b.sig is not Signature.CL03:
        raise AlgebraError(f"coordinate logarithm is for Cl(0,3), got {b.sig.label}")
    b0, b1, b2, b3, b12, b13, b23, b123 = (float(x) for x in b.coeffs)
    bp, bm = cl03_a_plus_minus(b)
    t = Tol(b, tol)
    if t.zero1(bp) or t.zero1(bm):
        raise AlgebraError("coordinate form needs b+ != 0 and b- != 0; use log_cl03 for special cases")
    tm = arctan2(b0 - b123, bm) / bm
    tp = arctan2(b0 + b123, bp) / bp
    lm = math.log((b0 - b123) ** 2 + bm * bm)
    lp = math.log((b0 + b123) ** 2 + bp * bp)
    a0 = 0.25 * (lm + lp)
    a123 = 0.25 * (lp - lm)
    a1 = 0.5 * ((b1 + b23) * tm + (b1 - b23) * tp)
    a2 = 0.5 * ((b2 - b13) * tm + (b2 + b13) * tp)
    a3 = 0.5 * ((b3 + b12) * tm + (b3 - b12) * tp)
    a12 = 0.5 * ((b3 + b12) * tm + (b12 - b3) * tp)
    a13 = 0.5 * ((b13 - b2) * tm + (b2 + b13) * tp)
    a23 = 0.5 * ((b1 + b23) * tm + (b23 - b1) * tp)
    return Multivector([a0, a1, a2, a3, a12, a13, a23, a123], b.sig)


def recovered_a_plus_minus(b: Multivector) -> tuple[float, float]:
    """``(a+, a-)`` of the logarithm, read off from ``B = exp(A)``."""
    bp, bm = cl03_a_plus_minus(b)
    return arctan2(float(b.a0 + b.a123), bp), arctan2(float(b.a0 - b.a123), bm)
