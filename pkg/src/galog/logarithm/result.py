"""Result type shared by every logarithm path, plus the case-row tags."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from galog.branching import FreeFamily
from galog.config import get_tolerance
from galog.core import Multivector
from galog.extended import ExtendedMultivector


class NonExistentLogError(ArithmeticError):
    """The logarithm has an empty solution set for this input."""


class Row(enum.Enum):
    """Which piece of a piecewise formula produced (part of) a result.

    ``P``/``M`` mark the ``+``/``-`` idempotent sector in Cl(0,3) and Cl(2,1).
    """

    # Cl(0,3), per sector
    CL03_P_GENERIC = "cl03.plus.generic"
    CL03_P_ZERO_SPOS = "cl03.plus.a0.s>0"
    CL03_P_ZERO_SZERO = "cl03.plus.a0.s=0"
    CL03_P_ZERO_SNEG = "cl03.plus.a0.s<0"
    CL03_M_GENERIC = "cl03.minus.generic"
    CL03_M_ZERO_SPOS = "cl03.minus.a0.s>0"
    CL03_M_ZERO_SZERO = "cl03.minus.a0.s=0"
    CL03_M_ZERO_SNEG = "cl03.minus.a0.s<0"

    # Cl(3,0) / Cl(1,2)
    CL30_APM_WEDGE = "cl30.apm.wedge"
    CL30_APM_FALLBACK_POS = "cl30.apm.fallback.s>=0"
    CL30_APM_FALLBACK_NEG = "cl30.apm.fallback.s<0"
    CL30_A0_GENERIC = "cl30.A0.generic"
    CL30_A0_CENTER = "cl30.A0.center"
    CL30_LOG_GENERIC = "cl30.A12log.generic"
    CL30_LOG_CENTER = "cl30.A12log.center"
    CL30_ARCTAN_GENERIC = "cl30.A12arctan.generic"
    CL30_ARCTAN_SINGULAR = "cl30.A12arctan.k=0"
    CL30_ARCTAN_NILPOTENT = "cl30.A12arctan.center.nilpotent"
    CL30_ARCTAN_FREE = "cl30.A12arctan.center.free"
    CL30_I_GENERIC = "cl30.AI.generic"
    CL30_I_DEGENERATE = "cl30.AI.bisector-zero"
    CL30_I_CENTER = "cl30.AI.center"
    CL30_ZERO_INPUT = "cl30.zero"
    CL30_EMPTY = "cl30.empty"

    # Cl(2,1)
    CL21_F_NEGATIVE = "cl21.f<0"
    CL21_P_ELLIPTIC = "cl21.plus.q>0"
    CL21_P_HYPERBOLIC = "cl21.plus.q<0.arctanh"
    CL21_P_LOGDIFF = "cl21.plus.q<0.f=0"
    CL21_P_PARABOLIC_POS = "cl21.plus.q=0.s>0"
    CL21_P_PARABOLIC_D = "cl21.plus.q=0.s<=0.D"
    CL21_P_EMPTY_HYPERBOLIC = "cl21.plus.q<0.s<0.empty"
    CL21_P_EMPTY_PARABOLIC = "cl21.plus.q=0.s<=0.notD.empty"
    CL21_M_ELLIPTIC = "cl21.minus.q>0"
    CL21_M_HYPERBOLIC = "cl21.minus.q<0.arctanh"
    CL21_M_LOGDIFF = "cl21.minus.q<0.f=0"
    CL21_M_PARABOLIC_POS = "cl21.minus.q=0.s>0"
    CL21_M_PARABOLIC_D = "cl21.minus.q=0.s<=0.D"
    CL21_M_EMPTY_HYPERBOLIC = "cl21.minus.q<0.s<0.empty"
    CL21_M_EMPTY_PARABOLIC = "cl21.minus.q=0.s<=0.notD.empty"

    # blades, Cl(0,3)
    CL03_BLADE_VECTOR = "cl03.blade.vector"
    CL03_BLADE_PARAVECTOR = "cl03.blade.paravector"
    CL03_BLADE_BIVECTOR = "cl03.blade.bivector"
    CL03_BLADE_PARABIVECTOR = "cl03.blade.parabivector"
    CL03_BLADE_ZERO_NORM = "cl03.blade.zero-norm"
    CL03_CENTER_P_POS = "cl03.center.plus.s>0"
    CL03_CENTER_P_ZERO = "cl03.center.plus.s=0"
    CL03_CENTER_P_NEG = "cl03.center.plus.s<0"
    CL03_CENTER_M_POS = "cl03.center.minus.s>0"
    CL03_CENTER_M_ZERO = "cl03.center.minus.s=0"
    CL03_CENTER_M_NEG = "cl03.center.minus.s<0"

    # blades, Cl(3,0) / Cl(1,2)
    CL30_BLADE_VECTOR = "cl30.blade.vector"
    CL30_BLADE_BIVECTOR = "cl30.blade.bivector"
    CL30_BLADE_ZERO_NORM = "cl30.blade.zero-norm"
    CL30_ROTOR_GENERIC = "cl30.rotor.generic"
    CL30_ROTOR_SCALAR_POS = "cl30.rotor.|A|=0.a0>=0"
    CL30_ROTOR_SCALAR_NEG = "cl30.rotor.|A|=0.a0<0"
    CL30_ROTOR_BIVECTOR = "cl30.rotor.a0=0"
    CL30_CENTER_NONZERO = "cl30.center.nonzero"
    CL30_CENTER_ZERO = "cl30.center.zero"

    @property
    def sector(self) -> str | None:
        parts = self.value.split(".")
        return parts[1] if parts[1] in ("plus", "minus") else None


@dataclass(frozen=True)
class LogResult:
    """``Exists(value, family)`` or ``NonExistent(reason)``.

    ``rows`` lists every case row consulted, in evaluation order;
    ``intermediates`` holds the scalar quantities that drove dispatch.
    """

    exists: bool
    value: ExtendedMultivector | None = None
    family: FreeFamily = field(default_factory=FreeFamily)
    rows: tuple[Row, ...] = ()
    reason: str | None = None
    intermediates: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def found(cls, value, family=None, rows=(), intermediates=None) -> "LogResult":
        return cls(True, ExtendedMultivector.lift(value), family or FreeFamily(), tuple(rows), None,
                   dict(intermediates or {}))

    @classmethod
    def empty(cls, reason: str, rows=(), intermediates=None) -> "LogResult":
        return cls(False, None, FreeFamily(), tuple(rows), reason, dict(intermediates or {}))

    @property
    def is_singular(self) -> bool:
        return self.exists and not self.value.is_finite

    def unwrap(self) -> ExtendedMultivector:
        if not self.exists:
            raise NonExistentLogError(self.reason)
        return self.value

    def finite(self) -> Multivector:
        """The value as a plain multivector (raises for empty or singular results)."""
        return self.unwrap().to_multivector()


class Tol:
    """Zero tests for one input, scaled by its largest coefficient."""

    def __init__(self, a: Multivector, tol: float | None = None):
        self.tol = get_tolerance() if tol is None else tol
        self.scale = a.scale()

    def zero1(self, x: float) -> bool:
        """Linear quantity is zero."""
        return abs(x) <= self.tol * self.scale

    def zero2(self, x: float) -> bool:
        """Quadratic quantity is zero."""
        return abs(x) <= self.tol * self.scale * self.scale

    def sign1(self, x: float) -> int:
        return 0 if self.zero1(x) else (1 if x > 0 else -1)

    def sign2(self, x: float) -> int:
        return 0 if self.zero2(x) else (1 if x > 0 else -1)


def scalar_mv(x: float, sig) -> Multivector:
    return Multivector.scalar(float(x), sig)


def lam(sig, factor: Multivector | None = None) -> ExtendedMultivector:
    return ExtendedMultivector.log_zero(sig, factor)


def as_float_dict(d: dict) -> dict:
    out = {}
    for k, v in d.items():
        if isinstance(v, (np.floating, np.integer)):
            v = v.item()
        out[k] = v
    return out
