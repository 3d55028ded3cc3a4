"""Multivectors whose coefficients are affine in ``λ = log(0+)``.

A singular logarithm (one whose argument has a vanishing determinant
factor) is represented as ``finite + λ * lam`` with two real coefficient
arrays. ``λ`` stands for ``lim_{x->0+} log x``; it is only ever evaluated
by substituting ``log(eps)`` for a small positive ``eps``.
"""

from __future__ import annotations

import math

import numpy as np

from galog.core import BASIS_LABELS, Multivector, Signature, format_mv

LAMBDA_TOKEN = "log(0+)"


class ExtendedMultivector:
    __slots__ = ("finite", "lam", "sig")

    def __init__(self, finite: Multivector, lam: Multivector | None = None):
        object.__setattr__(self, "finite", finite)
        object.__setattr__(self, "lam", Multivector.zero(finite.sig) if lam is None else lam)
        object.__setattr__(self, "sig", finite.sig)

    def __setattr__(self, name, value):
        raise AttributeError("ExtendedMultivector is immutable")

    @classmethod
    def lift(cls, value) -> "ExtendedMultivector":
        return value if isinstance(value, ExtendedMultivector) else cls(value)

    @classmethod
    def log_zero(cls, sig: Signature, factor: Multivector | None = None) -> "ExtendedMultivector":
        """``λ * factor`` (``factor`` defaults to 1)."""
        f = Multivector.scalar(1.0, sig) if factor is None else factor
        return cls(Multivector.zero(sig), f)

    @property
    def is_finite(self) -> bool:
        return not np.any(self.lam.coeffs)

    def __add__(self, other):
        if isinstance(other, ExtendedMultivector):
            return ExtendedMultivector(self.finite + other.finite, self.lam + other.lam)
        if isinstance(other, (Multivector, int, float)):
            return ExtendedMultivector(self.finite + other, self.lam)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1.0) * ExtendedMultivector.lift(other)

    def __neg__(self):
        return ExtendedMultivector(-self.finite, -self.lam)

    def __mul__(self, other):
        # products stay affine only when one side is finite
        if isinstance(other, ExtendedMultivector):
            if other.is_finite:
                other = other.finite
            elif self.is_finite:
                return ExtendedMultivector(self.finite * other.finite, self.finite * other.lam)
            else:
                raise ValueError("product of two log(0+)-bearing multivectors is not affine in λ")
        if isinstance(other, (Multivector, int, float, np.floating)):
            return ExtendedMultivector(self.finite * other, self.lam * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Multivector):
            return ExtendedMultivector(other * self.finite, other * self.lam)
        if isinstance(other, (int, float, np.floating)):
            return ExtendedMultivector(self.finite * other, self.lam * other)
        return NotImplemented

    def substitute(self, eps: float) -> Multivector:
        """Replace ``λ`` by ``log(eps)``."""
        if not eps > 0:
            raise ValueError("eps must be positive")
        return self.finite + math.log(eps) * self.lam

    def to_multivector(self) -> Multivector:
        if not self.is_finite:
            raise ValueError("value carries log(0+) coefficients")
        return self.finite

    def reverse(self) -> "ExtendedMultivector":
        return ExtendedMultivector(self.finite.reverse(), self.lam.reverse())

    def coefficient_pairs(self) -> list[tuple[float, float]]:
        return [(float(f), float(g)) for f, g in zip(self.finite.coeffs, self.lam.coeffs)]

    def __repr__(self):
        return f"ExtendedMultivector({self})"

    def __str__(self):
        if self.is_finite:
            return format_mv(self.finite)
        parts = []
        for label, f, g in zip(BASIS_LABELS, self.finite.coeffs, self.lam.coeffs):
            if f == 0 and g == 0:
                continue
            if g == 0:
                coef = f"{f:.10g}"
            elif f == 0:
                coef = f"{g:.10g}*{LAMBDA_TOKEN}"
            else:
                coef = f"({f:.10g} + {g:.10g}*{LAMBDA_TOKEN})"
            parts.append(coef if label == "1" else f"{coef}*{label}")
        return " + ".join(parts) if parts else "0"
