"""Multivector exponentials.

``exp_series`` works in every signature (scaling and squaring over the
Taylor series) and is the reference used to check logarithms.
``exp_closed_cl03`` is the closed coordinate form for Cl(0,3).
"""

from __future__ import annotations

import math

import numpy as np

from galog.core import AlgebraError, Multivector, Signature, gp_array
from galog.extended import ExtendedMultivector

_TAYLOR_TERMS = 24


def _sinc(x: float) -> float:
    if abs(x) < 1e-4:
        x2 = x * x
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0
    return math.sin(x) / x


def cl03_a_plus_minus(a: Multivector) -> tuple[float, float]:
    """``(a+, a-)`` of a Cl(0,3) multivector from its vector and bivector parts."""
    _, a1, a2, a3, a12, a13, a23, _ = a.coeffs
    a_plus = math.sqrt((a3 - a12) ** 2 + (a2 + a13) ** 2 + (a1 - a23) ** 2)
    a_minus = math.sqrt((a3 + a12) ** 2 + (a2 - a13) ** 2 + (a1 + a23) ** 2)
    return a_plus, a_minus


def exp_closed_cl03(a: Multivector) -> Multivector:
    """Closed-form exponential in Cl(0,3), coefficient by coefficient."""
    if a.sig is not Signature.CL03:
        raise AlgebraError(f"exp_closed_cl03 needs a Cl(0,3) multivector, got {a.sig.label}")
    a0, a1, a2, a3, a12, a13, a23, a123 = a.coeffs
    ap, am = cl03_a_plus_minus(a)
    ep = 0.5 * math.exp(a0 + a123)
    em = 0.5 * math.exp(a0 - a123)
    sp = ep * _sinc(ap)
    sm = em * _sinc(am)
    b0 = ep * math.cos(ap) + em * math.cos(am)
    b123 = ep * math.cos(ap) - em * math.cos(am)
    b1 = sp * (a1 - a23) + sm * (a1 + a23)
    b2 = sp * (a2 + a13) + sm * (a2 - a13)
    b3 = sp * (a3 - a12) + sm * (a3 + a12)
    b12 = -sp * (a3 - a12) + sm * (a3 + a12)
    b13 = sp * (a2 + a13) - sm * (a2 - a13)
    b23 = -sp * (a1 - a23) + sm * (a1 + a23)
    return Multivector([b0, b1, b2, b3, b12, b13, b23, b123], a.sig)


def exp_series_array(coeffs: np.ndarray, sig: Signature) -> np.ndarray:
    """Batched series exponential of coefficient rows ``(..., 8)``."""
    x = np.asarray(coeffs, dtype=float)
    flat = x.reshape(-1, 8)
    # the l1 norm of coefficients is submultiplicative, so ||x/2^s||_1 <= 1/2
    # bounds every Taylor term by 2^-k / k!
    l1 = np.abs(flat).sum(axis=1)
    s = np.zeros(len(flat), dtype=int)
    big = l1 > 0.5
    s[big] = np.ceil(np.log2(l1[big] / 0.5)).astype(int)
    scaled = flat / np.ldexp(1.0, s)[:, None]
    one = np.zeros_like(scaled)
    one[:, 0] = 1.0
    total = one.copy()
    term = one.copy()
    for k in range(1, _TAYLOR_TERMS + 1):
        term = gp_array(term, scaled, sig) / k
        prev = total
        total = total + term
        if np.array_equal(prev, total):
            break
    for step in range(int(s.max(initial=0))):
        mask = s > step
        total[mask] = gp_array(total[mask], total[mask], sig)
    return total.reshape(x.shape)


def exp_series(a: Multivector) -> Multivector:
    """``exp(a)`` by scaling and squaring; valid in every signature."""
    return Multivector(exp_series_array(a.coeffs, a.sig), a.sig)


def exp(a: Multivector) -> Multivector:
    """Exponential, using the closed form where one exists."""
    if a.sig is Signature.CL03:
        return exp_closed_cl03(a)
    return exp_series(a)


def exp_extended(a: ExtendedMultivector | Multivector, epsilon: float) -> Multivector:
    """Exponential after substituting ``λ = log(epsilon)``."""
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    return exp_series(ExtendedMultivector.lift(a).substitute(epsilon))
