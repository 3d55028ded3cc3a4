"""Powers, roots, and (inverse) trigonometric and hyperbolic functions.

Everything is expressed through ``exp`` and the principal logarithm, e.g.
``A^r = exp(r log A)`` and ``arctanh A = (log(1 + A) - log(1 - A)) / 2``.
Square roots inside these identities are the single exp-log root; callers
may pass other roots explicitly where an identity contains one.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

import numpy as np

from galog.branching import BranchParams
from galog.core import AlgebraError, Multivector, Signature, inverse
from galog.exponential import exp
from galog.logarithm import log

Exponent = Union[int, float, Fraction, str]

TRIG_SIGNATURES = (Signature.CL30, Signature.CL12)


class NonRepresentableError(ArithmeticError):
    """The result would need an infinite (log(0+)) coefficient handled symbolically."""


def parse_exponent(r: Exponent) -> Fraction | float:
    """``"p/q"``, ints and Fractions stay exact; floats stay floats."""
    if isinstance(r, Fraction):
        return r
    if isinstance(r, (int, np.integer)):
        return Fraction(int(r))
    if isinstance(r, str):
        text = r.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad exponent {r!r}") from exc
    return float(r)


def _finite_log(a: Multivector, branch: BranchParams | None) -> Multivector:
    value = log(a, branch).unwrap()
    if not value.is_finite:
        raise NonRepresentableError(f"log of {a} has log(0+) coefficients")
    return value.finite


def power(a: Multivector, r: Exponent, branch: BranchParams | None = None) -> Multivector:
    """``exp(r log A)``.

    A singular logarithm (with ``log(0+)`` terms) is only accepted for
    non-negative integer ``r``, where the power is the repeated product.
    """
    r = parse_exponent(r)
    value = log(a, branch).unwrap()
    if not value.is_finite:
        if isinstance(r, Fraction) and r.denominator == 1 and r >= 0:
            out = Multivector.scalar(1.0, a.sig)
            for _ in range(int(r)):
                out = out * a
            return out
        raise NonRepresentableError(
            f"power {r} of a multivector with a singular logarithm is not representable"
        )
    return exp(float(r) * value.finite)


def sqrt(a: Multivector, branch: BranchParams | None = None) -> Multivector:
    return power(a, Fraction(1, 2), branch)


def _is_zero(a: Multivector) -> bool:
    return not np.any(a.coeffs)


def _require_trig(a: Multivector, name: str) -> None:
    if a.sig not in TRIG_SIGNATURES:
        raise AlgebraError(
            f"{name} needs a central pseudoscalar with I^2 = -1 (Cl(3,0) or Cl(1,2)), got {a.sig.label}"
        )


# forward hyperbolic

def sinh(a: Multivector) -> Multivector:
    return 0.5 * (exp(a) - exp(-a))


def cosh(a: Multivector) -> Multivector:
    return 0.5 * (exp(a) + exp(-a))


def tanh(a: Multivector) -> Multivector:
    ep, em = exp(a), exp(-a)
    return (ep - em) * inverse(ep + em)


def coth(a: Multivector) -> Multivector:
    ep, em = exp(a), exp(-a)
    return (ep + em) * inverse(ep - em)


# forward trigonometric (Cl(3,0), Cl(1,2))

def sin(a: Multivector) -> Multivector:
    _require_trig(a, "sin")
    I = Multivector.basis("I", a.sig)
    return 0.5 * (-I) * (exp(I * a) - exp(-(I * a)))


def cos(a: Multivector) -> Multivector:
    _require_trig(a, "cos")
    I = Multivector.basis("I", a.sig)
    return 0.5 * (exp(I * a) + exp(-(I * a)))


def tan(a: Multivector) -> Multivector:
    _require_trig(a, "tan")
    I = Multivector.basis("I", a.sig)
    ep, em = exp(I * a), exp(-(I * a))
    return -I * (ep - em) * inverse(ep + em)


def cot(a: Multivector) -> Multivector:
    _require_trig(a, "cot")
    I = Multivector.basis("I", a.sig)
    ep, em = exp(I * a), exp(-(I * a))
    return I * (ep + em) * inverse(ep - em)


# inverse hyperbolic

def arctanh(a: Multivector, branch: BranchParams | None = None) -> Multivector:
    return 0.5 * (_finite_log(1.0 + a, branch) - _finite_log(1.0 - a, branch))


def arccoth(a: Multivector, branch: BranchParams | None = None) -> Multivector:
    if _is_zero(a):
        return (0.5 * math.pi) * Multivector.basis("I", a.sig)
    ai = inverse(a)
    return 0.5 * (_finite_log(1.0 + ai, branch) - _finite_log(1.0 - ai, branch))


def arccosh(a: Multivector, branch: BranchParams | None = None,
            roots: tuple[Multivector, Multivector] | None = None) -> Multivector:
    """``log(A + sqrt(A - 1) sqrt(A + 1))``; ``roots`` overrides the two square roots."""
    r_minus, r_plus = roots if roots is not None else (sqrt(a - 1.0, branch), sqrt(a + 1.0, branch))
    return _finite_log(a + r_minus * r_plus, branch)


def arcsinh(a: Multivector, branch: BranchParams | None = None,
            root: Multivector | None = None) -> Multivector:
    """``log(A + sqrt(A^2 + 1))``; ``root`` overrides the square root."""
    r = root if root is not None else sqrt(a * a + 1.0, branch)
    return _finite_log(a + r, branch)


# inverse trigonometric (Cl(3,0), Cl(1,2))

def arcsin(a: Multivector, branch: BranchParams | None = None,
           root: Multivector | None = None) -> Multivector:
    """``-I log(A I + sqrt(1 - A^2))``; ``root`` overrides the square root."""
    _require_trig(a, "arcsin")
    I = Multivector.basis("I", a.sig)
    r = root if root is not None else sqrt(1.0 - a * a, branch)
    return -I * _finite_log(a * I + r, branch)


def arccos(a: Multivector, branch: BranchParams | None = None,
           root: Multivector | None = None) -> Multivector:
    _require_trig(a, "arccos")
    I = Multivector.basis("I", a.sig)
    r = root if root is not None else sqrt(1.0 - a * a, branch)
    return 0.5 * math.pi + I * _finite_log(a * I + r, branch)


def arctan(a: Multivector, branch: BranchParams | None = None) -> Multivector:
    _require_trig(a, "arctan")
    I = Multivector.basis("I", a.sig)
    ia = I * a
    return (0.5 * I) * (_finite_log(1.0 - ia, branch) - _finite_log(1.0 + ia, branch))


def arccot(a: Multivector, branch: BranchParams | None = None) -> Multivector:
    _require_trig(a, "arccot")
    if _is_zero(a):
        return Multivector.scalar(0.5 * math.pi, a.sig)
    I = Multivector.basis("I", a.sig)
    ia = I * inverse(a)
    return (0.5 * I) * (_finite_log(1.0 - ia, branch) - _finite_log(1.0 + ia, branch))


FORWARD = {
    "sinh": sinh, "cosh": cosh, "tanh": tanh, "coth": coth,
    "sin": sin, "cos": cos, "tan": tan, "cot": cot,
}
INVERSE = {
    "arctanh": arctanh, "arccoth": arccoth, "arccosh": arccosh, "arcsinh": arcsinh,
    "arcsin": arcsin, "arccos": arccos, "arctan": arctan, "arccot": arccot,
}
FUNCTIONS = {**FORWARD, **INVERSE, "sqrt": sqrt}
