"""Closed-form logarithm in Cl(0,3).

``I`` is central with ``I^2 = +1``, so ``P± = (1 ± I)/2`` split the
algebra into two commuting copies of the complex numbers. In sector
``±`` the vector+bivector part ``V = a + A`` satisfies
``(V P±)^2 = -a±^2 P±`` and the logarithm is a complex logarithm of
``(a0 ± a123) + a± i``.
"""

from __future__ import annotations

import math

from galog.branching import BranchParams, ContinuousSlot, FreeFamily, arctan2
from galog.core import AlgebraError, Multivector, Signature
from galog.exponential import cl03_a_plus_minus
from galog.extended import ExtendedMultivector
from galog.logarithm.result import LogResult, Row, Tol, lam

_ROWS = {
    +1: (Row.CL03_P_GENERIC, Row.CL03_P_ZERO_SPOS, Row.CL03_P_ZERO_SZERO, Row.CL03_P_ZERO_SNEG),
    -1: (Row.CL03_M_GENERIC, Row.CL03_M_ZERO_SPOS, Row.CL03_M_ZERO_SZERO, Row.CL03_M_ZERO_SNEG),
}


def cl03_intermediates(a: Multivector) -> dict:
    a_plus, a_minus = cl03_a_plus_minus(a)
    return {
        "a_plus": a_plus,
        "a_minus": a_minus,
        "s_plus": float(a.a0 + a.a123),
        "s_minus": float(a.a0 - a.a123),
    }


def _sector(sign, a_pm, s, V, one_pm, c1, c2, branch, tol, sig):
    """Return ``(A0, A12, rows, generators, slots)`` for one sector."""
    generic, spos, szero, sneg = _ROWS[sign]
    c1name = "c1_plus" if sign > 0 else "c1_minus"
    c2name = "c2_plus" if sign > 0 else "c2_minus"
    proj = one_pm * V
    if not tol.zero1(a_pm):
        theta = arctan2(s, a_pm) + 2.0 * math.pi * c1
        A0 = ExtendedMultivector(Multivector.scalar(0.5 * math.log(s * s + a_pm * a_pm), sig))
        A12 = (theta / a_pm) * proj
        gens = (((math.pi / a_pm) * proj, c1name),)
        return A0, A12, generic, gens, ()
    sgn = tol.sign1(s)
    if sgn > 0:
        U = branch.unit_bivector(sig)
        A0 = ExtendedMultivector(Multivector.scalar(math.log(s), sig) + (2.0 * math.pi * c2) * U)
        A12 = (1.0 / s + 2.0 * math.pi * c1) * proj
        slot = ContinuousSlot("free_bivector", c2name, math.pi * one_pm)
        return A0, A12, spos, (), (slot,)
    if sgn == 0:
        return lam(sig), Multivector.zero(sig), szero, (), ()
    u = branch.unit_vector(sig)
    A0 = ExtendedMultivector(Multivector.scalar(math.log(-s), sig) + (math.pi + 2.0 * math.pi * c2) * u)
    A12 = (math.pi + 2.0 * math.pi * c1) * proj
    slot = ContinuousSlot("free_vector", c2name, math.pi * one_pm)
    return A0, A12, sneg, (), (slot,)


def log_cl03(a: Multivector, branch: BranchParams | None = None, tol: float | None = None) -> LogResult:
    """Logarithm of any Cl(0,3) multivector (it always exists)."""
    if a.sig is not Signature.CL03:
        raise AlgebraError(f"log_cl03 needs a Cl(0,3) multivector, got {a.sig.label}")
    branch = branch or BranchParams()
    t = Tol(a, tol)
    sig = a.sig
    inter = cl03_intermediates(a)
    V = a.vector_bivector()
    one = Multivector.scalar(1.0, sig)
    I = Multivector.basis("I", sig)
    p = _sector(+1, inter["a_plus"], inter["s_plus"], V, one + I,
                branch.c1_plus, branch.c2_plus, branch, t, sig)
    m = _sector(-1, inter["a_minus"], inter["s_minus"], V, one - I,
                branch.c1_minus, branch.c2_minus, branch, t, sig)
    A0p, A12p, row_p, gens_p, slots_p = p
    A0m, A12m, row_m, gens_m, slots_m = m
    value = 0.5 * (A0p + A0m + A12p + A12m + (A0p - A0m) * I)
    family = FreeFamily(gens_p + gens_m, slots_p + slots_m)
    inter["det_vector_bivector"] = inter["a_plus"] ** 2 * inter["a_minus"] ** 2
    return LogResult.found(value, family, (row_p, row_m), inter)
