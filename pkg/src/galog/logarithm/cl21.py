"""Closed-form logarithm in Cl(2,1).

As in Cl(0,3), ``I^2 = +1`` and ``P± = (1 ± I)/2`` split the algebra into
two sectors, but here ``(V P±)^2 = -q± P±`` with
``q± = -(a.a + A.A) ∓ 2 I a^A`` of either sign. Each sector is elliptic
(``q > 0``), hyperbolic (``q < 0``) or parabolic (``q = 0``); the
logarithm fails to exist in whole regions of coefficient space.
"""

from __future__ import annotations

import math

from galog.branching import BranchParams, ContinuousSlot, FreeFamily, arctan2
from galog.core import AlgebraError, Multivector, Signature, dot_wedge_split
from galog.extended import ExtendedMultivector
from galog.logarithm.result import LogResult, Row, Tol, lam

_ROWS = {
    +1: dict(
        elliptic=Row.CL21_P_ELLIPTIC, hyperbolic=Row.CL21_P_HYPERBOLIC, logdiff=Row.CL21_P_LOGDIFF,
        parabolic_pos=Row.CL21_P_PARABOLIC_POS, parabolic_d=Row.CL21_P_PARABOLIC_D,
        empty_hyperbolic=Row.CL21_P_EMPTY_HYPERBOLIC, empty_parabolic=Row.CL21_P_EMPTY_PARABOLIC,
    ),
    -1: dict(
        elliptic=Row.CL21_M_ELLIPTIC, hyperbolic=Row.CL21_M_HYPERBOLIC, logdiff=Row.CL21_M_LOGDIFF,
        parabolic_pos=Row.CL21_M_PARABOLIC_POS, parabolic_d=Row.CL21_M_PARABOLIC_D,
        empty_hyperbolic=Row.CL21_M_EMPTY_HYPERBOLIC, empty_parabolic=Row.CL21_M_EMPTY_PARABOLIC,
    ),
}


def d_condition(a: Multivector, tol: float | None = None) -> tuple[bool, bool]:
    """The two disjuncts of the coefficient-pairing condition.

    The first, ``a1 = a23, a2 = -a13, a3 = -a12``, holds exactly when
    ``(1 - I)(a + A) = 0``; the second, ``a1 = -a23, a2 = a13, a3 = a12``,
    when ``(1 + I)(a + A) = 0``. Comparisons are absolute, with threshold
    ``tol`` times the largest coefficient.
    """
    t = Tol(a, tol)
    _, a1, a2, a3, a12, a13, a23, _ = a.coeffs
    first = t.zero1(a1 - a23) and t.zero1(a2 + a13) and t.zero1(a3 + a12)
    second = t.zero1(a1 + a23) and t.zero1(a2 - a13) and t.zero1(a3 - a12)
    return first, second


def cl21_intermediates(a: Multivector, tol: float | None = None) -> dict:
    aa, bb, w = dot_wedge_split(a.vector, a.bivector, a.sig)
    S = aa + bb
    q_plus = -S - 2.0 * w
    q_minus = -S + 2.0 * w
    s_plus = float(a.a0 + a.a123)
    s_minus = float(a.a0 - a.a123)
    first, second = d_condition(a, tol)
    return {
        "a_plus_sq": q_plus,
        "a_minus_sq": q_minus,
        "s_plus": s_plus,
        "s_minus": s_minus,
        "f_plus": s_plus * s_plus + q_plus,
        "f_minus": s_minus * s_minus + q_minus,
        "D_condition": first or second,
        "D_plus": second,
        "D_minus": first,
    }


def _sector(sign, q, s, f, d_sector, V, one_pm, c1, c2, branch, t, sig):
    """Return ``(A0, A12, row, generators, slots)`` or ``(None, None, row, reason)``."""
    rows = _ROWS[sign]
    c1name = "c1_plus" if sign > 0 else "c1_minus"
    c2name = "c2_plus" if sign > 0 else "c2_minus"
    proj = one_pm * V
    qs = t.sign2(q)
    ss = t.sign1(s)
    if qs > 0:
        root = math.sqrt(q)
        theta = arctan2(s, root) + 2.0 * math.pi * c1
        A0 = ExtendedMultivector(Multivector.scalar(0.5 * math.log(f), sig))
        gens = (((math.pi / root) * proj, c1name),)
        return A0, (theta / root) * proj, rows["elliptic"], gens, ()
    if qs < 0:
        if ss <= 0:
            return None, None, rows["empty_hyperbolic"], "q < 0 with a0 ± a123 <= 0"
        h = math.sqrt(-q)
        big = math.log(s + h)
        if t.zero2(f):
            # s - h = 0: the second logarithm is log(0+)
            A0 = 0.5 * (ExtendedMultivector(Multivector.scalar(big, sig)) + lam(sig))
            A12 = (0.5 / h) * (ExtendedMultivector(Multivector.scalar(big, sig)) - lam(sig)) * proj
            return A0, A12, rows["logdiff"], (), ()
        # s - h computed as f / (s + h) to avoid cancellation
        small = math.log(f / (s + h))
        A0 = ExtendedMultivector(Multivector.scalar(0.5 * (big + small), sig))
        A12 = (0.5 * (big - small) / h) * proj
        return A0, A12, rows["hyperbolic"], (), ()
    if ss > 0:
        A0 = Multivector.scalar(math.log(s), sig)
        slots = ()
        if d_sector:
            A0 = A0 + (2.0 * math.pi * c2) * branch.unit_bivector(sig)
            slots = (ContinuousSlot("free_bivector", c2name, math.pi * one_pm),)
        return ExtendedMultivector(A0), (1.0 / s) * proj, rows["parabolic_pos"], (), slots
    if not d_sector:
        return None, None, rows["empty_parabolic"], "q = 0 with a0 ± a123 <= 0 and the pairing condition false"
    U = branch.unit_bivector(sig)
    turn = (math.pi + 2.0 * math.pi * c2) * U
    A0 = lam(sig) + turn if ss == 0 else ExtendedMultivector(Multivector.scalar(math.log(-s), sig) + turn)
    slots = (ContinuousSlot("free_bivector", c2name, math.pi * one_pm),)
    return A0, Multivector.zero(sig), rows["parabolic_d"], (), slots


def log_cl21(
    a: Multivector,
    branch: BranchParams | None = None,
    tol: float | None = None,
    blanket_d: bool = False,
) -> LogResult:
    """Logarithm in Cl(2,1), or an empty result where none exists.

    The pairing condition is applied per sector by default: sector ``+``
    consults the disjunct equivalent to ``(1 + I)(a + A) = 0`` and sector
    ``-`` the other one. ``blanket_d=True`` uses the plain disjunction in
    both sectors instead.
    """
    if a.sig is not Signature.CL21:
        raise AlgebraError(f"log_cl21 needs a Cl(2,1) multivector, got {a.sig.label}")
    branch = branch or BranchParams()
    t = Tol(a, tol)
    sig = a.sig
    inter = cl21_intermediates(a, tol)
    if t.sign2(inter["f_plus"]) < 0 or t.sign2(inter["f_minus"]) < 0:
        return LogResult.empty("f+ < 0 or f- < 0", (Row.CL21_F_NEGATIVE,), inter)
    d_plus = inter["D_condition"] if blanket_d else inter["D_plus"]
    d_minus = inter["D_condition"] if blanket_d else inter["D_minus"]
    V = a.vector_bivector()
    one = Multivector.scalar(1.0, sig)
    I = Multivector.basis("I", sig)
    p = _sector(+1, inter["a_plus_sq"], inter["s_plus"], inter["f_plus"], d_plus, V, one + I,
                branch.c1_plus, branch.c2_plus, branch, t, sig)
    m = _sector(-1, inter["a_minus_sq"], inter["s_minus"], inter["f_minus"], d_minus, V, one - I,
                branch.c1_minus, branch.c2_minus, branch, t, sig)
    rows = (p[2], m[2])
    for part in (p, m):
        if part[0] is None:
            return LogResult.empty(part[3], rows, inter)
    A0p, A12p, _, gens_p, slots_p = p
    A0m, A12m, _, gens_m, slots_m = m
    value = 0.5 * (A0p + A0m + A12p + A12m + (A0p - A0m) * I)
    family = FreeFamily(gens_p + gens_m, slots_p + slots_m)
    return LogResult.found(value, family, rows, inter)
