"""Closed-form logarithm in Cl(3,0) and Cl(1,2).

In both algebras ``I`` is central with ``I^2 = -1``, so the center
``a0 + a123 I`` behaves like the complex numbers. Writing
``V = a + A`` with ``V^2 = z^2``, ``z = a+ + a- I``, the multivector is
``alpha + z N`` with ``N^2 = 1``; its logarithm is assembled from the two
complex logarithms ``log(alpha ± z)``.
"""

from __future__ import annotations

import math

from galog.branching import BranchParams, ContinuousSlot, FreeFamily, arctan2
from galog.core import AlgebraError, Multivector, Signature, dot_wedge_split
from galog.extended import ExtendedMultivector
from galog.logarithm.result import LogResult, Row, Tol, lam

_SIGS = (Signature.CL30, Signature.CL12)


def cl30_a_plus_minus(a: Multivector, tol: float | None = None) -> tuple[float, float, Row, dict]:
    """``(a+, a-)`` with ``a+^2 - a-^2 = a.a + A.A`` and ``a+ a- = I-part of a^A``.

    Uses a cancellation-free form of the square roots; when the wedge
    vanishes (relative to the dot products) the explicit fallback applies.
    """
    t = Tol(a, tol)
    aa, bb, w = dot_wedge_split(a.vector, a.bivector, a.sig)
    S = aa + bb
    info = {"a_dot_a": aa, "A_dot_A": bb, "a_wedge_A": w, "S": S}
    if abs(w) <= t.tol * (abs(aa) + abs(bb)):
        if S >= 0:
            return math.sqrt(S), 0.0, Row.CL30_APM_FALLBACK_POS, info
        return 0.0, math.sqrt(-S), Row.CL30_APM_FALLBACK_NEG, info
    R = math.hypot(S, 2.0 * w)
    if S >= 0:
        ap2 = 0.5 * (S + R)
        am2 = 2.0 * w * w / (S + R)
    else:
        am2 = 0.5 * (R - S)
        ap2 = 2.0 * w * w / (R - S)
    return math.sqrt(ap2), math.copysign(math.sqrt(am2), w), Row.CL30_APM_WEDGE, info


def _wrap(x: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    r = math.remainder(x, 2.0 * math.pi)
    return math.pi if r == -math.pi else r


def _log_k(k2: float, zero: bool, sig) -> ExtendedMultivector:
    if zero:
        return lam(sig)
    return ExtendedMultivector(Multivector.scalar(0.5 * math.log(k2), sig))


def log_cl30(a: Multivector, branch: BranchParams | None = None, tol: float | None = None) -> LogResult:
    """Logarithm in Cl(3,0) or Cl(1,2) (``c1``, ``c2`` select the sheet)."""
    if a.sig not in _SIGS:
        raise AlgebraError(f"log_cl30 needs a Cl(3,0) or Cl(1,2) multivector, got {a.sig.label}")
    branch = branch or BranchParams()
    c1, c2 = branch.c1, branch.c2
    sig = a.sig
    t = Tol(a, tol)
    a0, a123 = float(a.a0), float(a.a123)
    ap, am, apm_row, info = cl30_a_plus_minus(a, tol)
    zsq = ap * ap + am * am
    center2 = a0 * a0 + a123 * a123
    V = a.vector_bivector()
    I = Multivector.basis("I", sig)
    inter = {"a_plus": ap, "a_minus": am, **info}
    rows = [apm_row]
    two_pi = 2.0 * math.pi

    if t.zero2(zsq):
        v_zero = V.scale() <= t.tol * t.scale
        if t.zero2(center2):
            if v_zero:
                return LogResult.found(lam(sig), FreeFamily(), rows + [Row.CL30_ZERO_INPUT], inter)
            return LogResult.empty(
                "vector+bivector part has zero determinant and the center vanishes",
                rows + [Row.CL30_EMPTY], inter,
            )
        A0 = 0.5 * math.log(center2)
        inv_alpha = (a0 * Multivector.scalar(1.0, sig) - a123 * I) / center2
        A12 = inv_alpha * V
        slots = ()
        if v_zero:
            U = branch.unit_bivector(sig)
            A12 = A12 + (two_pi * c1) * U
            slots = (ContinuousSlot("free_bivector", "c1_plus", Multivector.scalar(two_pi, sig)),)
            arctan_row = Row.CL30_ARCTAN_FREE
        else:
            arctan_row = Row.CL30_ARCTAN_NILPOTENT
        AI = (arctan2(a0, a123) + two_pi * c2) * I
        value = A0 + A12 + AI
        family = FreeFamily(((two_pi * I, "c2_plus"),), slots)
        rows += [Row.CL30_A0_CENTER, Row.CL30_LOG_CENTER, arctan_row, Row.CL30_I_CENTER]
        inter.update(k_plus=math.sqrt(center2), k_minus=math.sqrt(center2))
        return LogResult.found(value, family, rows, inter)

    N = ((ap * Multivector.scalar(1.0, sig) - am * I) * V) / zsq
    kp2 = (ap + a0) ** 2 + (am + a123) ** 2
    km2 = (ap - a0) ** 2 + (am - a123) ** 2
    kp, km = math.sqrt(kp2), math.sqrt(km2)
    kp_zero, km_zero = t.zero2(kp2), t.zero2(km2)
    Lp = _log_k(kp2, kp_zero, sig)
    Lm = _log_k(km2, km_zero, sig)
    A0 = 0.5 * (Lp + Lm)
    A12_log = (0.5 * (Lp - Lm)) * N
    rows += [Row.CL30_A0_GENERIC, Row.CL30_LOG_GENERIC]

    IN = I * N
    # arguments of the complex factors alpha +- z; the closed arctan and
    # bisector forms are evaluated through them to avoid cancellation
    th_p = None if kp_zero else arctan2(a0 + ap, a123 + am)
    th_m = None if km_zero else arctan2(a0 - ap, a123 - am)
    if kp_zero or km_zero:
        half = 0.5 * math.pi
        rows.append(Row.CL30_ARCTAN_SINGULAR)
    else:
        X = center2 - zsq
        Y = 2.0 * (am * a0 - ap * a123)
        # half angle of (alpha + z) * conj(alpha - z)
        half = 0.5 * _wrap(th_p - th_m)
        rows.append(Row.CL30_ARCTAN_GENERIC)
        inter.update(arctan_x=X, arctan_y=Y)
    A12_arctan = (half + two_pi * c1) * IN

    bx = (ap + a0) * km - (ap - a0) * kp
    by = (am + a123) * km - (am - a123) * kp
    # A_I is the angle of the bisector of alpha +- z; paired with the half
    # angle actually taken so both idempotent parts hit arg(alpha +- z)
    AI = ((_wrap(th_p - half) if th_p is not None else _wrap(th_m + half)) + two_pi * c2) * I
    if t.zero2(bx) and t.zero2(by):
        rows.append(Row.CL30_I_DEGENERATE)
    else:
        rows.append(Row.CL30_I_GENERIC)

    value = A0 + A12_log + A12_arctan + AI
    family = FreeFamily(((two_pi * IN, "c1_plus"), (two_pi * I, "c2_plus")))
    inter.update(k_plus=kp, k_minus=km, bisector_x=bx, bisector_y=by)
    return LogResult.found(value, family, rows, inter)
