"""Shortcut logarithms for blades and two-grade combinations.

Cl(0,3): vector, paravector, bivector, parabivector, center.
Cl(3,0): vector, bivector, rotor, center (the center formula also holds in
Cl(1,2)). The Cl(3,0) paravector has no shortcut; use the general path.
"""

from __future__ import annotations

import math

import numpy as np

from galog.branching import BranchParams, ContinuousSlot, FreeFamily, arctan2
from galog.core import AlgebraError, Multivector, Signature
from galog.extended import ExtendedMultivector
from galog.logarithm.result import LogResult, Row, Tol, lam

BLADE_SLOTS = {
    "vector": (1, 2, 3),
    "paravector": (0, 1, 2, 3),
    "bivector": (4, 5, 6),
    "parabivector": (0, 4, 5, 6),
    "rotor": (0, 4, 5, 6),
    "center": (0, 7),
}
CL03_KINDS = ("vector", "paravector", "bivector", "parabivector", "center")
CL30_KINDS = ("vector", "bivector", "rotor", "center")


def check_pattern(kind: str, a: Multivector, tol: float | None = None) -> None:
    """Raise :class:`AlgebraError` unless ``a`` only has the slots of ``kind``."""
    if kind not in BLADE_SLOTS:
        raise AlgebraError(f"unknown blade kind {kind!r}")
    t = Tol(a, tol)
    allowed = BLADE_SLOTS[kind]
    for i, x in enumerate(a.coeffs):
        if i not in allowed and not t.zero1(x):
            raise AlgebraError(f"input is not a {kind}: coefficient {i} is {x:g}")


def _unit_part(a: Multivector, slots) -> tuple[Multivector, float]:
    c = np.zeros(8)
    c[list(slots)] = a.coeffs[list(slots)]
    n = float(np.sqrt(np.sum(c * c)))
    return Multivector(c, a.sig), n


def log_blade_cl03(kind: str, a: Multivector, branch: BranchParams | None = None,
                   tol: float | None = None) -> LogResult:
    if a.sig is not Signature.CL03:
        raise AlgebraError(f"log_blade_cl03 needs a Cl(0,3) multivector, got {a.sig.label}")
    if kind not in CL03_KINDS:
        raise AlgebraError(f"Cl(0,3) blade kinds are {CL03_KINDS}, got {kind!r}")
    check_pattern(kind, a, tol)
    branch = branch or BranchParams()
    c1, c2 = branch.c1, branch.c2
    t = Tol(a, tol)
    sig = a.sig
    one = Multivector.scalar(1.0, sig)
    I = Multivector.basis("I", sig)
    if kind == "center":
        return _center_cl03(a, branch, t)
    grade_slots = (1, 2, 3) if kind in ("vector", "paravector") else (4, 5, 6)
    blade, n = _unit_part(a, grade_slots)
    row = {
        "vector": Row.CL03_BLADE_VECTOR, "paravector": Row.CL03_BLADE_PARAVECTOR,
        "bivector": Row.CL03_BLADE_BIVECTOR, "parabivector": Row.CL03_BLADE_PARABIVECTOR,
    }[kind]
    if t.zero1(n):
        return LogResult.empty(f"{kind} formula needs a nonzero {kind.removeprefix('para')} part",
                               (Row.CL03_BLADE_ZERO_NORM,))
    unit = blade / n
    periodic = math.pi * (c1 * (one + I) + c2 * (one - I))
    if kind in ("vector", "bivector"):
        value = math.log(n) + unit * (0.5 * math.pi + periodic)
    else:
        a0 = float(a.a0)
        value = 0.5 * math.log(a0 * a0 + n * n) + unit * (arctan2(a0, n) + periodic)
    family = FreeFamily(((math.pi * unit * (one + I), "c1_plus"), (math.pi * unit * (one - I), "c2_plus")))
    return LogResult.found(value, family, (row,), {"norm": n})


def _center_cl03(a: Multivector, branch: BranchParams, t: Tol) -> LogResult:
    sig = a.sig
    one = Multivector.scalar(1.0, sig)
    I = Multivector.basis("I", sig)
    s_minus = float(a.a0 - a.a123)
    s_plus = float(a.a0 + a.a123)
    # the minus sector carries c1, the plus sector c2
    parts = (
        (s_minus, one - I, branch.c1, "c1_plus",
         (Row.CL03_CENTER_M_POS, Row.CL03_CENTER_M_ZERO, Row.CL03_CENTER_M_NEG)),
        (s_plus, one + I, branch.c2, "c2_plus",
         (Row.CL03_CENTER_P_POS, Row.CL03_CENTER_P_ZERO, Row.CL03_CENTER_P_NEG)),
    )
    value = ExtendedMultivector(Multivector.zero(sig))
    rows, slots = [], []
    for s, proj, c, cname, (pos, zero, neg) in parts:
        sgn = t.sign1(s)
        if sgn > 0:
            term = ExtendedMultivector(0.5 * math.log(s) + math.pi * c * branch.unit_bivector(sig))
            slots.append(ContinuousSlot("free_bivector", cname, math.pi * proj))
            rows.append(pos)
        elif sgn == 0:
            term = 0.5 * lam(sig)
            rows.append(zero)
        else:
            term = ExtendedMultivector(0.5 * math.log(-s) + math.pi * (c + 0.5) * branch.unit_vector(sig))
            slots.append(ContinuousSlot("free_vector", cname, math.pi * proj))
            rows.append(neg)
        value = value + term * proj
    inter = {"s_plus": s_plus, "s_minus": s_minus}
    return LogResult.found(value, FreeFamily((), tuple(slots)), rows, inter)


def log_blade_cl30(kind: str, a: Multivector, branch: BranchParams | None = None,
                   tol: float | None = None) -> LogResult:
    if kind not in CL30_KINDS:
        raise AlgebraError(f"Cl(3,0) blade kinds are {CL30_KINDS}, got {kind!r}")
    allowed = (Signature.CL30, Signature.CL12) if kind == "center" else (Signature.CL30,)
    if a.sig not in allowed:
        raise AlgebraError(f"the {kind} shortcut is defined for {[s.label for s in allowed]}, got {a.sig.label}")
    check_pattern(kind, a, tol)
    branch = branch or BranchParams()
    c1, c2 = branch.c1, branch.c2
    t = Tol(a, tol)
    sig = a.sig
    I = Multivector.basis("I", sig)
    two_pi = 2.0 * math.pi

    if kind == "center":
        r2 = float(a.a0 ** 2 + a.a123 ** 2)
        U = branch.unit_bivector(sig)
        slot = ContinuousSlot("free_bivector", "c2_plus", Multivector.scalar(two_pi, sig))
        if t.zero2(r2):
            value = lam(sig) + two_pi * c2 * U
            return LogResult.found(value, FreeFamily((), (slot,)), (Row.CL30_CENTER_ZERO,))
        value = 0.5 * math.log(r2) + two_pi * c2 * U + (arctan2(float(a.a0), float(a.a123)) + 4 * math.pi * c1) * I
        family = FreeFamily(((4 * math.pi * I, "c1_plus"),), (slot,))
        return LogResult.found(value, family, (Row.CL30_CENTER_NONZERO,))

    if kind == "rotor":
        biv, n = _unit_part(a, (4, 5, 6))
        a0 = float(a.a0)
        if t.zero1(n):
            family = FreeFamily(((two_pi * I, "c1_plus"),))
            if t.sign1(a0) >= 0:
                value = (lam(sig) if t.zero1(a0) else ExtendedMultivector(Multivector.scalar(math.log(a0), sig)))
                value = value + two_pi * c1 * I
                return LogResult.found(value, family, (Row.CL30_ROTOR_SCALAR_POS,))
            value = math.log(-a0) + math.pi * (2 * c1 + 1) * I
            return LogResult.found(value, family, (Row.CL30_ROTOR_SCALAR_NEG,))
        if t.zero1(a0):
            res = log_blade_cl30("bivector", a.grade(2), branch, tol)
            return LogResult.found(res.value, res.family, (Row.CL30_ROTOR_BIVECTOR,) + res.rows,
                                   res.intermediates)
        unit = biv / n
        value = (0.5 * math.log(a0 * a0 + n * n) + (arctan2(a0, 0.0) + two_pi * c1) * I
                 + unit * (two_pi * c2 - 0.5 * arctan2(a0 * a0 - n * n, -2.0 * a0 * n)))
        family = FreeFamily(((two_pi * I, "c1_plus"), (two_pi * unit, "c2_plus")))
        return LogResult.found(value, family, (Row.CL30_ROTOR_GENERIC,), {"norm": n})

    slots = (1, 2, 3) if kind == "vector" else (4, 5, 6)
    blade, n = _unit_part(a, slots)
    if t.zero1(n):
        return LogResult.empty(f"{kind} formula needs a nonzero {kind}", (Row.CL30_BLADE_ZERO_NORM,))
    unit = blade / n
    if kind == "vector":
        value = math.log(n) - math.pi * (0.5 + 2 * c2) * unit * I + math.pi * (0.5 + 2 * c1) * I
        family = FreeFamily(((-two_pi * unit * I, "c2_plus"), (two_pi * I, "c1_plus")))
        return LogResult.found(value, family, (Row.CL30_BLADE_VECTOR,), {"norm": n})
    value = math.log(n) - math.pi * (0.5 + 2 * c2) * unit + math.pi * (1 + 2 * c1) * I
    family = FreeFamily(((-two_pi * unit, "c2_plus"), (two_pi * I, "c1_plus")))
    return LogResult.found(value, family, (Row.CL30_BLADE_BIVECTOR,), {"norm": n})
