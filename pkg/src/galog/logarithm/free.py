"""Free multivectors ``F`` with ``exp(F) = 1`` that commute with ``log A``."""

from __future__ import annotations

import math

from galog.branching import BranchParams
from galog.core import AlgebraError, Multivector, Signature
from galog.exponential import cl03_a_plus_minus
from galog.logarithm.cl21 import cl21_intermediates
from galog.logarithm.cl30 import cl30_a_plus_minus
from galog.logarithm.result import Tol


def free_multivector(a: Multivector, branch: BranchParams, tol: float | None = None) -> Multivector:
    """Generic-case free multivector for the integer constants in ``branch``.

    Cl(0,3) and elliptic Cl(2,1) sectors: ``(pi c1± / a±)(1 ± I)(a + A)``.
    Cl(3,0), Cl(1,2): ``2 pi c1 (a- V + a+ V I)/(a+^2 + a-^2) + 2 pi c2 I``.
    Degenerate inputs raise; their free parameters are described by the
    ``family`` of the corresponding logarithm result.
    """
    t = Tol(a, tol)
    sig = a.sig
    V = a.vector_bivector()
    one = Multivector.scalar(1.0, sig)
    I = Multivector.basis("I", sig)
    if sig is Signature.CL03 or sig is Signature.CL21:
        if sig is Signature.CL03:
            ap, am = cl03_a_plus_minus(a)
            ok = not (t.zero1(ap) or t.zero1(am))
        else:
            inter = cl21_intermediates(a, tol)
            q_p, q_m = inter["a_plus_sq"], inter["a_minus_sq"]
            ok = t.sign2(q_p) > 0 and t.sign2(q_m) > 0
            ap, am = (math.sqrt(q_p), math.sqrt(q_m)) if ok else (0.0, 0.0)
        if not ok:
            raise AlgebraError(
                "free multivector formula needs a+ != 0 and a- != 0 (elliptic sectors in Cl(2,1)); "
                "use the family reported by the logarithm"
            )
        return ((math.pi * branch.c1_plus / ap) * ((one + I) * V)
                + (math.pi * branch.c1_minus / am) * ((one - I) * V))
    ap, am, _, _ = cl30_a_plus_minus(a, tol)
    zsq = ap * ap + am * am
    if t.zero2(zsq):
        raise AlgebraError("free multivector formula needs a+^2 + a-^2 != 0; use the family reported by the logarithm")
    return (2.0 * math.pi * branch.c1 / zsq) * (am * V + ap * (V * I)) + (2.0 * math.pi * branch.c2) * I
