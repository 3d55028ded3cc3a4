"""Hypothesis properties of the logarithm and its transports."""

import numpy as np
from hypothesis import assume, given, strategies as st

from conftest import coeffs8, rel_err, small_ints8
from galog.branching import BranchParams
from galog.core import Multivector, Signature, determinant, inverse, isomorphism_cl30_cl12
from galog.exponential import exp_series
from galog.functions import power
from galog.logarithm import log

sigs = st.sampled_from(list(Signature))
consts = st.integers(-3, 3)
direction = st.tuples(*[st.floats(-1, 1, allow_nan=False)] * 3).filter(lambda d: sum(x * x for x in d) > 0.01)


def finite_log(a, branch=None):
    r = log(a, branch)
    assume(r.exists and not r.is_singular)
    return r.finite()


@given(sigs, coeffs8)
def test_round_trip(sig, c):
    a = Multivector(c, sig)
    assert rel_err(exp_series(finite_log(a)), a) < 1e-8


@given(sigs, coeffs8, consts, consts, consts, consts)
def test_branch_coherence(sig, c, p1, m1, p2, m2):
    a = Multivector(c, sig)
    b = BranchParams(p1, m1, p2, m2)
    assert rel_err(exp_series(finite_log(a, b)), a) < 1e-8


@given(st.sampled_from([Signature.CL03, Signature.CL30, Signature.CL21]), coeffs8, direction, direction)
def test_free_directions(sig, c, u, U):
    if sig is Signature.CL21:
        assume(U[0] ** 2 - U[1] ** 2 - U[2] ** 2 > 0.01)
    a = Multivector(c, sig)
    b = BranchParams(c1_plus=1).with_directions(u if sig is Signature.CL03 else None, U)
    assert rel_err(exp_series(finite_log(a, b)), a) < 1e-8


@given(sigs, coeffs8)
def test_reverse_commutes(sig, c):
    a = Multivector(c, sig)
    L = finite_log(a)
    assert rel_err(exp_series(L.reverse()), a.reverse()) < 1e-8


@given(sigs, coeffs8, coeffs8)
def test_conjugation_transport(sig, c, v):
    a, V = Multivector(c, sig), Multivector(v, sig)
    assume(abs(determinant(V)) > 1e-3 * max(1.0, V.scale()) ** 4)
    Vi = inverse(V)
    L = finite_log(a)
    target = V * a * Vi
    assert rel_err(exp_series(V * L * Vi), target) < 1e-7


@given(coeffs8)
def test_isomorphism_transport(c):
    a = Multivector(c, Signature.CL30)
    L = finite_log(a)
    mapped = isomorphism_cl30_cl12(a)
    assert rel_err(exp_series(isomorphism_cl30_cl12(L)), mapped) < 1e-8
    assert rel_err(exp_series(finite_log(mapped)), mapped) < 1e-8


@given(small_ints8, small_ints8)
def test_isomorphism_products_exact(x, y):
    a, b = Multivector(x, "cl30"), Multivector(y, "cl30")
    assert isomorphism_cl30_cl12(a * b) == isomorphism_cl30_cl12(a) * isomorphism_cl30_cl12(b)


@given(sigs, coeffs8)
def test_half_power_squared(sig, c):
    a = Multivector(c, sig)
    finite_log(a)
    h = power(a, "1/2")
    assert rel_err(h * h, a) < 1e-8


@given(st.sampled_from([Signature.CL03, Signature.CL30, Signature.CL12]), coeffs8)
def test_determinant_gate(sig, c):
    # nonexistence only happens on a vanishing determinant
    a = Multivector(c, sig)
    r = log(a)
    if not r.exists:
        assert abs(determinant(a)) <= 1e-9 * max(1.0, a.scale()) ** 4
    if sig is Signature.CL03:
        assert r.exists


@given(coeffs8)
def test_cl21_nonexistence_reason(c):
    r = log(Multivector(c, Signature.CL21))
    if not r.exists:
        it = r.intermediates
        assert it["f_plus"] < 0 or it["f_minus"] < 0 or any("empty" in row.value for row in r.rows)
