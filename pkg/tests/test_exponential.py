import math

import numpy as np
import pytest
from hypothesis import given

from conftest import PI, coeffs8, max_err, random_mvs, rel_err
from galog.core import AlgebraError, Multivector, Signature
from galog.exponential import cl03_a_plus_minus, exp, exp_closed_cl03, exp_extended, exp_series, exp_series_array


def test_closed_matches_series_bulk():
    worst = 0.0
    for a in random_mvs("cl03", 10_000, seed=11, lo=-5, hi=5):
        worst = max(worst, rel_err(exp_closed_cl03(a), exp_series(a)))
    assert worst < 1e-9


@given(coeffs8)
def test_closed_matches_series_property(c):
    a = Multivector(c, "cl03")
    assert rel_err(exp_closed_cl03(a), exp_series(a)) < 1e-9


def test_closed_rejects_other_signatures():
    with pytest.raises(AlgebraError):
        exp_closed_cl03(Multivector.scalar(1, "cl30"))


def test_quarter_turn_vector():
    # e1^2 = +1 in Cl(3,0): cosh/sinh; e1^2 = -1 in Cl(0,3): cos/sin
    h = PI / 2
    a30 = exp(Multivector.basis("e1", "cl30") * h)
    assert max_err(a30, Multivector([math.cosh(h), math.sinh(h), 0, 0, 0, 0, 0, 0], "cl30")) < 1e-14
    a03 = exp(Multivector.basis("e1", "cl03") * h)
    assert max_err(a03, Multivector.basis("e1", "cl03")) < 1e-15


def test_scalar_and_zero(sig):
    assert exp(Multivector.zero(sig)) == Multivector.scalar(1, sig)
    assert max_err(exp(Multivector.scalar(2, sig)), Multivector.scalar(math.e ** 2, sig)) < 1e-14


def test_inverse_pair(sig):
    one = Multivector.scalar(1, sig)
    for a in random_mvs(sig, 200, seed=3, lo=-3, hi=3):
        assert rel_err(exp(a) * exp(-a), one) < 1e-9


def test_commuting_sum(sig):
    rng = np.random.default_rng(5)
    I = Multivector.basis("I", sig)
    for a in random_mvs(sig, 100, seed=4, lo=-2, hi=2):
        b = float(rng.uniform(-2, 2)) + float(rng.uniform(-2, 2)) * I + 0.5 * a.vector_bivector()
        assert rel_err(exp(a + b), exp(a) * exp(b)) < 1e-9


def test_continuity_at_small_a_plus_minus():
    base = Multivector([0.3, 0, 0, 0, 0, 0, 0, -0.2], "cl03")
    for tiny in (1e-15, 1e-9, 1e-5):
        a = base + Multivector([0, tiny, 0, 0, 0, 0, 0, 0], "cl03")
        ap, am = cl03_a_plus_minus(a)
        assert ap == pytest.approx(tiny) and am == pytest.approx(tiny)
        assert rel_err(exp_closed_cl03(a), exp_series(a)) < 1e-14


def test_batched_matches_single(sig):
    mvs = random_mvs(sig, 20, seed=8)
    batch = exp_series_array(np.stack([m.coeffs for m in mvs]), Signature.parse(sig))
    for row, m in zip(batch, mvs):
        assert np.array_equal(row, exp_series(m).coeffs)


def test_large_input_scaling():
    a = Multivector([0, 0, 0, 0, 30, 0, 0, 0], "cl30")
    assert max_err(exp(a), Multivector([math.cos(30), 0, 0, 0, math.sin(30), 0, 0, 0], "cl30")) < 1e-10


def test_exp_extended_rejects_bad_eps():
    with pytest.raises(ValueError):
        exp_extended(Multivector.zero("cl30"), 0.0)
