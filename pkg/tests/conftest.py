import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from galog.core import Multivector, Signature

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SIGS = list(Signature)
PI = math.pi


def mv(coeffs, sig) -> Multivector:
    return Multivector(coeffs, sig)


def max_err(a: Multivector, b: Multivector) -> float:
    return float(np.max(np.abs(a.coeffs - b.coeffs)))


def rel_err(a: Multivector, b: Multivector) -> float:
    """Max coefficient error relative to the larger of the two operands."""
    return max_err(a, b) / max(1.0, a.scale(), b.scale())


def random_mvs(sig, n, seed, lo=-10.0, hi=10.0):
    rng = np.random.default_rng(seed)
    return [Multivector(c, sig) for c in rng.uniform(lo, hi, (n, 8))]


coeff = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
coeffs8 = st.lists(coeff, min_size=8, max_size=8)
small_ints8 = st.lists(st.integers(-5, 5), min_size=8, max_size=8)


@pytest.fixture(params=SIGS, ids=[s.value for s in SIGS])
def sig(request):
    return request.param
