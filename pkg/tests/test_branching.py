import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import PI
from galog.branching import (
    BranchParams,
    ContinuousSlot,
    FreeFamily,
    UndefinedAngleError,
    arctan2,
    arctan2_branched,
)
from galog.core import AlgebraError, Multivector, Signature

# the five pinned values, (x, y) order
PINNED = [
    ((17, 10), math.atan(10 / 17)),
    ((-17, 10), PI - math.atan(10 / 17)),
    ((-17, -10), -PI + math.atan(10 / 17)),
    ((1, 0), 0.0),
    ((-1, 0), PI),
]


@pytest.mark.parametrize("xy,expected", PINNED)
def test_pinned_values(xy, expected):
    assert abs(arctan2(*xy) - expected) <= 1e-15


def test_negative_zero_on_cut():
    assert arctan2(-1.0, -0.0) == PI


def test_undefined_at_origin():
    with pytest.raises(UndefinedAngleError):
        arctan2(0.0, 0.0)


def test_axis_rows():
    assert arctan2(0, 2) == PI / 2
    assert arctan2(0, -2) == -PI / 2


def test_branched():
    assert arctan2_branched(1, 0, 1) == pytest.approx(2 * PI)
    assert arctan2_branched(-1, 0, 0) == PI
    assert arctan2_branched(0, -1, -1) == pytest.approx(-PI / 2 - 2 * PI)


def test_range_and_reconstruction_bulk():
    rng = np.random.default_rng(2024)
    pts = rng.normal(size=(100_000, 2)) * 10.0 ** rng.uniform(-3, 3, (100_000, 1))
    for x, y in pts:
        t = arctan2(x, y)
        assert -PI < t <= PI
        r = math.hypot(x, y)
        assert abs(r * math.cos(t) - x) <= 1e-14 * r * 4
        assert abs(r * math.sin(t) - y) <= 1e-14 * r * 4


@given(st.floats(-1e6, 1e6), st.floats(-1e6, 1e6))
def test_range_property(x, y):
    if x == 0 and y == 0:
        return
    t = arctan2(x, y)
    # -pi only appears when a tiny negative y rounds -pi + eps down
    assert -PI <= t <= PI
    if t == -PI:
        assert y < 0 and abs(y) < 1e-15 * abs(x)
    if x > 0:
        assert abs(t) < PI / 2 + 1e-15
    if y > 0:
        assert t > 0


def test_branch_params_parse():
    b = BranchParams.parse("c1p=1, c1m=-2,c2p=3,c2m=0")
    assert (b.c1_plus, b.c1_minus, b.c2_plus, b.c2_minus) == (1, -2, 3, 0)
    assert BranchParams.parse("c1=4,c2=5") == BranchParams(c1_plus=4, c2_plus=5)
    assert BranchParams.parse("") == BranchParams()
    for bad in ("c3=1", "c1", "c1=x", "c1=1.5"):
        with pytest.raises(ValueError):
            BranchParams.parse(bad)


def test_aliases():
    b = BranchParams.single(c1=2, c2=-1)
    assert b.c1 == b.c1_plus == 2 and b.c2 == b.c2_plus == -1


def test_as_dict_round_trip():
    b = BranchParams(1, 2, 3, 4).with_directions((1, 2, 3), (0, 0, 1))
    d = b.as_dict()
    assert d["free_vector"] == [1.0, 2.0, 3.0] and d["c2_minus"] == 4


@pytest.mark.parametrize("sig", list(Signature), ids=lambda s: s.value)
def test_default_bivector_squares_to_minus_one(sig):
    u = BranchParams().unit_bivector(sig)
    assert (u * u).allclose(Multivector.scalar(-1, sig), 1e-15)


def test_default_directions():
    b = BranchParams()
    assert b.unit_vector(Signature.CL03) == Multivector.basis("e1", "cl03")
    assert b.unit_bivector(Signature.CL30) == Multivector.basis("e12", "cl30")
    assert b.unit_bivector(Signature.CL21) == Multivector.basis("e12", "cl21")
    assert b.unit_bivector(Signature.CL12) == Multivector.basis("e23", "cl12")


def test_free_directions_normalised():
    b = BranchParams().with_directions((3, 0, 4), (1, 2, 2))
    u = b.unit_vector(Signature.CL03)
    assert (u * u).allclose(Multivector.scalar(-1, "cl03"), 1e-15)
    U = b.unit_bivector(Signature.CL30)
    assert (U * U).allclose(Multivector.scalar(-1, "cl30"), 1e-15)
    # Cl(2,1): d12^2 - d13^2 - d23^2 > 0 is required
    V = BranchParams().with_directions(bivector=(3, 1, 2)).unit_bivector(Signature.CL21)
    assert (V * V).allclose(Multivector.scalar(-1, "cl21"), 1e-14)
    with pytest.raises(AlgebraError):
        BranchParams().with_directions(bivector=(1, 2, 2)).unit_bivector(Signature.CL21)


def test_free_vector_only_cl03():
    with pytest.raises(AlgebraError):
        BranchParams().unit_vector(Signature.CL30)


def test_free_family_member():
    g = Multivector.basis("e123", "cl30") * (2 * PI)
    slot = ContinuousSlot("free_bivector", "c2_plus", Multivector.scalar(2 * PI, "cl30"))
    fam = FreeFamily(((g, "c1_plus"),), (slot,))
    m = fam.member({"c1_plus": 2, "c2_plus": 1})
    assert m.allclose(Multivector([0, 0, 0, 0, 2 * PI, 0, 0, 4 * PI], "cl30"), 1e-14)
    assert FreeFamily().member({}) is None
    d = fam.describe()
    assert d["discrete"][0]["constant"] == "c1_plus" and d["continuous"][0]["kind"] == "free_bivector"
