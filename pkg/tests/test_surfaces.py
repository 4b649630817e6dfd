from hypothesis import given, strategies as st

import pytest

from fourfold.catalog import get_pair
from fourfold.errors import NoetherViolation
from fourfold.surfaces import (
    EXACT_VALUE,
    UPPER_BOUND,
    ChiAndK2,
    ChiAtMost,
    NotGeneralType,
    blowup_chern,
    blowup_invariant,
    chi_noether,
    invariant_from_chern,
    invariant_threshold,
)


def test_thresholds():
    assert invariant_threshold(NotGeneralType()) == (UPPER_BOUND, 6)
    assert invariant_threshold(ChiAtMost(1)) == (UPPER_BOUND, 6)
    assert invariant_threshold(ChiAtMost(-2)) == (UPPER_BOUND, -12)
    assert invariant_threshold(ChiAndK2(1, 9)) == (EXACT_VALUE, 6)


def test_noether():
    assert chi_noether(900, 972) == 156
    assert chi_noether(45, 27) == 6
    assert chi_noether(0, 12) == 1
    with pytest.raises(NoetherViolation):
        chi_noether(1, 2)


def test_invariant():
    assert invariant_from_chern(45, 27) == 18
    assert invariant_from_chern(900, 972) == -72
    assert invariant_from_chern(9, 3) == 6


def test_blowups():
    assert blowup_invariant(6, 1) == 4
    assert blowup_invariant(17, 0) == 17
    assert blowup_invariant(0, 3) == -6
    assert invariant_from_chern(*blowup_chern(9, 3)) == 4
    with pytest.raises(ValueError):
        blowup_invariant(0, -1)


@given(st.integers(-1000, 1000), st.integers(-1000, 1000), st.integers(0, 20))
def test_blowup_keeps_chi(a, b, k):
    c2 = b * 12 - a  # makes c1^2 + c2 divisible by 12
    c1sq2, c22 = blowup_chern(a, c2, k)
    assert chi_noether(c1sq2, c22) == chi_noether(a, c2)
    assert invariant_from_chern(c1sq2, c22) == blowup_invariant(invariant_from_chern(a, c2), k)


@given(st.integers(-50, 50), st.integers(-500, 500))
def test_exact_value_below_upper_bound(r, q):
    _, exact = invariant_threshold(ChiAndK2(r, q))
    _, upper = invariant_threshold(ChiAtMost(r))
    if exact <= upper:
        assert -12 * r + 2 * q <= 6 * r


def test_catalog_fixture_chi():
    dv = get_pair("dv").fixtures[0]
    h0, h1, h2 = dv.hodge
    assert chi_noether(dv.c1sq, dv.c2) == h0 - h1 + h2 == 156
