"""Surgery formula and the generalized two-sided bound."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spinecheck import (
    SurgeryBoundInput,
    conj_index,
    frac_mod2,
    lens_n1_profile,
    niwu_bound_check,
    niwu_bound_deficit,
    niwu_profile,
    qm_profile,
    residue_table,
    v_at,
    v_from_values,
    v_trefoil,
    v_unknot,
)
from conftest import v_sequences

F = Fraction


def test_trefoil_4_surgery():
    profile = niwu_profile(v_trefoil(), 4)
    assert profile.values == (F(-5, 4), F(0), F(-1, 4), F(0))
    # multiset agreement with the Euler-number -3 circle bundle
    assert sorted(profile.values) == sorted(
        v for _, v in qm_profile(-3).entries
    )


def test_unknot_5_surgery_is_lens():
    assert niwu_profile(v_unknot(), 5) == lens_n1_profile(5)


def test_v0_only_sequence():
    assert niwu_profile(v_from_values((1, 0)), 5).values == (
        F(-1), F(1, 5), F(-1, 5), F(-1, 5), F(1, 5)
    )


def test_rejects_nonpositive_coefficient():
    with pytest.raises(ValueError):
        niwu_profile(v_unknot(), 0)


@given(v_sequences(), st.integers(min_value=1, max_value=16))
def test_profile_is_conjugation_symmetric(v, n):
    p = niwu_profile(v, n)
    assert all(p.values[i] == p.values[conj_index(i, n)] for i in range(n))


@given(v_sequences(), st.integers(min_value=1, max_value=16))
def test_profile_matches_residue_table(v, n):
    p = niwu_profile(v, n)
    assert tuple(frac_mod2(x) for x in p.values) == residue_table(n)


@given(v_sequences(), st.integers(min_value=2, max_value=16))
def test_consecutive_difference_law(v, n):
    """First-half differences are (n-2i-1)/n or (-n-2i-1)/n exactly; the
    middle difference vanishes for odd n."""
    p = niwu_profile(v, n)
    for i in range(0, (n - 2) // 2 + 1):
        diff = p.values[i] - p.values[i + 1]
        assert diff in (F(n - 2 * i - 1, n), F(-n - 2 * i - 1, n))
    if n % 2 == 1:
        mid = (n - 1) // 2
        assert p.values[mid] == p.values[mid + 1]
        assert p.values[mid] == F(1 - n, 4 * n) - 2 * v_at(v, mid)


def test_bound_input_validation():
    with pytest.raises(ValueError):
        SurgeryBoundInput(d_y=F(0), n_y=-1, v=v_unknot(), n=4, i=0)
    with pytest.raises(ValueError):
        SurgeryBoundInput(d_y=F(0), n_y=0, v=v_unknot(), n=4, i=4)
    with pytest.raises(ValueError):
        SurgeryBoundInput(d_y=F(0), n_y=0, v=v_unknot(), n=0, i=0)


def test_bound_collapses_to_equality_at_ny_zero():
    inp = SurgeryBoundInput(d_y=F(0), n_y=0, v=v_trefoil(), n=4, i=0)
    assert niwu_bound_check(inp, F(-5, 4))
    assert not niwu_bound_check(inp, F(-1, 4))


def test_bound_allows_deficit_within_window():
    inp = SurgeryBoundInput(d_y=F(0), n_y=1, v=v_trefoil(), n=4, i=0)
    assert niwu_bound_deficit(inp, F(-13, 4)) == F(-2)
    assert niwu_bound_check(inp, F(-13, 4))
    assert not niwu_bound_check(inp, F(-17, 4))  # deficit -3 < -2


@given(v_sequences(), st.integers(min_value=1, max_value=12))
def test_zero_window_accepts_exactly_the_formula(v, n):
    profile = niwu_profile(v, n)
    for i in range(n):
        inp = SurgeryBoundInput(d_y=F(0), n_y=0, v=v, n=n, i=i)
        assert niwu_bound_check(inp, profile.values[i])
        assert niwu_bound_deficit(inp, profile.values[i]) == 0
        assert not niwu_bound_check(inp, profile.values[i] + F(1, 4 * n))


def test_ambient_shift_enters_deficit():
    inp = SurgeryBoundInput(d_y=F(2), n_y=0, v=v_unknot(), n=3, i=0)
    shifted = lens_n1_profile(3).values[0] + 2
    assert niwu_bound_check(inp, shifted)
    assert not niwu_bound_check(inp, lens_n1_profile(3).values[0])
