"""Closed-form family profiles."""

from fractions import Fraction

import pytest

from spinecheck import (
    MpDescriptor,
    QmDescriptor,
    check_labeled,
    frac_mod2,
    lens_n1_profile,
    mp_profile,
    niwu_profile,
    qkm_profile,
    qkm_structure,
    qm_profile,
    residue_table,
    v_trefoil,
    verdict,
)

F = Fraction


def multiset(values):
    return sorted(values)


def test_lens_4():
    assert lens_n1_profile(4).values == (F(3, 4), F(0), F(-1, 4), F(0))


def test_lens_1_is_sphere():
    assert lens_n1_profile(1).values == (F(0),)


def test_lens_5():
    assert lens_n1_profile(5).values == (
        F(1), F(1, 5), F(-1, 5), F(-1, 5), F(1, 5)
    )


@pytest.mark.parametrize("n", range(1, 33))
def test_lens_matches_residue_table(n):
    profile = lens_n1_profile(n)
    assert tuple(frac_mod2(v) for v in profile.values) == residue_table(n)


def test_qm_multisets():
    assert multiset(v for _, v in qm_profile(5).entries) == multiset(
        [F(7, 4), F(3, 4), F(0), F(0)]
    )
    assert multiset(v for _, v in qm_profile(-3).entries) == multiset(
        [F(-1, 4), F(-5, 4), F(0), F(0)]
    )
    assert multiset(v for _, v in qm_profile(2).entries) == multiset(
        [F(1), F(0), F(0), F(0)]
    )


def test_qm_odd_is_cyclic_with_self_conjugate_nonzeros():
    raw = qm_profile(7)
    assert raw.cyclic
    # the nonzero values sit at the self-conjugate ids 0 and 2
    assert {raw.conj[0], raw.conj[2]} == {0, 2}
    assert raw.value(1) == raw.value(3) == 0


def test_qm_even_has_trivial_involution():
    raw = qm_profile(4)
    assert not raw.cyclic
    assert all(raw.conj[k] == k for k, _ in raw.entries)


@pytest.mark.parametrize("m", range(-15, 16))
def test_qm_designated_zero_pair(m):
    raw = qm_profile(m)
    zero_ids = (1, 3) if m % 2 else ("c", "d")
    assert all(raw.value(k) == 0 for k in zero_ids)


def test_qm_descriptor_homology():
    assert QmDescriptor(5).h1_type == "Z/4"
    assert QmDescriptor(4).h1_type == "Z/2+Z/2"


def test_mp_profiles_pinned():
    assert mp_profile(MpDescriptor(-1)).values == (F(3, 4), F(0), F(-1, 4), F(0))
    assert mp_profile(MpDescriptor(0)).values == (F(-5, 4), F(0), F(-1, 4), F(0))
    assert mp_profile(MpDescriptor(1)).values == (F(-5, 4), F(0), F(-9, 4), F(0))


def test_mp_p0_equals_trefoil_surgery():
    # the parameter-0 knot is the right-handed trefoil, so the profile
    # must coincide with the 4-surgery formula output
    assert mp_profile(MpDescriptor(0)) == niwu_profile(v_trefoil(), 4)


def test_mp_rejects_odd_dyp():
    with pytest.raises(ValueError):
        MpDescriptor(p=1, d_yp=1)


@pytest.mark.parametrize("p", range(-10, 11))
@pytest.mark.parametrize("d_yp", [-4, -2, 0, 2, 4])
def test_mp_matches_residue_table(p, d_yp):
    profile = mp_profile(MpDescriptor(p, d_yp))
    assert tuple(frac_mod2(v) for v in profile.values) == residue_table(4)


@pytest.mark.parametrize("p", range(-6, 6))
def test_mp_parity_branches_swap_middle_entries(p):
    """The two parity formulas differ exactly by exchanging the values at
    the self-conjugate indices 0 and 2."""
    d = 0
    base = F(-d)
    a = base - F(4 * p + 1, 4)
    b = base - F(4 * p + 5, 4)
    odd_shape = (a, base, b, base)
    even_shape = (b, base, a, base)
    expected = odd_shape if p % 2 else even_shape
    assert mp_profile(MpDescriptor(p, d)).values == expected


@pytest.mark.parametrize("d_yp", [-4, -2, 0, 2, 4])
def test_mp_verdict_independent_of_dyp(d_yp):
    for p in range(-10, 11):
        v0 = verdict(mp_profile(MpDescriptor(p, 0)).to_raw()).overall
        vd = verdict(mp_profile(MpDescriptor(p, d_yp)).to_raw()).overall
        assert v0 == vd


def test_lens_profile_passes_difference_check():
    # the surgery trace is an honest filling, so L(n,1) always passes
    for n in range(2, 10):
        assert check_labeled(lens_n1_profile(n)).passed


def test_qkm_structure():
    assert qkm_structure(2, 5) == (4, True)
    assert qkm_structure(3, 6) == (9, False)
    assert qkm_structure(2, 4) == (4, False)


def test_qkm_structure_rejects_small_k():
    with pytest.raises(ValueError):
        qkm_structure(1, 3)


def test_qkm_profile_refuses_k_above_2():
    with pytest.raises(ValueError, match="no d-invariant formula"):
        qkm_profile(3, 5)


def test_qkm_profile_k2_delegates():
    assert qkm_profile(2, 5).entries == qm_profile(5).entries
