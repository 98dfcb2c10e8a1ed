"""Shared hypothesis strategies for the test suite."""

from fractions import Fraction

from hypothesis import strategies as st

from spinecheck import DProfile, v_from_values


@st.composite
def v_sequences(draw, max_v0=8):
    """Valid V-sequences: start at V_0 <= max_v0, walk down by a random
    0/1 decrement string (bounded draw; the tail is closed out with 1s)."""
    v0 = draw(st.integers(min_value=0, max_value=max_v0))
    flags = draw(st.lists(st.integers(min_value=0, max_value=1), max_size=24))
    vals = [v0]
    for flag in flags:
        if vals[-1] == 0:
            break
        vals.append(vals[-1] - flag)
    while vals[-1] > 0:
        vals.append(vals[-1] - 1)
    return v_from_values(vals)


@st.composite
def symmetric_profiles(draw, max_order=12):
    """Conjugation-symmetric profiles with denominators dividing 4n."""
    n = draw(st.integers(min_value=1, max_value=max_order))
    half = [
        Fraction(draw(st.integers(min_value=-40, max_value=40)), 4 * n)
        for _ in range(n // 2 + 1)
    ]
    values = [half[min(i, (n - i) % n)] for i in range(n)]
    return DProfile(tuple(values))


small_rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=64
)
