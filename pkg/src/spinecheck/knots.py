"""V-sequences: the local h-invariants V_0, V_1, V_2, ... of a knot.

Ni and Wu attach to every knot K in S^3 a sequence of nonnegative
integers V_i(K), derived from its knot Floer complex, which control the
correction terms of all positive integer surgeries on K.  The sequence is
non-increasing and decreases in steps of at most one:

    V_i - 1 <= V_{i+1} <= V_i,

and it is eventually zero.  This package treats V-sequences as primary
inputs (they are a black box here; computing them from knot Floer data is
a separate project) and ships only the two sequences its built-in
examples need: the unknot and the right-handed trefoil.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


class MonotonicityViolation(ValueError):
    """The candidate sequence fails V_i - 1 <= V_{i+1} <= V_i somewhere."""


@dataclass(frozen=True)
class VSequence:
    """Eventually-zero staircase sequence, extended by zeros past storage.

    Storage is trimmed to the last nonzero entry; the zero tail is
    implicit and infinite.  Use v_from_values to construct with
    validation.
    """

    values: tuple[int, ...]

    def at(self, i: int) -> int:
        """V_i, with the implicit zero extension."""
        if i < 0:
            raise ValueError(f"V-sequence index must be nonnegative, got {i}")
        return self.values[i] if i < len(self.values) else 0


def v_from_values(values) -> VSequence:
    """Validate and build a V-sequence from explicit leading values.

    The implicit zero extension is part of the sequence, so the last
    stored value must itself step down to 0 legally: (2,) is as invalid
    as (2, 0).
    """
    vals = tuple(int(v) for v in values)
    if any(v < 0 for v in vals):
        raise MonotonicityViolation(f"negative entry in {vals}")
    for i, (a, b) in enumerate(zip(vals, vals[1:] + (0,))):
        if b > a or b < a - 1:
            raise MonotonicityViolation(
                f"V_{i + 1} = {b} not in [V_{i} - 1, V_{i}] = [{a - 1}, {a}]"
            )
    # trim the stored zero tail
    last = 0
    for i, v in enumerate(vals):
        if v != 0:
            last = i + 1
    return VSequence(vals[:last])


def v_at(v: VSequence, i: int) -> int:
    return v.at(i)


def v_unknot() -> VSequence:
    """V = (0, 0, ...): the unknot bounds a smooth disk."""
    return VSequence(())


def v_trefoil() -> VSequence:
    """V = (1, 0, 0, ...) for the right-handed trefoil.

    The value V_0 = 1 is pinned down by the surgery formula: 4-surgery on
    the right-handed trefoil is the twisted circle bundle with Euler
    number -3 over RP^2, whose d-invariants {-1/4, -5/4, 0, 0} force
    3/4 - 2 max(V_0, V_4) = -5/4.
    """
    return VSequence((1,))


def v_torus_2strand(g: int, *, experimental: bool = False) -> VSequence:
    """Candidate closed form V_i = ceil(max(g - i, 0) / 2) for the
    (2, 2g+1) torus knot.

    Validated against the trefoil (g = 1) only; anything else is
    unverified, hence the required experimental flag.
    """
    if not experimental:
        raise ValueError(
            "v_torus_2strand is experimental; pass experimental=True"
        )
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    return v_from_values(
        tuple(-((-max(g - i, 0)) // 2) for i in range(g + 1))
    )


def random_v_sequence(rng: random.Random, max_v0: int = 8) -> VSequence:
    """Uniformly messy but always-valid test sequence: pick V_0 <= max_v0
    and walk down by a random 0/1 decrement string until reaching 0."""
    v0 = rng.randint(0, max_v0)
    vals = [v0]
    while vals[-1] > 0:
        vals.append(vals[-1] - rng.randint(0, 1))
    return v_from_values(vals)
