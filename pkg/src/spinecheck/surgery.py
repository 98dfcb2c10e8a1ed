"""Correction terms of integer surgeries on knots.

For a knot K in S^3 and n > 0, Ni and Wu expressed the d-invariants of
the surgered manifold S^3_n(K) through the V-sequence of K:

    d(S^3_n(K), s_i) = ((2i - n)^2 - n) / (4n) - 2 max(V_i, V_{n-i}),

where the first term is a d-invariant of the lens space L(n, 1).  For
surgery on a knot inside an arbitrary homology sphere Y the equality
fails in general; what survives is a two-sided bound with a defect
controlled by N_Y = min{k >= 0 : U^k kills the reduced Floer homology of
Y}.  Both the exact formula and the bound checker live here; N_Y and
d(Y) are caller-supplied inputs, never computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .dcore import DProfile, Rational
from .knots import VSequence


@lru_cache(maxsize=None)
def _lens_terms(n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction((2 * i - n) ** 2 - n, 4 * n) for i in range(n))


def niwu_profile(v: VSequence, n: int) -> DProfile:
    """d-invariants of n-surgery on a knot in S^3 with V-sequence v.

    The max term pairs V_i with V_{n-i} (at i = 0 this reads the
    zero-extended V_n), which makes the profile conjugation-symmetric.
    """
    if n < 1:
        raise ValueError(f"surgery coefficient must be positive, got {n}")
    lens = _lens_terms(n)
    return DProfile(
        tuple(lens[i] - 2 * max(v.at(i), v.at(n - i)) for i in range(n))
    )


@dataclass(frozen=True)
class SurgeryBoundInput:
    """Inputs to the generalized surgery bound.

    d_y is the d-invariant of the ambient homology sphere Y, n_y its
    vanishing exponent N_Y, v the V-sequence of the knot, n > 0 the
    surgery coefficient and i the spin^c index being tested.
    """

    d_y: Rational
    n_y: int
    v: VSequence
    n: int
    i: int

    def __post_init__(self):
        object.__setattr__(self, "d_y", Fraction(self.d_y))
        if self.n_y < 0:
            raise ValueError(f"N_Y must be nonnegative, got {self.n_y}")
        if self.n < 1:
            raise ValueError(f"surgery coefficient must be positive, got {self.n}")
        if not 0 <= self.i < self.n:
            raise ValueError(f"index {self.i} out of range for order {self.n}")


def niwu_bound_deficit(inp: SurgeryBoundInput, candidate: Rational) -> Rational:
    """Signed defect of the candidate d-invariant against the S^3 formula:

        candidate - d(Y) - ((2i-n)^2 - n)/(4n) + 2 max(V_i, V_{n-i}).

    Zero means the candidate matches the S^3 value shifted by d(Y); the
    generalized bound constrains it to [-2 N_Y, 0].
    """
    lens = _lens_terms(inp.n)[inp.i]
    max_v = max(inp.v.at(inp.i), inp.v.at(inp.n - inp.i))
    return Fraction(candidate) - inp.d_y - lens + 2 * max_v


def niwu_bound_check(inp: SurgeryBoundInput, candidate: Rational) -> bool:
    """True iff the candidate satisfies -2 N_Y <= deficit <= 0."""
    deficit = niwu_bound_deficit(inp, candidate)
    return -2 * inp.n_y <= deficit <= 0
