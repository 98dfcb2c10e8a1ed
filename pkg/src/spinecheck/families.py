"""Closed-form d-invariant profiles for the built-in manifold families.

Three families appear:

* L(n, 1), the lens space obtained by n-surgery on the unknot, with
  d(L(n,1), s_i) = ((2i - n)^2 - n) / (4n)  (Ozsvath-Szabo).

* Q_m, the circle bundle over RP^2 with Euler number m.  Doig computed
  its four d-invariants to be {(m+2)/4, (m-2)/4, 0, 0}.  H_1(Q_m) is
  Z/2 + Z/2 for m even and Z/4 for m odd, so only the odd case carries a
  cyclic labeling; the even case is kept purely as a raw multiset.

* M_p, the boundary of the homotopy-S^2 trace built from a Brieskorn
  homology sphere Y_p: a connected sum of Q_{-4p-3} with -Y_p.  Its four
  d-invariants are those of Q_{-4p-3} shifted by the even integer
  -d(Y_p); the value d(Y_p) enters only as a parametric even integer
  because no downstream verdict depends on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .dcore import DProfile, RawProfile


@dataclass(frozen=True)
class QmDescriptor:
    """Euler number m plus the homology type it forces."""

    m: int

    @property
    def h1_cyclic(self) -> bool:
        """True when H_1 = Z/4 (m odd); False for Z/2 + Z/2 (m even)."""
        return self.m % 2 != 0

    @property
    def h1_type(self) -> str:
        return "Z/4" if self.h1_cyclic else "Z/2+Z/2"


@dataclass(frozen=True)
class MpDescriptor:
    """Parameter p plus the parametric even integer standing in for d(Y_p)."""

    p: int
    d_yp: int = 0

    def __post_init__(self):
        if self.d_yp % 2 != 0:
            raise ValueError(
                f"d(Y_p) must be an even integer, got {self.d_yp}"
            )


def lens_n1_profile(n: int) -> DProfile:
    """d-invariants of L(n, 1): values[i] = ((2i - n)^2 - n) / (4n)."""
    if n < 1:
        raise ValueError(f"lens space L(n,1) needs n >= 1, got {n}")
    return DProfile(
        tuple(Fraction((2 * i - n) ** 2 - n, 4 * n) for i in range(n))
    )


def qm_profile(m: int) -> RawProfile:
    """The four d-invariants of Q_m as an unlabeled profile.

    For m odd the two nonzero values (m+2)/4 and (m-2)/4 must sit on the
    self-conjugate spin^c structures: their mod-2 residues are never 0,
    while the conjugate pair s_1, s_3 shares a value.  The ids are
    therefore the residues mod 4 (conj = negation) with the nonzero
    values at 0 and 2 -- the obstruction search enumerates both affine
    placements, so which of the two sits at 0 is not a commitment.

    For m even every spin^c structure is self-conjugate (H_1 is
    Z/2 + Z/2, all 2-torsion) and there is no cyclic structure to carry:
    the ids are opaque and conj is the identity.
    """
    plus = Fraction(m + 2, 4)
    minus = Fraction(m - 2, 4)
    zero = Fraction(0)
    if m % 2 != 0:
        return RawProfile(
            entries=((0, plus), (1, zero), (2, minus), (3, zero)),
            conj={0: 0, 1: 3, 2: 2, 3: 1},
        )
    return RawProfile(
        entries=(("a", plus), ("b", minus), ("c", zero), ("d", zero)),
        conj={"a": "a", "b": "b", "c": "c", "d": "d"},
    )


def mp_profile(d: MpDescriptor) -> DProfile:
    """Labeled profile of M_p = Q_{-4p-3} # (-Y_p).

    With D = d(Y_p) (even), the profile in the filling-induced labeling is

        p odd:  (-D - (4p+1)/4, -D, -D - (4p+5)/4, -D)
        p even: (-D - (4p+5)/4, -D, -D - (4p+1)/4, -D)

    The parity split records which self-conjugate structure the mod-2
    residues (3/4 at s_0, 7/4 at s_2) pin each nonzero value to.
    """
    base = Fraction(-d.d_yp)
    a = base - Fraction(4 * d.p + 1, 4)
    b = base - Fraction(4 * d.p + 5, 4)
    if d.p % 2 != 0:
        return DProfile((a, base, b, base))
    return DProfile((b, base, a, base))


def qkm_structure(k: int, m: int) -> tuple[int, bool]:
    """Second cohomology of the generalized bundle Q_{k,m}, obtained by
    (0, m+k)-surgery on the (2, 2k) torus link: order k^2, cyclic iff
    gcd(k, m) = 1."""
    if k < 2:
        raise ValueError(f"generalized family needs k >= 2, got {k}")
    return k * k, math.gcd(k, m) == 1


def qkm_profile(k: int, m: int):
    """d-invariants of Q_{k,m} for k > 2 are not implemented: no closed
    form is available here, only the qualitative fact that they grow
    roughly linearly in m.  Q_{2,m} is qm_profile."""
    if k == 2:
        return qm_profile(m)
    raise ValueError(
        f"no d-invariant formula implemented for Q_(k={k},m={m}); only the "
        "homological structure (qkm_structure) is available"
    )
