"""Decision procedure for the PL-sphere / spine obstruction.

Let X be a smooth compact oriented 4-manifold with the homology of S^2,
whose H_2 generator has self-intersection n > 1, and let Y be its
boundary.  If the generator can be represented by a piecewise-linear
embedded sphere (as it is when X has an S^2 spine), then the boundary's
correction terms, labeled per the filling, satisfy for every i in Z/n

    d(Y, s_i) - d(Y, s_{i+1})  in
        { (n-2i-1)/n, (-n-2i-1)/n }   for 0 <= i <= (n-2)/2,
        { 0 }                          for n odd, i = (n-1)/2,
        { (n-2i-1)/n, (3n-2i-1)/n }   for n/2 <= i <= n-1,

and in particular every consecutive difference is at most (2n-1)/n in
absolute value.  These are exactly the differences realized by integer
surgeries on knots in S^3, which is what a PL sphere's neighborhood
provides.

Given only an unlabeled profile, the verdict procedure tries both
orientations of the hypothetical filling (positive- and
negative-definite generator square), enumerates every labeling
compatible with conjugation symmetry and the mod-2 residue constraints,
and checks each against the difference sets.  If no labeling under
either sign passes, no such X with a PL-sphere generator exists -- in
particular Y bounds no homotopy-S^2 manifold with a spine.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .dcore import (
    DProfile,
    RawProfile,
    Rational,
    conj_index,
    frac_mod2,
    residue_table,
)


class InapplicableError(ValueError):
    """The obstruction is stated only for orders n > 1."""


class Sign(enum.Enum):
    """Sign of the generator's self-intersection in the tested filling."""

    POSITIVE = "positive-definite"
    NEGATIVE = "negative-definite"


class Overall(enum.Enum):
    OBSTRUCTED = "Obstructed"
    NOT_OBSTRUCTED = "NotObstructed"
    INAPPLICABLE = "Inapplicable"


@dataclass(frozen=True)
class AllowedDiffs:
    """The admissible values of d(Y, s_i) - d(Y, s_{i+1})."""

    n: int
    i: int
    options: frozenset


@lru_cache(maxsize=None)
def _allowed_options(n: int) -> tuple[frozenset, ...]:
    out = []
    for i in range(n):
        first = Fraction(n - 2 * i - 1, n)
        if 2 * i <= n - 2:
            opts = frozenset((first, Fraction(-n - 2 * i - 1, n)))
        elif n % 2 == 1 and 2 * i == n - 1:
            opts = frozenset((Fraction(0),))
        else:  # n/2 <= i <= n-1
            opts = frozenset((first, Fraction(3 * n - 2 * i - 1, n)))
        out.append(opts)
    return tuple(out)


def allowed_differences(n: int, i: int) -> AllowedDiffs:
    """Difference set at index i; the three cases partition 0..n-1."""
    if n <= 1:
        raise InapplicableError(f"difference sets need order n > 1, got {n}")
    if not 0 <= i < n:
        raise ValueError(f"index {i} out of range for order {n}")
    return AllowedDiffs(n=n, i=i, options=_allowed_options(n)[i])


@dataclass(frozen=True)
class CheckResult:
    """Outcome of testing one labeled profile against the difference sets."""

    passed: bool
    violations: tuple[int, ...]


def check_labeled(p: DProfile) -> CheckResult:
    """Test every consecutive difference of a labeled profile, with the
    seam difference values[n-1] - values[0] read mod n."""
    n = p.n
    if n <= 1:
        raise InapplicableError(
            f"the obstruction says nothing for order {n} boundaries"
        )
    options = _allowed_options(n)
    diffs = [p.values[i] - p.values[(i + 1) % n] for i in range(n)]
    # telescoping sum around the full cycle; consistency of any Pass
    assert sum(diffs) == 0
    violations = tuple(i for i in range(n) if diffs[i] not in options[i])
    return CheckResult(passed=not violations, violations=violations)


def _units_mod(n: int):
    return [g for g in range(1, n + 1) if math.gcd(g, n) == 1]


def _affine_labelings(raw: RawProfile):
    """Labelings of a cyclic id set: l(i) = a + i*g with g a unit and the
    base point a of order dividing 2 (forced by l(-i) = -l(i))."""
    n = raw.order
    bases = [a for a in range(n) if (2 * a) % n == 0]
    for a in bases:
        for g in _units_mod(n):
            yield tuple((a + i * g) % n for i in range(n))


def _bijective_labelings(raw: RawProfile, residues, adjusted):
    """All conjugation-compatible bijections Z/n -> ids, residue-pruned.

    Index orbits under negation must be matched with id orbits of the
    same size: fixed indices take self-conjugate ids, index pairs take
    conjugate id pairs (in either orientation).
    """
    n = raw.order
    fixed_idx = [i for i in range(n) if conj_index(i, n) == i]
    pair_idx = [(i, n - i) for i in range(1, (n + 1) // 2) if i != n - i]
    ids = [k for k, _ in raw.entries]
    fixed_ids = [k for k in ids if raw.conj[k] == k]
    pair_ids = []
    seen = set()
    for k in ids:
        if k in seen or raw.conj[k] == k:
            continue
        seen.add(k)
        seen.add(raw.conj[k])
        pair_ids.append(k)
    if len(fixed_ids) != len(fixed_idx):
        return

    def fits(i, key):
        return frac_mod2(adjusted[key]) == residues[i]

    assignment = {}

    def assign_pairs(t, remaining):
        if t == len(pair_idx):
            yield dict(assignment)
            return
        i, j = pair_idx[t]
        for k in list(remaining):
            for a, b in ((k, raw.conj[k]), (raw.conj[k], k)):
                if fits(i, a) and fits(j, b):
                    assignment[i], assignment[j] = a, b
                    remaining.remove(k)
                    yield from assign_pairs(t + 1, remaining)
                    remaining.add(k)
                    del assignment[i], assignment[j]

    def assign_fixed(t, remaining):
        if t == len(fixed_idx):
            yield from assign_pairs(0, set(pair_ids))
            return
        i = fixed_idx[t]
        for k in list(remaining):
            if fits(i, k):
                assignment[i] = k
                remaining.remove(k)
                yield from assign_fixed(t + 1, remaining)
                remaining.add(k)
                del assignment[i]

    for mapping in assign_fixed(0, set(fixed_ids)):
        yield tuple(mapping[i] for i in range(n))


def enumerate_labelings(raw: RawProfile, sign: Sign) -> list[DProfile]:
    """All labeled profiles the raw data admits under the given sign.

    A labeling l: Z/n -> ids must satisfy l(-i) = conj(l(i)) and put a
    value of the right mod-2 residue at every index; under the
    negative-definite sign the values are negated first (testing the
    orientation reversal).  Cyclic id sets are restricted to affine
    relabelings; opaque id sets get the full conjugation-compatible
    search, which can only over-enumerate and therefore never produces a
    false obstruction.  Labelings yielding identical value vectors are
    collapsed; output is sorted for determinism.
    """
    n = raw.order
    flip = -1 if sign is Sign.NEGATIVE else 1
    adjusted = {k: flip * v for k, v in raw.entries}
    residues = residue_table(n)
    vectors = set()
    if raw.cyclic:
        for labeling in _affine_labelings(raw):
            vec = tuple(adjusted[k] for k in labeling)
            if all(frac_mod2(x) == r for x, r in zip(vec, residues)):
                vectors.add(vec)
    else:
        for labeling in _bijective_labelings(raw, residues, adjusted):
            vectors.add(tuple(adjusted[k] for k in labeling))
    return [DProfile(vec) for vec in sorted(vectors)]


@dataclass(frozen=True)
class LabelingOutcome:
    profile: DProfile
    result: CheckResult


@dataclass(frozen=True)
class BranchResult:
    """One orientation branch: either no labeling survives the residue
    congruences, or each surviving labeling is checked."""

    sign: Sign
    labelings: tuple[LabelingOutcome, ...]

    @property
    def congruence_excluded(self) -> bool:
        return not self.labelings

    @property
    def any_pass(self) -> bool:
        return any(out.result.passed for out in self.labelings)


@dataclass(frozen=True)
class SpineVerdict:
    order: int
    branches: tuple[BranchResult, ...]
    overall: Overall


def verdict(raw: RawProfile) -> SpineVerdict:
    """Run both orientation branches and combine.

    Obstructed certifies: no smooth compact oriented X with the homology
    of S^2 whose boundary realizes this profile has a generator
    represented by a PL sphere -- hence no S^2 spine.  Order 1 is out of
    the theorem's range and returns Inapplicable.
    """
    n = raw.order
    if n <= 1:
        return SpineVerdict(order=n, branches=(), overall=Overall.INAPPLICABLE)
    branches = []
    for sign in (Sign.POSITIVE, Sign.NEGATIVE):
        outcomes = tuple(
            LabelingOutcome(profile=p, result=check_labeled(p))
            for p in enumerate_labelings(raw, sign)
        )
        branches.append(BranchResult(sign=sign, labelings=outcomes))
    obstructed = not any(b.any_pass for b in branches)
    return SpineVerdict(
        order=n,
        branches=tuple(branches),
        overall=Overall.OBSTRUCTED if obstructed else Overall.NOT_OBSTRUCTED,
    )
