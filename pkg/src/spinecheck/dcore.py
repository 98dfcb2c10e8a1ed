"""Core data model for correction-term profiles.

A rational homology sphere Y with H_1(Y) cyclic of order n carries n
spin^c structures.  When Y bounds a four-manifold X with the homology of
S^2 whose generator has self-intersection n, the spin^c structures are
labeled s_0, ..., s_{n-1} with subscripts read mod n, conjugation acts by
s_i <-> s_{n-i}, and the correction terms d(Y, s_i) satisfy

    d(Y, s_i) = ((2i - n)^2 - n) / (4n)   (mod 2Z).

This module provides exact rational arithmetic (no floating point
anywhere), the labeled profile type DProfile, the unlabeled RawProfile
type used as input to the labeling search, and the mod-2 residue table
above.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

# All d-invariant values in this package are exact rationals.  The stdlib
# Fraction already guarantees lowest terms and a positive denominator.
Rational = Fraction


class ProfileError(ValueError):
    """Raised when profile data violates a structural invariant."""


def conj_index(i: int, n: int) -> int:
    """Conjugate spin^c index: i -> (n - i) mod n.  An involution on Z/n."""
    return (n - i) % n


def frac_mod2(q: Rational) -> Rational:
    """Canonical representative of q mod 2Z in the interval [0, 2)."""
    return q - 2 * (q / 2).__floor__()


@lru_cache(maxsize=None)
def residue_table(n: int) -> tuple[Rational, ...]:
    """Mod-2 residues forced on d(Y, s_i) by a homology-S^2 filling.

    Entry i is ((2i - n)^2 - n) / (4n) reduced mod 2Z into [0, 2).
    Requires n >= 1; the n = 0 (torsion-free) case has no such table.
    """
    if n < 1:
        raise ValueError(f"residue table needs order n >= 1, got {n}")
    return tuple(
        frac_mod2(Fraction((2 * i - n) ** 2 - n, 4 * n)) for i in range(n)
    )


def _check_denominator(value: Rational, n: int) -> None:
    # Every value arising here has denominator dividing 4n; asserted, not
    # assumed (arithmetic stays fully general).
    if (4 * n) % value.denominator != 0:
        raise ProfileError(
            f"denominator of {value} does not divide 4n = {4 * n}"
        )


@dataclass(frozen=True)
class DProfile:
    """Labeled d-invariant profile: values[i] = d(Y, s_i) for i in Z/n.

    Construction validates conjugation symmetry values[i] == values[-i]
    eagerly and rejects violations; silent symmetrization would mask data
    errors.
    """

    values: tuple[Rational, ...]

    def __post_init__(self):
        n = len(self.values)
        if n < 1:
            raise ProfileError("profile needs at least one value")
        vals = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        for i, v in enumerate(vals):
            _check_denominator(v, n)
            if v != vals[conj_index(i, n)]:
                raise ProfileError(
                    f"conjugation symmetry broken: values[{i}] = {v} but "
                    f"values[{conj_index(i, n)}] = {vals[conj_index(i, n)]}"
                )

    @property
    def n(self) -> int:
        return len(self.values)

    def value(self, i: int) -> Rational:
        """d-invariant at index i, with i read as an element of Z/n."""
        return self.values[i % self.n]

    def to_raw(self) -> "RawProfile":
        """Forget the labeling: ids are the residues 0..n-1 with the
        negation involution, so the cyclic torsor structure is kept."""
        n = self.n
        return RawProfile(
            entries=tuple((i, self.values[i]) for i in range(n)),
            conj={i: conj_index(i, n) for i in range(n)},
        )


def mirror(p: DProfile) -> DProfile:
    """Profile of the orientation reversal: d(-Y, s) = -d(Y, s)."""
    return DProfile(tuple(-v for v in p.values))


def shift_by_even(p: DProfile, e: int) -> DProfile:
    """Subtract an even integer from every value.

    Evenness keeps each value's mod-2 residue unchanged, so the shifted
    profile satisfies the same residue table; odd shifts are rejected.
    """
    if e % 2 != 0:
        raise ValueError(f"shift must be even to preserve mod-2 residues, got {e}")
    return DProfile(tuple(v - e for v in p.values))


@dataclass(frozen=True)
class RawProfile:
    """Unlabeled profile: a multiset of (id, value) pairs plus the
    conjugation involution on ids.

    This is the input form when the Z/n labeling of spin^c structures is
    not yet fixed.  When the ids are exactly the integers 0..n-1 and conj
    is negation mod n, the id set is a Z/n torsor and the labeling search
    may restrict to affine relabelings (see obstruct.enumerate_labelings).
    """

    entries: tuple[tuple[object, Rational], ...]
    conj: dict = field(compare=False)

    def __post_init__(self):
        n = len(self.entries)
        if n < 1:
            raise ProfileError(
                "empty profile: order-0 (torsion-free) boundaries are out of "
                "scope for this obstruction"
            )
        entries = tuple((k, Fraction(v)) for k, v in self.entries)
        object.__setattr__(self, "entries", entries)
        ids = [k for k, _ in entries]
        if len(set(ids)) != n:
            raise ProfileError("duplicate ids in raw profile")
        values = dict(entries)
        if set(self.conj) != set(ids) or set(self.conj.values()) != set(ids):
            raise ProfileError("conj must be a map from the id set to itself")
        for k in ids:
            if self.conj[self.conj[k]] != k:
                raise ProfileError(f"conj is not an involution at id {k!r}")
            if values[self.conj[k]] != values[k]:
                raise ProfileError(
                    f"value not conjugation-invariant at id {k!r}"
                )
        for _, v in entries:
            _check_denominator(v, n)

    @property
    def order(self) -> int:
        return len(self.entries)

    def value(self, key) -> Rational:
        for k, v in self.entries:
            if k == key:
                return v
        raise KeyError(key)

    @property
    def cyclic(self) -> bool:
        """True when the ids carry the Z/n group structure: ids are the
        residues 0..n-1 and conj is negation mod n."""
        n = self.order
        if {k for k, _ in self.entries} != set(range(n)):
            return False
        return all(self.conj[i] == conj_index(i, n) for i in range(n))


# ---------------------------------------------------------------------------
# Profile file format
#
# Plain text, one item per line, '#' starts a comment:
#
#   n <order>
#   <id> <value>        (n lines; value is an exact fraction a/b or integer)
#   conj <id1> <id2>    (raw profiles only: one line per involution orbit)
#   v: a,b,c            (optional companion V-sequence, comma separated)
#
# A file without conj lines is a labeled DProfile whose ids must be the
# indices 0..n-1.  Round-trips are bit-exact: values are written in lowest
# terms exactly as Fraction prints them.
# ---------------------------------------------------------------------------


def _parse_id(token: str):
    return int(token) if token.lstrip("+-").isdigit() else token


def parse_profile(text: str):
    """Parse the profile file format.

    Returns (profile, v) where profile is a DProfile or RawProfile and v
    is the optional companion V-sequence as a tuple of ints (or None).
    Raises ProfileError with a line number on malformed input.
    """
    n = None
    entries = []
    conj_pairs = []
    v_line = None
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("v:"):
                v_line = tuple(
                    int(tok) for tok in line[2:].replace(",", " ").split()
                )
            elif line.startswith("conj"):
                _, a, b = line.split()
                conj_pairs.append((_parse_id(a), _parse_id(b)))
            elif line.startswith("n "):
                n = int(line.split()[1])
            else:
                tok_id, tok_val = line.split()
                entries.append((_parse_id(tok_id), Fraction(tok_val)))
        except (ValueError, ZeroDivisionError) as exc:
            raise ProfileError(f"line {lineno}: cannot parse {raw_line!r}: {exc}")
    if n is None:
        raise ProfileError("missing 'n <order>' line")
    if len(entries) != n:
        raise ProfileError(f"expected {n} value lines, found {len(entries)}")
    if conj_pairs:
        conj = {}
        for a, b in conj_pairs:
            conj[a] = b
            conj[b] = a
        profile = RawProfile(entries=tuple(entries), conj=conj)
    else:
        ids = [k for k, _ in entries]
        if sorted(ids) != list(range(n)):
            raise ProfileError(
                "labeled profile must use ids 0..n-1 (add conj lines for a "
                "raw profile)"
            )
        values = dict(entries)
        profile = DProfile(tuple(values[i] for i in range(n)))
    return profile, v_line


def format_profile(profile, v=None) -> str:
    """Serialize a DProfile or RawProfile to the file format (bit-exact)."""
    lines = [f"n {profile.n if isinstance(profile, DProfile) else profile.order}"]
    if isinstance(profile, DProfile):
        lines.extend(f"{i} {v_}" for i, v_ in enumerate(profile.values))
    else:
        lines.extend(f"{k} {val}" for k, val in profile.entries)
        seen = set()
        for k, _ in profile.entries:
            if k in seen:
                continue
            other = profile.conj[k]
            seen.add(k)
            seen.add(other)
            lines.append(f"conj {k} {other}")
    if v is not None:
        lines.append("v: " + ",".join(str(x) for x in v))
    return "\n".join(lines) + "\n"
