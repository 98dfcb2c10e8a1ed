"""Fundamental groups of Brieskorn spheres and coset enumeration.

A Brieskorn homology sphere S(p, q, r) with Seifert surgery data
(e; (p,p'), (q,q'), (r,r')) has fundamental group

    < x, y, z, h | h central, x^p h^p' = y^q h^q' = z^r h^r' = x y z h^e = 1 >

where x, y, z are meridians of the three exceptional surgery curves and
h is the fiber direction.  The core of the surgery solid torus of the
first leg -- the singular fiber of order p -- is represented by x^a h^b
for any a, b with |b p - a p'| = 1.

The computational content here: adjoin such a fiber word as a relator
and decide whether the quotient is trivial by Todd-Coxeter coset
enumeration (HLT-style relator scanning with a FIFO definition order and
a hard coset limit).  A closed one-coset table certifies that the fiber
normally generates; hitting the limit is reported as indeterminate, never
as failure.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .intmat import smith_diagonal

DEFAULT_COSET_LIMIT = 100_000


class NotCoprime(ValueError):
    """The multiplicities of a Seifert triple must be pairwise coprime."""


# ---------------------------------------------------------------------------
# words and presentations
#
# A word is a tuple of nonzero ints: letter +k is generator k-1, letter -k
# its inverse.
# ---------------------------------------------------------------------------


def free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def gen_power(gen: int, exp: int):
    """Word for (generator gen)^exp, gen given 1-based."""
    return (gen,) * exp if exp >= 0 else (-gen,) * (-exp)


def commutator(a: int, b: int):
    return (a, b, -a, -b)


@dataclass(frozen=True)
class Presentation:
    """Finite presentation: generator names plus freely reduced relators."""

    generators: tuple[str, ...]
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        ngens = len(self.generators)
        reduced = []
        for rel in self.relators:
            for letter in rel:
                if letter == 0 or abs(letter) > ngens:
                    raise ValueError(f"letter {letter} out of range in {rel}")
            reduced.append(free_reduce(rel))
        object.__setattr__(self, "relators", tuple(reduced))

    def adjoin(self, *words) -> "Presentation":
        """Quotient: same generators, extra relators."""
        return Presentation(self.generators, self.relators + tuple(words))

    def word_str(self, word) -> str:
        if not word:
            return "1"
        parts = []
        idx = 0
        while idx < len(word):
            letter = word[idx]
            run = 1
            while idx + run < len(word) and word[idx + run] == letter:
                run += 1
            name = self.generators[abs(letter) - 1]
            exp = run if letter > 0 else -run
            parts.append(name if exp == 1 else f"{name}^{exp}")
            idx += run
        return " ".join(parts)


def exponent_matrix(pres: Presentation):
    """Rows = relators, columns = generators, entries = signed letter counts."""
    ngens = len(pres.generators)
    rows = []
    for rel in pres.relators:
        row = [0] * ngens
        for letter in rel:
            row[abs(letter) - 1] += 1 if letter > 0 else -1
        rows.append(row)
    return rows


def abelianization_is_trivial(pres: Presentation) -> bool:
    """True iff the abelianized group is trivial: the Smith normal form
    of the exponent matrix has a unit for every generator."""
    divisors = smith_diagonal(exponent_matrix(pres))
    return len(divisors) == len(pres.generators) and all(
        d == 1 for d in divisors
    )


# ---------------------------------------------------------------------------
# Seifert data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeifertData:
    """Surgery description (e; (p,p'), (q,q'), (r,r')) of a Seifert
    homology sphere.

    The homology-sphere condition is the determinant identity
    |e p q r - (p' q r + p q' r + p q r')| = 1: this is the determinant
    of the abelianized relator matrix of the presentation above, so it
    holds exactly when that presentation has perfect abelianization.
    Either sign is accepted (swapping the orientation of the fibration
    does not affect any group-theoretic conclusion drawn here).
    """

    e: int
    legs: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        (p, p1), (q, q1), (r, r1) = self.legs
        for a, b in ((p, q), (p, r), (q, r)):
            if math.gcd(a, b) != 1:
                raise NotCoprime(f"multiplicities {a}, {b} share a factor")
        if min(p, q, r) < 1:
            raise ValueError("multiplicities must be positive")
        det = self.e * p * q * r - (p1 * q * r + p * q1 * r + p * q * r1)
        if abs(det) != 1:
            raise ValueError(
                f"not a homology sphere: determinant {det} is not +-1"
            )


def seifert_data(p: int, q: int, r: int) -> SeifertData:
    """Canonical Seifert data for S(p, q, r) by modular inverses:
    p' = (qr)^-1 mod p (and cyclically), normalized to 0 <= p' < p,
    0 <= q' < q, 0 <= r' < r.  Since p'qr + pq'r + pqr' is then 1 mod
    pqr, the integer e = (p'qr + pq'r + pqr' - 1)/(pqr) makes the
    determinant identity hold with value -1."""
    if min(p, q, r) < 1:
        raise ValueError("multiplicities must be positive")
    for a, b in ((p, q), (p, r), (q, r)):
        if math.gcd(a, b) != 1:
            raise NotCoprime(f"multiplicities {a}, {b} share a factor")
    p1 = pow(q * r % p, -1, p) if p > 1 else 0
    q1 = pow(p * r % q, -1, q) if q > 1 else 0
    r1 = pow(p * q % r, -1, r) if r > 1 else 0
    s = p1 * q * r + p * q1 * r + p * q * r1
    assert (s - 1) % (p * q * r) == 0
    e = (s - 1) // (p * q * r)
    return SeifertData(e=e, legs=((p, p1), (q, q1), (r, r1)))


_GEN_X, _GEN_Y, _GEN_Z, _GEN_H = 1, 2, 3, 4


def brieskorn_presentation(s: SeifertData) -> Presentation:
    """The four-generator presentation above, with centrality of h spelled
    out as three commutator relators so the enumerator stays generic."""
    (p, p1), (q, q1), (r, r1) = s.legs
    return Presentation(
        generators=("x", "y", "z", "h"),
        relators=(
            commutator(_GEN_X, _GEN_H),
            commutator(_GEN_Y, _GEN_H),
            commutator(_GEN_Z, _GEN_H),
            gen_power(_GEN_X, p) + gen_power(_GEN_H, p1),
            gen_power(_GEN_Y, q) + gen_power(_GEN_H, q1),
            gen_power(_GEN_Z, r) + gen_power(_GEN_H, r1),
            (_GEN_X, _GEN_Y, _GEN_Z) + gen_power(_GEN_H, s.e),
        ),
    )


def fiber_word(s: SeifertData, leg: int):
    """Word x^a h^b (in the chosen leg's meridian) representing that
    leg's singular fiber: |b p - a p'| = 1, with a minimal nonnegative
    and the +1 solution preferred at equal a."""
    if leg not in (1, 2, 3):
        raise ValueError(f"leg must be 1, 2 or 3, got {leg}")
    p, p1 = s.legs[leg - 1]
    gen = (_GEN_X, _GEN_Y, _GEN_Z)[leg - 1]
    for a in range(p + 1):
        for sign in (1, -1):
            if (a * p1 + sign) % p == 0:
                b = (a * p1 + sign) // p
                return gen_power(gen, a) + gen_power(_GEN_H, b)
    raise ValueError(f"leg ({p}, {p1}) admits no fiber word")  # unreachable


# ---------------------------------------------------------------------------
# Todd-Coxeter
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CosetResult:
    """Either a closed enumeration (complete=True, cosets = subgroup
    index, table = the action of each generator column on the cosets) or
    an overflow (complete=False, cosets = the limit that was hit)."""

    complete: bool
    cosets: int
    table: tuple[tuple[int, ...], ...] | None = None


class _LimitReached(Exception):
    pass


def todd_coxeter(
    pres: Presentation, subgroup_words=(), limit: int = DEFAULT_COSET_LIMIT
) -> CosetResult:
    """Enumerate cosets of the subgroup generated by subgroup_words.

    HLT strategy: cosets are processed in definition (FIFO) order; every
    relator is scanned at every live coset, filling undefined entries;
    remaining holes are filled afterwards so a closed table is complete.
    Coincidences are handled by the standard queue-and-rewire procedure.
    The result is deterministic.  Enumeration aborts with an Overflow
    result as soon as more than `limit` cosets have been defined.
    """
    if limit < 1:
        raise ValueError(f"coset limit must be positive, got {limit}")
    ngens = len(pres.generators)
    ncols = 2 * ngens

    def col(letter):
        return 2 * (letter - 1) if letter > 0 else -2 * letter - 1

    table = [[None] * ncols]
    rep = [0]
    defined = 1

    def find(c):
        root = c
        while rep[root] != root:
            root = rep[root]
        while rep[c] != root:
            rep[c], c = root, rep[c]
        return root

    def define(a, x):
        nonlocal defined
        if defined >= limit:
            raise _LimitReached
        b = len(table)
        table.append([None] * ncols)
        rep.append(b)
        table[a][x] = b
        table[b][x ^ 1] = a
        defined += 1
        return b

    pending = deque()

    def merge(a, b):
        a, b = find(a), find(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        rep[b] = a
        pending.append(b)

    def coincidence(a, b):
        merge(a, b)
        while pending:
            dead = pending.popleft()
            for x in range(ncols):
                target = table[dead][x]
                if target is None:
                    continue
                table[target][x ^ 1] = None
                mu, nu = find(dead), find(target)
                if table[mu][x] is not None:
                    merge(nu, table[mu][x])
                elif table[nu][x ^ 1] is not None:
                    merge(mu, table[nu][x ^ 1])
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(a, word):
        f, i = a, 0
        b, j = a, len(word) - 1
        while True:
            while i <= j:
                nxt = table[f][col(word[i])]
                if nxt is None:
                    break
                f = find(nxt)
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i:
                nxt = table[b][col(-word[j])]
                if nxt is None:
                    break
                b = find(nxt)
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][col(word[i])] = b
                table[b][col(-word[i])] = f
                return
            define(f, col(word[i]))

    try:
        for word in subgroup_words:
            scan_and_fill(0, free_reduce(word))
        alpha = 0
        while alpha < len(table):
            if find(alpha) != alpha:
                alpha += 1
                continue
            for word in pres.relators:
                scan_and_fill(alpha, word)
                if find(alpha) != alpha:
                    break
            if find(alpha) == alpha:
                for x in range(ncols):
                    if table[alpha][x] is None:
                        define(alpha, x)
            alpha += 1
    except _LimitReached:
        return CosetResult(complete=False, cosets=limit)

    live = [c for c in range(len(table)) if find(c) == c]
    index = {c: k for k, c in enumerate(live)}
    action = tuple(
        tuple(index[find(table[c][x])] for x in range(ncols)) for c in live
    )
    return CosetResult(complete=True, cosets=len(live), table=action)


def normal_generation_check(
    p: int, q: int, r: int, leg: int, limit: int = DEFAULT_COSET_LIMIT
):
    """Does the chosen singular fiber normally generate pi_1(S(p,q,r))?

    Returns True when the quotient by the fiber word enumerates to the
    trivial group, False when it closes with more than one coset, and
    None (indeterminate) when the enumeration overflows the limit.
    """
    data = seifert_data(p, q, r)
    quotient = brieskorn_presentation(data).adjoin(fiber_word(data, leg))
    result = todd_coxeter(quotient, (), limit)
    if not result.complete:
        return None
    return result.cosets == 1
