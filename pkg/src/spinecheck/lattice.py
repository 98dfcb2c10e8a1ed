"""Definite-lattice oracle for d-invariants.

A negative-definite integral lattice (Z^r, G) is the intersection form
of a plumbed 4-manifold; each spin^c structure on the boundary
corresponds to a coset of characteristic covectors mod 2 G Z^r, and

    max over the coset of  (c^T G^{-1} c + r) / 4

is a lower bound for the boundary's d-invariant in that structure.  On
linear chains of -2-framings the bound is known to be sharp, which turns
this module into a cross-check of the closed lens-space formula through
a computational path that shares nothing with it.  (In the surgery
convention used throughout this package -- L(n,1) is n-surgery on the
unknot -- the chain's boundary is +L(n,1): the chain is -n/(n-1)-surgery
on the unknot and -L(n, n-1) = L(n,1).)  Any other Gram matrix is served
as a bound only.

The maximization is exact: substituting c = c0 + 2 G x reduces it to
minimizing the ellipsoid form (x - x*)^T (-G) (x - x*) over integer
vectors, which is enumerated by an exact LDL^T branch-and-bound
(rational pivots, integer-sqrt interval bounds).  The recursion visits
exactly the lattice points inside a certified ellipsoid; a configurable
budget caps the number of visited candidates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .intmat import (
    column_triangularize,
    frac_solve,
    ldl_decomposition,
    mat_vec,
    reduce_mod_column_lattice,
)

DEFAULT_BUDGET = 10**6


class SearchOverflow(RuntimeError):
    """The certified search region holds more points than the budget."""

    def __init__(self, budget: int):
        super().__init__(f"lattice point budget of {budget} exhausted")
        self.budget = budget


@dataclass(frozen=True)
class IntLattice:
    """Negative-definite integral lattice given by its Gram matrix."""

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        r = len(g)
        if r < 1 or any(len(row) != r for row in g):
            raise ValueError("Gram matrix must be square and nonempty")
        if any(g[i][j] != g[j][i] for i in range(r) for j in range(r)):
            raise ValueError("Gram matrix must be symmetric")
        # positive pivots of -G certify sign-alternating principal minors
        try:
            ldl_decomposition([[-x for x in row] for row in g])
        except ValueError:
            raise ValueError("Gram matrix is not negative definite")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def is_characteristic(self, c) -> bool:
        """c pairs with every basis vector like its self-intersection."""
        return len(c) == self.rank and all(
            (ci - gii) % 2 == 0 for ci, gii in zip(c, (row[i] for i, row in enumerate(self.gram)))
        )


@dataclass(frozen=True)
class CharCoset:
    """A characteristic covector representing its class mod 2 G Z^r,
    stored as the integer vector of pairings with the basis."""

    representative: tuple[int, ...]


def chain_lattice(n: int) -> IntLattice:
    """Linear chain of n-1 vertices framed -2; the boundary of the
    associated plumbing is the lens space L(n, 1) and |det| = n."""
    if n < 2:
        raise ValueError(f"chain lattice needs n >= 2, got {n}")
    r = n - 1
    gram = tuple(
        tuple(-2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(r))
        for i in range(r)
    )
    return IntLattice(gram)


def char_cosets(lattice: IntLattice) -> list[CharCoset]:
    """All |det G| classes of characteristic covectors mod 2 G Z^r.

    The class representatives are diag(G) + 2t with t running over the
    canonical box of a triangularized basis of the column lattice of G,
    enumerated in lexicographic order (deterministic).
    """
    g = [list(row) for row in lattice.gram]
    r = lattice.rank
    h = column_triangularize(g)
    diag = [g[i][i] for i in range(r)]
    # the box 0 <= t_k < h[k][k] is a canonical transversal of Z^r / G Z^r
    # (reduce_mod_column_lattice fixes exactly these vectors)
    reps = []

    def rec(k, t):
        if k == r:
            assert reduce_mod_column_lattice(t, h) == t
            reps.append(CharCoset(tuple(d + 2 * x for d, x in zip(diag, t))))
            return
        for x in range(h[k][k]):
            rec(k + 1, t + [x])

    rec(0, [])
    return reps


def _floor_plus_sqrt(u: Fraction, t: Fraction) -> int:
    """floor(u + sqrt(t)) for rationals, t >= 0, exactly."""
    s_hi = Fraction(math.isqrt(t.numerator * t.denominator) + 1, t.denominator)
    h = math.floor(u + s_hi)
    while h > u and (h - u) ** 2 > t:
        h -= 1
    return h


def _ceil_minus_sqrt(u: Fraction, t: Fraction) -> int:
    """ceil(u - sqrt(t)) for rationals, t >= 0, exactly."""
    s_hi = Fraction(math.isqrt(t.numerator * t.denominator) + 1, t.denominator)
    l = math.ceil(u - s_hi)
    while l < u and (u - l) ** 2 > t:
        l += 1
    return l


def _min_ellipsoid(a, xstar, budget):
    """Minimize (x - x*)^T A (x - x*) over integer x, A positive definite.

    Seeds the incumbent with the componentwise rounding of x*, then
    enumerates every integer point of the ellipsoid at the incumbent
    level via the LDL^T recursion.  Returns the exact minimum.
    """
    r = len(a)
    lower, diag = ldl_decomposition(a)

    def form(x):
        z = [Fraction(xi) - si for xi, si in zip(x, xstar)]
        az = mat_vec(a, z)
        return sum(zi * wi for zi, wi in zip(z, az))

    seed = [math.floor(s + Fraction(1, 2)) for s in xstar]
    best = form(seed)
    if best == 0:
        return best
    nodes = 0
    z = [Fraction(0)] * r

    def rec(k, partial):
        nonlocal best, nodes
        if k < 0:
            if partial < best:
                best = partial
            return
        c_k = sum(lower[i][k] * z[i] for i in range(k + 1, r))
        rem = (best - partial) / diag[k]
        if rem < 0:
            return
        u = xstar[k] - c_k
        lo = _ceil_minus_sqrt(u, rem)
        hi = _floor_plus_sqrt(u, rem)
        for xk in range(lo, hi + 1):
            nodes += 1
            if nodes > budget:
                raise SearchOverflow(budget)
            z[k] = xk - xstar[k]
            w = z[k] + c_k
            rec(k - 1, partial + diag[k] * w * w)
        z[k] = Fraction(0)

    rec(r - 1, Fraction(0))
    return best


def d_lower_bound(
    lattice: IntLattice, coset: CharCoset, budget: int = DEFAULT_BUDGET
) -> Fraction:
    """max (c^T G^{-1} c + rank) / 4 over the characteristic coset.

    Exact rational output; the denominator always divides 4 |det G|.
    Raises SearchOverflow when the certified enumeration would exceed
    the budget.
    """
    c0 = list(coset.representative)
    if not lattice.is_characteristic(c0):
        raise ValueError(f"{c0} is not characteristic for this Gram matrix")
    g = [list(row) for row in lattice.gram]
    a = [[-x for x in row] for row in g]
    # c = c0 + 2 G x turns the maximization into minimizing the ellipsoid
    # form mu(x) = (x - x*)^T (-G) (x - x*) with x* = (-G)^{-1} c0 / 2;
    # then max c^T G^{-1} c = -4 min mu.
    xstar = [v / 2 for v in frac_solve(a, c0)]
    mu = _min_ellipsoid(a, xstar, budget)
    return (lattice.rank - 4 * mu) / 4
