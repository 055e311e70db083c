"""Structure of weak strips and fibers of the Demazure action.

For a fixed u, the families of index sets A with d_A u >=_L u (the plus
side) and with d_A^{-1} u <=_L u (the minus side) are closed under
intersection, and under union as long as the union stays proper.  The
fiber of the Demazure action of d_A over u is labelled by subsets of A
and always forms a full interval in the boolean lattice.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .affine import (
    AffinePermutation,
    IndexSet,
    bruhat_leq,
    demazure,
    inverse,
    meet_LS,
    mul,
    reduced_word,
)
from .kcode import d_elem, first_row, ri
from .partitions import KBoundedPartition
from .shapes import bounded_to_core, is_weak_strip, strip_top

__all__ = [
    "ZSets",
    "Fiber",
    "z_sets",
    "strips_meet",
    "forbidden_index",
    "minus_forbidden_indices",
    "fiber_X",
    "fiber_Y",
    "find_A0",
    "signed_fiber_table",
]


def _proper_subsets(k: int) -> list[frozenset[int]]:
    out = []
    for r in range(k + 1):
        out.extend(
            frozenset(c) for c in itertools.combinations(range(k + 1), r)
        )
    return out


def _assert_family_closure(name: str, fam: frozenset[frozenset[int]], k: int) -> None:
    full = frozenset(range(k + 1))
    for A in fam:
        for B in fam:
            if A & B not in fam:
                raise RuntimeError(f"{name} not closed under intersection: {A}, {B}")
            u = A | B
            if u != full and u not in fam:
                raise RuntimeError(f"{name} not closed under proper union: {A}, {B}")


def _has_maximum(fam: frozenset[frozenset[int]]) -> bool:
    union = frozenset().union(*fam) if fam else frozenset()
    return union in fam


@dataclass(frozen=True)
class ZSets:
    """The index-set families attached to u.

    plus: A with d_A u >=_L u.  minus: A with d_A^{-1} u <=_L u.
    plus_grassmannian: weak-strip labels, i.e. plus with a 0-dominant top
    (only populated when u itself is 0-dominant).  Intersection/union
    closure is asserted on construction; the minus family and the
    Grassmannian plus family also carry a unique maximum.  The bare plus
    family has one exactly when the union of its members stays proper
    (near the identity it does not: every proper subset qualifies).
    """

    u: AffinePermutation
    plus: frozenset[frozenset[int]]
    minus: frozenset[frozenset[int]]
    plus_grassmannian: frozenset[frozenset[int]] | None

    def __post_init__(self):
        k = self.u.k
        _assert_family_closure("plus", self.plus, k)
        _assert_family_closure("minus", self.minus, k)
        if not _has_maximum(self.minus):
            raise RuntimeError(f"minus family of {self.u!r} has no maximum")
        if frozenset().union(*self.plus) != frozenset(range(k + 1)):
            if not _has_maximum(self.plus):
                raise RuntimeError(f"plus family of {self.u!r} has no maximum")
        if self.plus_grassmannian is not None:
            _assert_family_closure("plus_grassmannian", self.plus_grassmannian, k)
            if not _has_maximum(self.plus_grassmannian):
                raise RuntimeError(
                    f"grassmannian plus family of {self.u!r} has no maximum"
                )

    def index_sets(self, which: str) -> list[IndexSet]:
        fam = getattr(self, which)
        if fam is None:
            raise ValueError(f"{which} family was not computed for {self.u!r}")
        return sorted(
            (IndexSet(self.u.k, A) for A in fam), key=lambda a: (len(a), a.sorted())
        )

    def as_dict(self) -> dict:
        out = {
            "u": self.u.as_dict(),
            "plus": [sorted(A) for A in sorted(self.plus, key=lambda a: (len(a), sorted(a)))],
            "minus": [sorted(A) for A in sorted(self.minus, key=lambda a: (len(a), sorted(a)))],
        }
        if self.plus_grassmannian is not None:
            out["plus_grassmannian"] = [
                sorted(A)
                for A in sorted(self.plus_grassmannian, key=lambda a: (len(a), sorted(a)))
            ]
        return out


def z_sets(u: AffinePermutation) -> ZSets:
    """Enumerate the three families over all proper subsets of the residues."""
    k = u.k
    plus, minus, plus_g = set(), set(), set()
    grass = u.is_grassmannian()
    for members in _proper_subsets(k):
        A = IndexSet(k, members)
        dA = d_elem(A)
        up = mul(dA, u)
        if up.length == u.length + len(A):
            plus.add(members)
            if grass and up.is_grassmannian():
                plus_g.add(members)
        if mul(inverse(dA), u).length == u.length - len(A):
            minus.add(members)
    return ZSets(
        u,
        frozenset(plus),
        frozenset(minus),
        frozenset(plus_g) if grass else None,
    )


def strips_meet(lam: KBoundedPartition, A: IndexSet, B: IndexSet) -> KBoundedPartition:
    """Meet of two weak-strip tops over lam: the strip of the intersection."""
    if not (is_weak_strip(lam, A) and is_weak_strip(lam, B)):
        raise ValueError(f"{A!r} and {B!r} must both be weak strips over {lam!r}")
    return strip_top(lam, IndexSet(lam.k, A.members & B.members))


def forbidden_index(lam: KBoundedPartition) -> int:
    """The residue that never appears in a weak-strip index set over lam.

    It is the residue of the rightmost box in the first row of the core;
    the empty shape degenerates to k, matching its unique size-k strip
    d_{{0,...,k-1}} . empty.
    """
    core = bounded_to_core(lam)
    if not core.parts:
        return lam.k
    return (core.parts[0] - 1) % (lam.k + 1)


def minus_forbidden_indices(w: AffinePermutation) -> frozenset[int]:
    """Residues missing from every A with d_A^{-1} w <=_L w.

    The minus family is confined to the bottom row of the increasing code
    of w^{-1}; the complement of that row is returned in full because no
    single index is canonical here.
    """
    row = first_row(ri(inverse(w)), increasing=True)
    return frozenset(range(w.k + 1)) - row


@dataclass(frozen=True)
class Fiber:
    """Fiber of the Demazure action of d_A over u, stored by subset labels.

    members holds the B with d_A * (d_B^{-1} u) = u; the element behind a
    label is d_B^{-1} u.  A nonempty fiber is a full boolean interval
    [intersection of members, A], which is asserted on construction.
    """

    A: IndexSet
    u: AffinePermutation
    members: frozenset[frozenset[int]]

    def __post_init__(self):
        amem = self.A.members
        if any(not B <= amem for B in self.members):
            raise RuntimeError(f"fiber labels {self.members} escape {self.A!r}")
        if self.members:
            bottom = frozenset.intersection(*self.members)
            interval = {
                bottom | frozenset(extra)
                for r in range(len(amem - bottom) + 1)
                for extra in itertools.combinations(sorted(amem - bottom), r)
            }
            if self.members != frozenset(interval):
                raise RuntimeError(
                    f"fiber over {self.u!r} with A={self.A!r} is not the "
                    f"interval [{sorted(bottom)}, {sorted(amem)}]"
                )

    def elements(self) -> list[AffinePermutation]:
        return [
            mul(inverse(d_elem(IndexSet(self.A.k, B))), self.u)
            for B in sorted(self.members, key=lambda b: (len(b), sorted(b)))
        ]

    def bottom(self) -> frozenset[int] | None:
        return frozenset.intersection(*self.members) if self.members else None

    def as_dict(self) -> dict:
        return {
            "A": list(self.A.sorted()),
            "u": self.u.as_dict(),
            "members": [sorted(B) for B in sorted(self.members, key=lambda b: (len(b), sorted(b)))],
        }


@functools.lru_cache(maxsize=None)
def fiber_X(A: IndexSet, u: AffinePermutation) -> Fiber:
    """All labels B with d_A * (d_B^{-1} u) = u."""
    if A.k != u.k:
        raise ValueError(f"rank mismatch: k={A.k} vs k={u.k}")
    dA = d_elem(A)
    members = set()
    amem = sorted(A.members)
    for r in range(len(amem) + 1):
        for combo in itertools.combinations(amem, r):
            B = IndexSet(u.k, frozenset(combo))
            if demazure(dA, mul(inverse(d_elem(B)), u)) == u:
                members.add(B.members)
    return Fiber(A, u, frozenset(members))


def fiber_Y(A: IndexSet, u: AffinePermutation, w: AffinePermutation) -> Fiber:
    """The part of the fiber lying below w in the strong order."""
    if w.k != u.k:
        raise ValueError(f"rank mismatch: k={w.k} vs k={u.k}")
    big = fiber_X(A, u)
    members = frozenset(
        B
        for B in big.members
        if bruhat_leq(mul(inverse(d_elem(IndexSet(u.k, B))), u), w)
    )
    return Fiber(A, u, members)


def find_A0(u: AffinePermutation, w: AffinePermutation) -> IndexSet | None:
    """The unique A whose fiber below w is a single element, if any.

    Take the maximum m of {z : z <=_L u, z <= w}; when u m^{-1} is a
    cyclically decreasing element d_A, that A is the answer, otherwise
    no fiber below w is a singleton.
    """
    if not (u.is_grassmannian() and w.is_grassmannian()):
        raise ValueError("both arguments must be affine Grassmannian")
    m = meet_LS(u, w)
    c = mul(u, inverse(m))
    support = frozenset(reduced_word(c).letters)
    if len(support) != c.length or len(support) > u.k:
        return None
    A = IndexSet(u.k, support)
    if d_elem(A) != c:
        return None
    return A


def signed_fiber_table(
    u: AffinePermutation, w: AffinePermutation | None = None
) -> list[tuple[AffinePermutation, IndexSet, int]]:
    """Rows (v, A, sign) with d_A * v = u, optionally filtered by v <= w.

    The sign is (-1)^(|A| - (l(u) - l(v))), the one weighting the
    inhomogeneous Pieri rule.  Rows are sorted by (|A|, A, l(v), window).
    """
    rows = []
    for members in _proper_subsets(u.k):
        A = IndexSet(u.k, members)
        for B in fiber_X(A, u).members:
            v = mul(inverse(d_elem(IndexSet(u.k, B))), u)
            if w is not None and not bruhat_leq(v, w):
                continue
            sign = (-1) ** (len(A) - (u.length - v.length))
            rows.append((v, A, sign))
    rows.sort(key=lambda r: (len(r[1]), r[1].sorted(), r[0].length, r[0].window))
    return rows
