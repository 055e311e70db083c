"""Cyclically decreasing elements and canonical k-code decompositions.

A k-code assigns a column height to each residue in {0, ..., k}, with at
least one empty column.  Reading the rows of its bottom-justified cylinder
diagram (residue of a box in column i, row j being i-j for the decreasing
convention, j-i for the increasing one) gives the unique maximal
decomposition of an affine permutation into cyclically decreasing
(respectively increasing) factors.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .affine import (
    AffinePermutation,
    IndexSet,
    identity,
    inverse,
    mul,
    right_mul_s,
)
from .partitions import KBoundedPartition

__all__ = [
    "KCode",
    "cyclically_decreasing_word",
    "d_elem",
    "u_elem",
    "rd",
    "ri",
    "sh",
    "code_rows",
    "eval_code",
    "first_row",
]


@dataclass(frozen=True)
class KCode:
    """Column heights indexed by the residues 0..k; at least one is zero."""

    k: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != self.k + 1:
            raise ValueError(f"need {self.k + 1} values, got {self.values}")
        if any(v < 0 for v in self.values):
            raise ValueError(f"negative column height in {self.values}")
        if 0 not in self.values:
            raise ValueError(f"a k-code needs an empty column: {self.values}")

    @property
    def size(self) -> int:
        return sum(self.values)

    def contains(self, other: "KCode") -> bool:
        return all(a >= b for a, b in zip(self.values, other.values))

    def __repr__(self):
        return f"KCode(k={self.k}, values={self.values})"

    def as_dict(self) -> dict:
        return {"k": self.k, "values": list(self.values)}


def cyclically_decreasing_word(A: IndexSet) -> tuple[int, ...]:
    """One cyclically decreasing word for A: each cyclic run read downward.

    The runs of consecutive residues in A commute with each other, so any
    concatenation order gives the same group element; runs are emitted in
    the order they are met walking up from just past a missing residue.
    """
    if not A.members:
        return ()
    n = A.k + 1
    start = next(i for i in range(n) if i not in A.members)
    word: list[int] = []
    run: list[int] = []
    for step in range(1, n + 1):
        i = (start + step) % n
        if i in A.members:
            run.append(i)
        elif run:
            word.extend(reversed(run))
            run = []
    return tuple(word)


@functools.lru_cache(maxsize=None)
def _d_from_frozen(k: int, members: frozenset[int]) -> AffinePermutation:
    w = identity(k)
    for a in cyclically_decreasing_word(IndexSet(k, members)):
        w = right_mul_s(w, a)
    return w


def d_elem(A: IndexSet) -> AffinePermutation:
    """Cyclically decreasing element d_A; its length is |A|."""
    return _d_from_frozen(A.k, A.members)


def u_elem(A: IndexSet) -> AffinePermutation:
    """Cyclically increasing element u_A, the inverse of d_A."""
    return inverse(d_elem(A))


def _max_strippable_row(w: AffinePermutation, increasing: bool) -> frozenset[int]:
    """Largest A whose (in/de)creasing element splits off w on the right.

    Splitting off means l(w x^-1) = l(w) - |A| for x = u_A or d_A.  The
    maximal decomposition theory guarantees a unique such A of maximal
    size; a tie would mean the implementation is broken, so it aborts.
    """
    n = w.k + 1
    for r in range(w.k, 0, -1):
        hits = []
        for combo in itertools.combinations(range(n), r):
            A = IndexSet(w.k, frozenset(combo))
            x = u_elem(A) if increasing else d_elem(A)
            if mul(w, inverse(x)).length == w.length - r:
                hits.append(A.members)
        if len(hits) > 1:
            raise RuntimeError(
                f"ambiguous maximal row for {w!r}: {sorted(map(sorted, hits))}"
            )
        if hits:
            return hits[0]
    return frozenset()


def _decompose(w: AffinePermutation, increasing: bool) -> KCode:
    n = w.k + 1
    if w.is_identity():
        return KCode(w.k, (0,) * n)
    row = _max_strippable_row(w, increasing)
    x = u_elem(IndexSet(w.k, row)) if increasing else d_elem(IndexSet(w.k, row))
    rest = _decompose(mul(w, inverse(x)), increasing)
    # Stripping the bottom row shifts the remaining columns left by one.
    values = []
    for i in range(n):
        above = rest.values[(i - 1) % n]
        residue = i if not increasing else (-i) % n
        if above and residue not in row:
            raise RuntimeError(f"column {i} of {w!r} is not bottom-justified")
        values.append(above + (1 if residue in row else 0))
    return KCode(w.k, tuple(values))


def rd(w: AffinePermutation) -> KCode:
    """k-code of the maximal decomposition into cyclically decreasing factors."""
    return _decompose(w, increasing=False)


def ri(w: AffinePermutation) -> KCode:
    """k-code of the maximal decomposition into cyclically increasing factors."""
    return _decompose(w, increasing=True)


def code_rows(code: KCode, increasing: bool = False) -> list[IndexSet]:
    """Residue sets of the diagram rows, bottom row first."""
    n = code.k + 1
    rows = []
    for j in range(max(code.values, default=0)):
        residues = frozenset(
            ((i - j) if not increasing else (j - i)) % n
            for i in range(n)
            if code.values[i] > j
        )
        rows.append(IndexSet(code.k, residues))
    return rows


def eval_code(code: KCode, increasing: bool = False) -> AffinePermutation:
    """Product of the row elements, top row leftmost."""
    w = identity(code.k)
    for row in reversed(code_rows(code, increasing)):
        x = u_elem(row) if increasing else d_elem(row)
        w = mul(w, x)
    return w


def first_row(code: KCode, increasing: bool = False) -> frozenset[int]:
    """Residues of the bottom row of the diagram."""
    rows = code_rows(code, increasing)
    return rows[0].members if rows else frozenset()


def sh(code: KCode) -> KBoundedPartition:
    """Column-count shape: part j counts columns of height at least j."""
    parts = []
    for j in range(1, max(code.values, default=0) + 1):
        parts.append(sum(1 for v in code.values if v >= j))
    return KBoundedPartition(code.k, tuple(parts))
