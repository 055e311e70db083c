"""Bijections between bounded partitions, cores and Grassmannian elements.

The three incarnations of the same object: a k-bounded partition, its
(k+1)-core, and the 0-dominant affine permutation whose residue reading
word builds it.  Also: the residue action on cores, the k-transpose, weak
and set-valued strips, and the index-rotation automorphism.
"""

from __future__ import annotations

import functools
import itertools

from dataclasses import dataclass

from .affine import (
    AffinePermutation,
    IndexSet,
    demazure,
    from_word,
    longest_finite_element,
    mul,
    reduced_word,
)
from .kcode import d_elem
from .partitions import (
    CorePartition,
    KBoundedPartition,
    conjugate,
    k_rectangle,
    union_sort,
)

__all__ = [
    "WeakStrip",
    "reading_word",
    "core_to_bounded",
    "bounded_to_core",
    "bounded_to_perm",
    "core_action",
    "perm_to_core",
    "perm_to_bounded",
    "k_transpose",
    "k_rectangle",
    "union_sort",
    "is_weak_strip",
    "is_weak_strip_parabolic",
    "weak_strips",
    "strip_top",
    "setvalued_strips",
    "shift_ft",
]


def core_to_bounded(kappa: CorePartition) -> KBoundedPartition:
    """Row i of the bounded partition counts cells of hook length <= k."""
    k = kappa.k
    conj = conjugate(kappa.parts)
    rows = []
    for i, p in enumerate(kappa.parts):
        rows.append(sum(1 for j in range(p) if (p - j) + (conj[j] - i) - 1 <= k))
    return KBoundedPartition(k, tuple(rows))


def _residue(k: int, row: int, col: int) -> int:
    """Residue of the cell in 1-indexed (row, col)."""
    return (col - row) % (k + 1)


def core_action(i: int, kappa: CorePartition) -> CorePartition:
    """Add every addable corner of residue i, or else remove every removable one."""
    k = kappa.k
    if not 0 <= i <= k:
        raise ValueError(f"residue {i} out of range 0..{k}")
    parts = list(kappa.parts)
    nrows = len(parts)
    addable = []
    for r in range(1, nrows + 2):
        c = (parts[r - 1] if r <= nrows else 0) + 1
        if r > 1 and (parts[r - 2] if r - 1 <= nrows else 0) < c:
            continue
        if _residue(k, r, c) == i:
            addable.append(r)
    removable = []
    for r in range(1, nrows + 1):
        c = parts[r - 1]
        if r < nrows and parts[r] == c:
            continue
        if _residue(k, r, c) == i:
            removable.append(r)
    if addable and removable:
        raise RuntimeError(f"core {kappa!r} has residue-{i} corners of both kinds")
    if addable:
        for r in addable:
            if r <= nrows:
                parts[r - 1] += 1
            else:
                parts.append(1)
    elif removable:
        for r in removable:
            parts[r - 1] -= 1
        while parts and parts[-1] == 0:
            parts.pop()
    return CorePartition(k, tuple(parts))


def reading_word(lam: KBoundedPartition) -> tuple[int, ...]:
    """Residue reading word: shortest row first, right to left in each row."""
    k = lam.k
    word = []
    for r in range(len(lam.parts), 0, -1):
        for c in range(lam.parts[r - 1], 0, -1):
            word.append(_residue(k, r, c))
    return tuple(word)


@functools.lru_cache(maxsize=None)
def bounded_to_perm(lam: KBoundedPartition) -> AffinePermutation:
    """Evaluate the residue reading word; the result is 0-dominant."""
    w = from_word(lam.k, reading_word(lam))
    if w.length != lam.size:
        raise RuntimeError(f"reading word of {lam!r} is not reduced")
    return w


@functools.lru_cache(maxsize=None)
def perm_to_core(w: AffinePermutation) -> CorePartition:
    """Act on the empty core along a reduced word of a Grassmannian element."""
    if not w.is_grassmannian():
        raise ValueError(f"{w!r} is not affine Grassmannian")
    kappa = CorePartition(w.k, ())
    for i in reversed(reduced_word(w).letters):
        kappa = core_action(i, kappa)
    return kappa


def perm_to_bounded(w: AffinePermutation) -> KBoundedPartition:
    return core_to_bounded(perm_to_core(w))


def bounded_to_core(lam: KBoundedPartition) -> CorePartition:
    return perm_to_core(bounded_to_perm(lam))


def k_transpose(lam: KBoundedPartition) -> KBoundedPartition:
    """Conjugate the core and come back; an involution on bounded partitions."""
    return core_to_bounded(bounded_to_core(lam).conjugate())


@dataclass(frozen=True)
class WeakStrip:
    """A weak strip: top = d_A . base with the length increasing by |A|."""

    base: KBoundedPartition
    indices: IndexSet
    top: KBoundedPartition

    def __post_init__(self):
        if not is_weak_strip(self.base, self.indices):
            raise ValueError(f"{self.indices!r} is not a weak strip over {self.base!r}")
        if strip_top(self.base, self.indices) != self.top:
            raise ValueError(f"top {self.top!r} does not match d_A . {self.base!r}")

    @property
    def size(self) -> int:
        return len(self.indices)

    @classmethod
    def build(cls, base: KBoundedPartition, indices: IndexSet) -> "WeakStrip":
        return cls(base, indices, strip_top(base, indices))

    def as_dict(self) -> dict:
        return {
            "base": self.base.as_dict(),
            "A": list(self.indices.sorted()),
            "top": self.top.as_dict(),
        }


def is_weak_strip(lam: KBoundedPartition, A: IndexSet) -> bool:
    """d_A w_lam is a weak strip top iff it is length-additive and 0-dominant."""
    if lam.k != A.k:
        raise ValueError(f"rank mismatch: k={lam.k} vs k={A.k}")
    w = bounded_to_perm(lam)
    v = mul(d_elem(A), w)
    return v.length == w.length + len(A) and v.is_grassmannian()


def is_weak_strip_parabolic(lam: KBoundedPartition, A: IndexSet) -> bool:
    """Same predicate through the longest finite element: d_A (w w0) >=_L w w0.

    Multiplying by the longest element of the finite subgroup turns the
    0-dominance condition into plain length-additivity; kept alongside the
    descent test as a cross-check of the two characterizations.
    """
    if lam.k != A.k:
        raise ValueError(f"rank mismatch: k={lam.k} vs k={A.k}")
    wJ = mul(bounded_to_perm(lam), longest_finite_element(lam.k))
    return mul(d_elem(A), wJ).length == wJ.length + len(A)


def weak_strips(lam: KBoundedPartition, r: int) -> list[IndexSet]:
    """All index sets of weak strips of size r over lam, sorted."""
    if not 0 <= r <= lam.k:
        raise ValueError(f"need 0 <= r <= k, got r={r}, k={lam.k}")
    out = []
    for combo in itertools.combinations(range(lam.k + 1), r):
        A = IndexSet(lam.k, frozenset(combo))
        if is_weak_strip(lam, A):
            out.append(A)
    return sorted(out, key=lambda a: a.sorted())


def strip_top(lam: KBoundedPartition, A: IndexSet) -> KBoundedPartition:
    """Bounded partition of d_A . lam (caller guarantees a genuine strip)."""
    return perm_to_bounded(mul(d_elem(A), bounded_to_perm(lam)))


def setvalued_strips(
    w: AffinePermutation, r: int
) -> list[tuple[IndexSet, AffinePermutation]]:
    """All (A, d_A * w) with |A| = r and Grassmannian Demazure product.

    The same product may appear under several A; pairs are kept separate
    because the Pieri signs depend on |A| and on the length of the product.
    """
    if not w.is_grassmannian():
        raise ValueError(f"{w!r} is not affine Grassmannian")
    if not 1 <= r <= w.k:
        raise ValueError(f"need 1 <= r <= k, got r={r}, k={w.k}")
    out = []
    for combo in itertools.combinations(range(w.k + 1), r):
        A = IndexSet(w.k, frozenset(combo))
        v = demazure(d_elem(A), w)
        if v.is_grassmannian():
            out.append((A, v))
    return sorted(out, key=lambda av: av[0].sorted())


def shift_ft(w: AffinePermutation, t: int) -> AffinePermutation:
    """Image under the rotation automorphism s_i -> s_{i+t}; length-preserving."""
    if not 0 <= t <= w.k:
        raise ValueError(f"need 0 <= t <= k, got t={t}, k={w.k}")
    n = w.k + 1
    word = [(a + t) % n for a in reduced_word(w).letters]
    out = from_word(w.k, word)
    if out.length != w.length:
        raise RuntimeError(f"rotation by {t} did not preserve length of {w!r}")
    return out
