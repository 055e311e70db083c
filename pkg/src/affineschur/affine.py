"""Window-notation arithmetic and order theory for the affine symmetric group.

An element w of the affine symmetric group on k+1 letters is stored as the
window (w(1), ..., w(n)) with n = k+1; it extends to a bijection of the
integers through w(i+n) = w(i)+n, and the window sums to n(n+1)/2.  All
values are immutable and hashable, every operation is a pure function, and
memo tables are pure caches, so everything here is safe to use from
concurrent sweeps.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "AffinePermutation",
    "IndexSet",
    "ReducedWord",
    "BallCapExceeded",
    "identity",
    "simple",
    "from_word",
    "length",
    "mul",
    "inverse",
    "left_mul_s",
    "right_mul_s",
    "descents",
    "bruhat_leq",
    "weak_leq",
    "demazure",
    "psi_apply",
    "s_join_L",
    "meet_LS",
    "flip",
    "ball",
    "grassmannian_ball",
    "reduced_word",
    "longest_finite_element",
    "is_affine_reflection",
]


class BallCapExceeded(RuntimeError):
    """A length-ball enumeration grew past its configured element cap."""


class AffinePermutation:
    """Element of the affine symmetric group on k+1 letters, window notation.

    Equality and hashing use the window, which is a unique normal form.
    The Coxeter length is precomputed from the affine inversion formula
    sum_{i<j} |floor((w(j)-w(i))/n)|.
    """

    __slots__ = ("k", "window", "length", "_hash")

    def __init__(self, k: int, window: Iterable[int]):
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        n = k + 1
        win = tuple(int(x) for x in window)
        if len(win) != n:
            raise ValueError(f"window must have {n} entries, got {win}")
        if sum(win) != n * (n + 1) // 2:
            raise ValueError(f"window {win} does not sum to {n * (n + 1) // 2}")
        if len({x % n for x in win}) != n:
            raise ValueError(f"window {win} has repeated residues mod {n}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "window", win)
        ell = 0
        for i in range(n):
            wi = win[i]
            for j in range(i + 1, n):
                ell += abs((win[j] - wi) // n)
        object.__setattr__(self, "length", ell)
        object.__setattr__(self, "_hash", hash((k, win)))

    def __setattr__(self, name, value):
        raise AttributeError("AffinePermutation is immutable")

    def __call__(self, i: int) -> int:
        """Value w(i) for any integer i."""
        n = self.k + 1
        q, r = divmod(i - 1, n)
        return self.window[r] + q * n

    def __eq__(self, other):
        return (
            isinstance(other, AffinePermutation)
            and self.k == other.k
            and self.window == other.window
        )

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        return mul(self, other)

    def __repr__(self):
        return f"AffinePermutation(k={self.k}, window={self.window})"

    def is_identity(self) -> bool:
        return self.length == 0

    def is_grassmannian(self) -> bool:
        """True when the only possible right descent is 0 (increasing window)."""
        w = self.window
        return all(w[i] < w[i + 1] for i in range(len(w) - 1))

    def inverse(self) -> "AffinePermutation":
        return inverse(self)

    def as_dict(self) -> dict:
        return {"k": self.k, "window": list(self.window)}


@dataclass(frozen=True)
class IndexSet:
    """Proper subset of the residues {0, ..., k}, labelling d_A and u_A."""

    k: int
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(int(i) for i in self.members))
        if any(not 0 <= i <= self.k for i in self.members):
            raise ValueError(f"members {set(self.members)} out of range 0..{self.k}")
        if len(self.members) == self.k + 1:
            raise ValueError("the full residue set is not allowed")

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __contains__(self, i):
        return i in self.members

    def __iter__(self):
        return iter(self.sorted())

    def shift(self, t: int) -> "IndexSet":
        n = self.k + 1
        return IndexSet(self.k, frozenset((i + t) % n for i in self.members))

    def __repr__(self):
        return f"IndexSet(k={self.k}, {{{', '.join(map(str, self.sorted()))}}})"

    def as_dict(self) -> dict:
        return {"k": self.k, "set": list(self.sorted())}


@dataclass(frozen=True)
class ReducedWord:
    """Word over {0, ..., k} whose evaluation has length equal to its size."""

    k: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(i) for i in self.letters))
        if any(not 0 <= i <= self.k for i in self.letters):
            raise ValueError(f"letters {self.letters} out of range 0..{self.k}")
        if from_word(self.k, self.letters).length != len(self.letters):
            raise ValueError(f"word {self.letters} is not reduced")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


def _check_same_rank(u: AffinePermutation, v: AffinePermutation) -> None:
    if u.k != v.k:
        raise ValueError(f"rank mismatch: k={u.k} vs k={v.k}")


@functools.lru_cache(maxsize=None)
def identity(k: int) -> AffinePermutation:
    return AffinePermutation(k, range(1, k + 2))


@functools.lru_cache(maxsize=None)
def simple(k: int, i: int) -> AffinePermutation:
    """The generator s_i as a group element."""
    return right_mul_s(identity(k), i)


def left_mul_s(w: AffinePermutation, i: int) -> AffinePermutation:
    """s_i * w: swaps the values congruent to i and i+1 mod n."""
    n = w.k + 1
    if not 0 <= i <= w.k:
        raise ValueError(f"letter {i} out of range 0..{w.k}")
    r = i % n
    r1 = (i + 1) % n
    out = []
    for x in w.window:
        m = x % n
        if m == r:
            out.append(x + 1)
        elif m == r1:
            out.append(x - 1)
        else:
            out.append(x)
    return AffinePermutation(w.k, out)


def right_mul_s(w: AffinePermutation, i: int) -> AffinePermutation:
    """w * s_i: swaps the window positions i and i+1 (cyclically for i = 0)."""
    n = w.k + 1
    if not 0 <= i <= w.k:
        raise ValueError(f"letter {i} out of range 0..{w.k}")
    win = list(w.window)
    if i == 0:
        first, last = win[0], win[n - 1]
        win[0] = last - n
        win[n - 1] = first + n
    else:
        win[i - 1], win[i] = win[i], win[i - 1]
    return AffinePermutation(w.k, win)


def from_word(k: int, word: Iterable[int]) -> AffinePermutation:
    """Evaluate the product s_{word[0]} ... s_{word[m-1]}; no reducedness required."""
    w = identity(k)
    for a in word:
        w = right_mul_s(w, a)
    return w


def length(w: AffinePermutation) -> int:
    return w.length


def mul(u: AffinePermutation, v: AffinePermutation) -> AffinePermutation:
    """Composition of window functions, (uv)(i) = u(v(i))."""
    _check_same_rank(u, v)
    n = u.k + 1
    uw = u.window
    out = []
    for x in v.window:
        q, r = divmod(x - 1, n)
        out.append(uw[r] + q * n)
    return AffinePermutation(u.k, out)


def inverse(w: AffinePermutation) -> AffinePermutation:
    n = w.k + 1
    out = [0] * n
    for pos, x in enumerate(w.window, start=1):
        q, r = divmod(x - 1, n)
        out[r] = pos - q * n
    return AffinePermutation(w.k, out)


def descents(w: AffinePermutation, side: str = "right") -> frozenset[int]:
    """Indices i with w > w s_i (right) or w > s_i w (left)."""
    if side == "left":
        return descents(inverse(w), "right")
    if side != "right":
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    n = w.k + 1
    win = w.window
    out = {i for i in range(1, n) if win[i - 1] > win[i]}
    if win[n - 1] - n > win[0]:
        out.add(0)
    return frozenset(out)


@functools.lru_cache(maxsize=None)
def bruhat_leq(u: AffinePermutation, v: AffinePermutation) -> bool:
    """Strong (Bruhat) order comparison via the lifting property.

    Recursion: for s a left descent of v, u <= v iff min(u, su) <= sv.
    The exponential subword characterization is kept only as a test
    oracle; this memoized recursion is the production path.
    """
    _check_same_rank(u, v)
    if u.length > v.length:
        return False
    if u.length == v.length:
        return u == v
    i = min(descents(v, "left"))
    sv = left_mul_s(v, i)
    su = left_mul_s(u, i)
    return bruhat_leq(su if su.length < u.length else u, sv)


@functools.lru_cache(maxsize=None)
def weak_leq(u: AffinePermutation, v: AffinePermutation, side: str = "left") -> bool:
    """Weak order: u <=_L v iff l(v u^-1) + l(u) = l(v), and mirrored on the right."""
    _check_same_rank(u, v)
    if side == "left":
        return mul(v, inverse(u)).length + u.length == v.length
    if side == "right":
        return u.length + mul(inverse(u), v).length == v.length
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def reduced_word(w: AffinePermutation) -> ReducedWord:
    """Deterministic reduced word: repeatedly strip the smallest left descent."""
    letters = []
    x = w
    while not x.is_identity():
        i = min(descents(x, "left"))
        letters.append(i)
        x = left_mul_s(x, i)
    return ReducedWord(w.k, tuple(letters))


@functools.lru_cache(maxsize=None)
def demazure(x: AffinePermutation, y: AffinePermutation) -> AffinePermutation:
    """Demazure (0-Hecke) product x * y.

    Applies the letterwise action phi_s(z) = max(z, s z) along a reduced
    word of x, rightmost letter first; the result is independent of the
    word chosen.
    """
    _check_same_rank(x, y)
    z = y
    for i in reversed(reduced_word(x).letters):
        sz = left_mul_s(z, i)
        if sz.length > z.length:
            z = sz
    return z


@functools.lru_cache(maxsize=None)
def psi_apply(x: AffinePermutation, y: AffinePermutation, side: str = "left") -> AffinePermutation:
    """Anti-Demazure action: each letter of x replaces y by min(y, s y).

    The left action applies letters of a reduced word of x rightmost
    first; the right action multiplies by generators on the right,
    leftmost letter of x first.  The result only moves down in the
    corresponding weak order.
    """
    _check_same_rank(x, y)
    z = y
    if side == "left":
        for i in reversed(reduced_word(x).letters):
            sz = left_mul_s(z, i)
            if sz.length < z.length:
                z = sz
        return z
    if side == "right":
        for i in reduced_word(x).letters:
            zs = right_mul_s(z, i)
            if zs.length < z.length:
                z = zs
        return z
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def s_join_L(x: AffinePermutation, y: AffinePermutation) -> AffinePermutation:
    """Minimum of {z : x <= z >=_L y} under the strong order.

    Computed as psi^R applied to x along a reduced word of y^-1, then
    multiplied by y on the right.
    """
    _check_same_rank(x, y)
    return mul(psi_apply(inverse(y), x, "right"), y)


def meet_LS(x: AffinePermutation, y: AffinePermutation) -> AffinePermutation:
    """Maximum of {z : x >=_L z <= y} under the strong order."""
    _check_same_rank(x, y)
    z = psi_apply(inverse(y), x, "right")
    return mul(inverse(z), x)


def flip(z: AffinePermutation, x: AffinePermutation) -> AffinePermutation:
    """Interval flip x -> z x^-1, an anti-isomorphism [e,z]_L -> [e,z]_R."""
    _check_same_rank(z, x)
    if not weak_leq(x, z, "left"):
        raise ValueError("precondition violation: x is not <=_L z")
    return mul(z, inverse(x))


def ball(k: int, max_length: int, cap: int = 1_000_000) -> list[AffinePermutation]:
    """All elements of length <= max_length, sorted by (length, window).

    Breadth-first search by left multiplication; raises BallCapExceeded
    when more than `cap` elements would be produced.
    """
    if max_length < 0:
        raise ValueError(f"max_length must be >= 0, got {max_length}")
    seen = {identity(k)}
    frontier = [identity(k)]
    for _ in range(max_length):
        nxt = []
        for w in frontier:
            for i in range(k + 1):
                u = left_mul_s(w, i)
                if u.length == w.length + 1 and u not in seen:
                    seen.add(u)
                    if len(seen) > cap:
                        raise BallCapExceeded(
                            f"ball(k={k}, L={max_length}) exceeds cap={cap}"
                        )
                    nxt.append(u)
        frontier = nxt
    return sorted(seen, key=lambda w: (w.length, w.window))


def grassmannian_ball(k: int, max_length: int, cap: int = 1_000_000) -> list[AffinePermutation]:
    """All 0-dominant (affine Grassmannian) elements of length <= max_length."""
    return [w for w in ball(k, max_length, cap) if w.is_grassmannian()]


@functools.lru_cache(maxsize=None)
def longest_finite_element(k: int) -> AffinePermutation:
    """Longest element of the finite symmetric group inside, window reversed."""
    return AffinePermutation(k, range(k + 1, 0, -1))


def is_affine_reflection(t: AffinePermutation) -> bool:
    """True for the conjugates of generators: involutions moving two residues."""
    if t.is_identity() or mul(t, t) != identity(t.k):
        return False
    n = t.k + 1
    moved = [i for i in range(1, n + 1) if t(i) != i]
    return len(moved) == 2
