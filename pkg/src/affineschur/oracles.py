"""Brute-force comparators for order-theoretic claims.

Everything here enumerates; nothing is clever.  Lower bounds in the strong
order live inside the length ball of the elements involved, so meets are
decided exactly.  Upper bounds are unbounded in an infinite group, so join
queries are answered relative to an explicit ball and report "not certified
in this ball" separately from a definite answer; callers assert claims only
on certified instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .affine import (
    AffinePermutation,
    bruhat_leq,
    from_word,
    reduced_word,
    weak_leq,
)

__all__ = [
    "subword_lower_set",
    "subword_bruhat_leq",
    "bruhat_lower_set",
    "strong_meet",
    "JoinStatus",
    "strong_join_in_ball",
    "is_least_upper_bound_in_ball",
    "weak_join_in_ball",
    "saturated_chain_exists",
    "subset_chain_exists",
]


def subword_lower_set(v: AffinePermutation) -> frozenset[AffinePermutation]:
    """All products of reduced subwords of one fixed reduced word of v."""
    word = reduced_word(v).letters
    out = set()
    for size in range(len(word) + 1):
        for positions in itertools.combinations(range(len(word)), size):
            u = from_word(v.k, [word[p] for p in positions])
            if u.length == size:
                out.add(u)
    return frozenset(out)


def subword_bruhat_leq(u: AffinePermutation, v: AffinePermutation) -> bool:
    """Exponential subword-property test; test oracle for bruhat_leq."""
    return u in subword_lower_set(v)


def bruhat_lower_set(
    v: AffinePermutation, universe: list[AffinePermutation]
) -> frozenset[AffinePermutation]:
    """Elements of the universe below v; complete when the universe holds ball(l(v))."""
    return frozenset(z for z in universe if z.length <= v.length and bruhat_leq(z, v))


def strong_meet(
    v: AffinePermutation,
    w: AffinePermutation,
    universe: list[AffinePermutation],
    lower=None,
) -> AffinePermutation | None:
    """Exact strong meet, or None when no maximum lower bound exists.

    The universe must contain every element of length <= min(l(v), l(w));
    lower bounds cannot escape it, so the answer is exact.  A callable
    `lower` may replace the per-call lower-set enumeration with a cache.
    """
    if lower is None:
        lower = lambda x: bruhat_lower_set(x, universe)
    common = lower(v) & lower(w)
    top_len = max(z.length for z in common)
    tops = [z for z in common if z.length == top_len]
    if len(tops) != 1:
        return None
    m = tops[0]
    if all(bruhat_leq(z, m) for z in common):
        return m
    return None


@dataclass(frozen=True)
class JoinStatus:
    """Outcome of a ball-limited join search."""

    element: AffinePermutation | None
    certified: bool  # True: `element` (or its absence) is decided within the ball


def strong_join_in_ball(
    v: AffinePermutation,
    w: AffinePermutation,
    universe: list[AffinePermutation],
) -> JoinStatus:
    """Least common strong upper bound within the universe, if one exists there.

    When some common upper bound z lies strictly inside the ball, every
    candidate for the true join has length < radius and the search is
    meaningful; otherwise the query is reported as uncertified.
    """
    ubs = [z for z in universe if bruhat_leq(v, z) and bruhat_leq(w, z)]
    if not ubs:
        return JoinStatus(None, False)
    radius = max(z.length for z in universe)
    min_len = min(z.length for z in ubs)
    if min_len >= radius:
        return JoinStatus(None, False)
    for m in (z for z in ubs if z.length == min_len):
        if all(bruhat_leq(m, z) for z in ubs):
            return JoinStatus(m, True)
    return JoinStatus(None, min_len < radius)


def is_least_upper_bound_in_ball(
    candidate: AffinePermutation,
    v: AffinePermutation,
    w: AffinePermutation,
    universe: list[AffinePermutation],
) -> bool:
    """No counterexample in the ball to `candidate` being the strong join."""
    if not (bruhat_leq(v, candidate) and bruhat_leq(w, candidate)):
        return False
    return all(
        bruhat_leq(candidate, z)
        for z in universe
        if bruhat_leq(v, z) and bruhat_leq(w, z)
    )


def weak_join_in_ball(
    v: AffinePermutation,
    w: AffinePermutation,
    universe: list[AffinePermutation],
    side: str = "left",
) -> AffinePermutation | None:
    """Least common weak upper bound within the universe, if the search closes.

    Returns the unique minimum of the common upper bounds in the universe
    provided one upper bound lies strictly inside; None when uncertified.
    """
    ubs = [z for z in universe if weak_leq(v, z, side) and weak_leq(w, z, side)]
    if not ubs:
        return None
    radius = max(z.length for z in universe)
    min_len = min(z.length for z in ubs)
    if min_len >= radius:
        return None
    for m in (z for z in ubs if z.length == min_len):
        if all(weak_leq(m, z, side) for z in ubs):
            return m
    return None


def saturated_chain_exists(
    x: AffinePermutation,
    y: AffinePermutation,
    allowed: frozenset[AffinePermutation],
) -> bool:
    """Saturated strong chain from x to y staying inside `allowed`.

    `allowed` must contain every allowed element with length between l(x)
    and l(y); the search walks covers one length step at a time.
    """
    if x == y:
        return True
    if not bruhat_leq(x, y):
        return False
    frontier = {x}
    for _ in range(y.length - x.length):
        frontier = {
            z
            for c in frontier
            for z in allowed
            if z.length == c.length + 1 and bruhat_leq(c, z) and bruhat_leq(z, y)
        }
        if not frontier:
            return False
    return y in frontier


def subset_chain_exists(
    A: frozenset[int], B: frozenset[int], family: set[frozenset[int]]
) -> bool:
    """Chain from A to B adding one index at a time, staying inside family."""
    if A == B:
        return True
    if not A <= B:
        return False
    frontier = {A}
    for _ in range(len(B) - len(A)):
        frontier = {
            c | {i} for c in frontier for i in B - c if (c | {i}) in family
        }
        if not frontier:
            return False
    return B in frontier
