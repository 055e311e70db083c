"""Bounded/core/permutation bijections, strips, and the rotation lemma."""

import itertools

import pytest

from affineschur.affine import (
    IndexSet,
    bruhat_leq,
    from_word,
    grassmannian_ball,
    identity,
    mul,
    weak_leq,
)
from affineschur.kcode import d_elem, rd, ri, sh
from affineschur.partitions import (
    CorePartition,
    KBoundedPartition,
    k_rectangle,
    kbounded_partitions,
    union_sort,
)
from affineschur.shapes import (
    WeakStrip,
    bounded_to_core,
    bounded_to_perm,
    core_action,
    core_to_bounded,
    is_weak_strip,
    is_weak_strip_parabolic,
    k_transpose,
    perm_to_bounded,
    perm_to_core,
    reading_word,
    setvalued_strips,
    shift_ft,
    strip_top,
    weak_strips,
)


def P(k, *parts):
    return KBoundedPartition(k, parts)


def test_partition_type_validation():
    with pytest.raises(ValueError):
        KBoundedPartition(3, (4, 1))
    with pytest.raises(ValueError):
        KBoundedPartition(3, (1, 2))
    with pytest.raises(ValueError):
        CorePartition(3, (4,))  # cell (1,1) has hook length 4
    CorePartition(3, (5, 2, 1))
    with pytest.raises(ValueError):
        union_sort(P(2, 1), P(3, 1))


def test_rectangle():
    assert k_rectangle(2, 3).parts == (2, 2)
    assert k_rectangle(1, 3).parts == (1, 1, 1)
    with pytest.raises(ValueError):
        k_rectangle(4, 3)
    assert union_sort(P(3), P(3, 2, 1)) == P(3, 2, 1)
    assert union_sort(P(3, 2, 2), P(3, 3, 1)).parts == (3, 2, 2, 1)


def test_figure_triple():
    lam = P(3, 3, 2, 1)
    assert reading_word(lam) == (2, 0, 3, 2, 1, 0)
    assert bounded_to_core(lam).parts == (5, 2, 1)
    assert bounded_to_perm(lam) == from_word(3, [2, 0, 3, 2, 1, 0])
    assert core_to_bounded(CorePartition(3, (5, 2, 1))) == lam
    assert perm_to_core(bounded_to_perm(lam)).parts == (5, 2, 1)


def test_core_to_bounded_examples():
    assert core_to_bounded(CorePartition(3, (4, 1))).parts == (3, 1)
    assert core_to_bounded(CorePartition(3, ())).parts == ()
    assert bounded_to_core(P(3, 2, 2, 2, 1, 1, 1)).parts == (5, 3, 3, 1, 1, 1)
    assert bounded_to_core(P(3)).parts == ()


def test_core_action_examples():
    assert core_action(0, CorePartition(3, (2, 1))).parts == (2, 2)
    assert core_action(2, CorePartition(3, (2, 1))).parts == (3, 1, 1)
    assert core_action(2, CorePartition(3, (1,))).parts == (1,)
    kappa = CorePartition(3, (5, 2, 1))
    for i in range(4):
        assert core_action(i, core_action(i, kappa)) == kappa  # involution


def test_perm_to_core_examples():
    assert perm_to_core(identity(3)).parts == ()
    assert perm_to_core(from_word(3, [0, 3, 1, 0])).parts == (2, 2)
    with pytest.raises(ValueError):
        perm_to_core(from_word(3, [1]))


def test_k_transpose():
    a, b = P(3, 3, 2, 2, 1, 1), P(3, 2, 2, 2, 1, 1, 1)
    assert k_transpose(a) == b and k_transpose(b) == a
    assert k_transpose(P(3)).parts == ()
    for k in (2, 3, 4):
        for lam in kbounded_partitions(k, 8):
            assert k_transpose(k_transpose(lam)) == lam


@pytest.mark.parametrize("k", [2, 3, 4])
def test_bijection_coherence(k):
    for lam in kbounded_partitions(k, 8):
        core = bounded_to_core(lam)
        assert core_to_bounded(core) == lam
        w = bounded_to_perm(lam)
        assert w.is_grassmannian() and w.length == lam.size
        assert perm_to_core(w) == core
        assert perm_to_bounded(w) == lam


def test_codes_of_grassmannian_elements():
    for k in (2, 3):
        for w in grassmannian_ball(k, 6):
            assert sh(rd(w)) == perm_to_bounded(w)
            assert sh(ri(w)) == k_transpose(sh(rd(w)))


def test_weak_strip_lists():
    lam = P(3, 3, 2, 1)
    expected = {0: [()], 1: [(1,), (3,)], 2: [(1, 2), (1, 3)], 3: [(1, 2, 3)]}
    for r, sets in expected.items():
        assert [A.sorted() for A in weak_strips(lam, r)] == sets
    with pytest.raises(ValueError):
        weak_strips(lam, 4)


def test_weak_strip_poset_covers():
    """Cover relations among the strip tops over (3,2,1) at k=3."""
    lam = P(3, 3, 2, 1)
    labels = [
        A for r in range(4) for A in weak_strips(lam, r)
    ]
    tops = {A.sorted(): mul(d_elem(A), bounded_to_perm(lam)) for A in labels}
    keys = sorted(tops, key=lambda a: (len(a), a))
    assert keys == [(), (1,), (3,), (1, 2), (1, 3), (1, 2, 3)]

    strong_covers = set()
    weak_covers = {}
    for a in keys:
        for b in keys:
            va, vb = tops[a], tops[b]
            if vb.length == va.length + 1 and bruhat_leq(va, vb):
                strong_covers.add((a, b))
                if weak_leq(va, vb, "left"):
                    quotient = mul(vb, va.inverse())
                    (letter,) = [i for i in range(4) if quotient == from_word(3, [i])]
                    weak_covers[(a, b)] = letter
    # inclusion covers within the six labels, with the edge letters shown
    assert weak_covers == {
        ((), (1,)): 1,
        ((), (3,)): 3,
        ((1,), (1, 3)): 3,
        ((3,), (1, 3)): 1,
        ((1,), (1, 2)): 2,
        ((1, 2), (1, 2, 3)): 3,
    }
    assert strong_covers - set(weak_covers) == {((1, 3), (1, 2, 3))}
    assert not weak_leq(tops[(1, 3)], tops[(1, 2, 3)], "left")


def test_weak_strip_criteria_cross_check():
    for k in (2, 3):
        for lam in kbounded_partitions(k, 5):
            for r in range(k + 1):
                for combo in itertools.combinations(range(k + 1), r):
                    A = IndexSet(k, frozenset(combo))
                    assert is_weak_strip(lam, A) == is_weak_strip_parabolic(lam, A)


def test_weak_strip_value_type():
    lam = P(3, 3, 2, 1)
    strip = WeakStrip.build(lam, IndexSet(3, frozenset({3})))
    assert strip.top == P(3, 3, 2, 2) and strip.size == 1
    with pytest.raises(ValueError):
        WeakStrip.build(lam, IndexSet(3, frozenset({0})))
    with pytest.raises(ValueError):
        WeakStrip(lam, IndexSet(3, frozenset({3})), lam)


def test_strip_tops():
    lam = P(3, 3, 2, 1)
    tops = {A.sorted(): strip_top(lam, A).parts for A in weak_strips(lam, 1)}
    assert tops == {(1,): (3, 2, 1, 1), (3,): (3, 2, 2)}


def test_setvalued_strips_examples():
    w = from_word(3, [3, 1, 0])
    got = {
        (A.sorted(), v.window) for A, v in setvalued_strips(w, 1)
    }
    assert got == {
        ((0,), from_word(3, [0, 3, 1, 0]).window),
        ((1,), w.window),
        ((2,), from_word(3, [2, 3, 1, 0]).window),
        ((3,), w.window),
    }
    for r in (1, 2, 3):
        pairs = setvalued_strips(identity(3), r)
        assert len(pairs) == 1
        A, v = pairs[0]
        assert A.sorted() == tuple(range(r))
        assert v == bounded_to_perm(P(3, r))
    with pytest.raises(ValueError):
        setvalued_strips(from_word(3, [1]), 1)
    with pytest.raises(ValueError):
        setvalued_strips(w, 0)


def test_setvalued_strip_tops_are_weak_strips():
    # the product of a set-valued strip is a weak strip of size <= r
    for lam in kbounded_partitions(3, 4):
        w = bounded_to_perm(lam)
        for r in range(1, 4):
            for A, v in setvalued_strips(w, r):
                assert weak_leq(w, v, "left")
                size = v.length - w.length
                assert size <= r
                witnesses = [
                    B
                    for B in map(
                        lambda c: IndexSet(3, frozenset(c)),
                        itertools.combinations(range(4), size),
                    )
                    if mul(d_elem(B), w) == v
                ]
                assert witnesses and all(is_weak_strip(lam, B) for B in witnesses)


def test_shift_ft():
    w = from_word(3, [2, 0, 3, 2, 1, 0])
    assert shift_ft(w, 0) == w
    assert shift_ft(identity(3), 2).is_identity()
    for k in (2, 3):
        for t in range(1, k + 1):
            rect = k_rectangle(t, k)
            w_rect = bounded_to_perm(rect)
            for lam in kbounded_partitions(k, 5):
                assert bounded_to_perm(union_sort(rect, lam)) == mul(
                    shift_ft(bounded_to_perm(lam), t), w_rect
                )


def test_rectangle_union_shifts_strips():
    for k in (2, 3):
        for t in range(1, k + 1):
            rect = k_rectangle(t, k)
            for lam in kbounded_partitions(k, 4):
                big = union_sort(rect, lam)
                for r in range(k + 1):
                    small = weak_strips(lam, r)
                    assert sorted(A.shift(t).sorted() for A in small) == sorted(
                        A.sorted() for A in weak_strips(big, r)
                    )
                    for A in small:
                        assert union_sort(rect, strip_top(lam, A)) == strip_top(
                            big, A.shift(t)
                        )


def test_monotone_codes_on_grassmannian_chains():
    for k in (2, 3):
        elems = grassmannian_ball(k, 6)
        for x in elems:
            cx, ix = rd(x), ri(x)
            for y in elems:
                if weak_leq(x, y, "left"):
                    assert rd(y).contains(cx)
                    assert ri(y).contains(ix)
