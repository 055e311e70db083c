"""The sweep harness itself: counters, witnesses, and small-rank runs."""

import pytest

from affineschur.affine import ball, from_word, identity
from affineschur.oracles import (
    JoinStatus,
    saturated_chain_exists,
    strong_join_in_ball,
    strong_meet,
    subset_chain_exists,
)
from affineschur.verify import (
    CheckResult,
    verify_factorization,
    verify_fibers,
    verify_order_props,
    verify_pieri_sum,
)


def test_check_result_bookkeeping():
    r = CheckResult("demo")
    r.check(True, a=1)
    r.check(False, a=2)
    r.count()
    assert r.instances == 3 and not r.ok
    assert r.failures == [{"a": 2}]
    blob = r.as_dict()
    assert blob["name"] == "demo" and blob["ok"] is False


@pytest.mark.parametrize(
    "fn,args",
    [
        (verify_order_props, (1, 4)),
        (verify_fibers, (1, 4)),
        (verify_pieri_sum, (1, 4)),
        (verify_factorization, (1, 4)),
    ],
)
def test_small_rank_sweeps(fn, args):
    for result in fn(*args):
        assert result.ok, result.as_dict()


def test_strong_meet_reports_missing_maximum():
    # common lower bounds {e, s0, s1} have two maximal members: no meet
    universe = ball(2, 6)
    s01 = from_word(2, [0, 1])
    s10 = from_word(2, [1, 0])
    assert strong_meet(s01, s10, universe) is None
    # two distinct generators share only the identity
    assert strong_meet(from_word(2, [0]), from_word(2, [1]), universe) == identity(2)


def test_join_certification_levels():
    universe = ball(2, 4)
    out = strong_join_in_ball(from_word(2, [0]), from_word(2, [1]), universe)
    assert isinstance(out, JoinStatus)
    # with a tight ball, a long pair stays uncertified rather than guessed
    tight = ball(2, 2)
    top = from_word(2, [0, 1])
    out = strong_join_in_ball(top, top, tight)
    assert not out.certified


def test_chain_helpers():
    universe = frozenset(ball(2, 3))
    e = identity(2)
    s010 = from_word(2, [0, 1, 0])
    assert saturated_chain_exists(e, s010, universe)
    assert not saturated_chain_exists(s010, e, universe)
    fam = {frozenset(), frozenset({0}), frozenset({0, 1})}
    assert subset_chain_exists(frozenset(), frozenset({0, 1}), fam)
    assert not subset_chain_exists(frozenset(), frozenset({1}), fam)
