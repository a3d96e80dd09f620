import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltamat import (
    S1,
    S2,
    S4,
    S5,
    OutOfRange,
    SameElement,
    SetSystem,
    WouldBeEmpty,
    apply_sequence,
    contract,
    delete,
    dual,
    handle_slide,
    is_delta_matroid,
    make_set_system,
    minors,
    subset,
    twist,
)
from deltamat.setsystem import elements
from deltamat.transforms import MinorStep, all_instructions, apply_minor_steps, slide_toggles

import oracle
from strategies import set_systems, slide_args


def fam(n, *sets):
    return make_set_system(n, sets)


def test_twist_s2_by_1():
    expected = fam(3, (), (1,), (2,), (3,), (1, 2), (1, 3), (1, 2, 3))
    assert twist(S2, subset(1)) == expected


def test_twist_rejects_outside_set():
    with pytest.raises(OutOfRange):
        twist(S1, subset(4))


@given(set_systems())
def test_twist_by_empty_is_identity(s):
    assert twist(s, 0) == s


@given(set_systems(), st.data())
def test_twist_matches_definition(s, data):
    a = data.draw(st.integers(0, s.ground))
    expected = oracle.twist(oracle.as_sets(s), elements(a))
    assert oracle.as_sets(twist(s, a)) == expected


def test_dual_examples():
    assert dual(SetSystem(2, 1)) == fam(2, (1, 2))
    assert dual(S4) == fam(4, (1, 2, 3, 4), (3, 4), (2, 4), (2, 3), (1, 4), (1, 3), (1, 2))


@given(set_systems())
def test_dual_is_full_twist(s):
    assert dual(s) == twist(s, s.ground)
    assert dual(dual(s)) == s


def test_worked_slides(f_ex):
    assert handle_slide(f_ex, 2, 3) == fam(4, (), (1, 2), (2, 3), (3, 4), (1, 2, 3, 4))
    assert handle_slide(f_ex, 2, 1) == f_ex
    assert handle_slide(S1, 1, 2) == fam(3, (), (1, 2), (2, 3), (1, 2, 3))


def test_f12_follows_definition(f_ex):
    # the definition keeps {3,4}; toggles are {1,3} and {1,4}
    out = handle_slide(f_ex, 1, 2)
    assert len(out) == 8
    assert subset(3, 4) in out
    assert sorted(slide_toggles(f_ex, 1, 2)) == [subset(1, 3), subset(1, 4)]


def test_slide_with_empty_toggle_set():
    s = fam(3, (), (1,), (1, 3))
    assert handle_slide(s, 1, 2) == s


def test_slide_errors():
    with pytest.raises(SameElement):
        handle_slide(S1, 2, 2)
    with pytest.raises(OutOfRange):
        handle_slide(S1, 1, 4)
    with pytest.raises(OutOfRange):
        handle_slide(S1, 0, 1)


@given(slide_args())
def test_slide_matches_definition(args):
    s, a, b = args
    expected = oracle.slide(oracle.as_sets(s), s.n, a, b)
    assert oracle.as_sets(handle_slide(s, a, b)) == expected


@given(slide_args())
def test_slide_support(args):
    s, a, b = args
    diff = handle_slide(s, a, b).family ^ s.family
    am, bm = 1 << (a - 1), 1 << (b - 1)
    m = 0
    while diff:
        if diff & 1:
            assert m & am and not m & bm
        diff >>= 1
        m += 1


def test_delete_examples(f_ex):
    assert delete(S1, 3) == fam(2, (), (1, 2))
    # {}, {2,3}, {2,4}, {3,4} renumbered onto 1..3
    assert delete(f_ex, 1) == fam(3, (), (1, 2), (1, 3), (2, 3))


def test_contract_examples(f_ex):
    assert contract(S1, 3) == fam(2, (1,), (2,), (1, 2))
    # {1,2} and {1,2,3,4} lose 1: {2}, {2,3,4} renumbered
    assert contract(f_ex, 1) == fam(3, (1,), (1, 2, 3))
    full = fam(3, (1, 2, 3))
    assert contract(full, 2) == fam(2, (1, 2))


def test_minor_edges():
    with pytest.raises(WouldBeEmpty):
        delete(SetSystem(1, 1), 1)
    with pytest.raises(WouldBeEmpty):
        delete(fam(2, (1,), (1, 2)), 1)
    with pytest.raises(WouldBeEmpty):
        contract(fam(2, (), (2,)), 1)
    with pytest.raises(OutOfRange):
        delete(S1, 4)


@given(set_systems(min_n=2), st.data())
def test_minors_match_definition(s, data):
    e = data.draw(st.integers(1, s.n))
    sets = oracle.as_sets(s)
    for fn, ofn in ((delete, oracle.delete), (contract, oracle.contract)):
        expected = ofn(sets, e)
        if not expected:
            with pytest.raises(WouldBeEmpty):
                fn(s, e)
        else:
            assert oracle.as_sets(fn(s, e)) == expected


def test_minors_of_s1():
    found = {(m.n, m.family) for m, _ in minors(S1)}
    assert (S1.n, S1.family) in found
    d, c = delete(S1, 3), contract(S1, 3)
    assert (d.n, d.family) in found and (c.n, c.family) in found


def test_minors_one_element():
    s = SetSystem(1, 0b11)
    assert minors(s) == [(s, ())]


@given(set_systems(max_n=4))
@settings(max_examples=50)
def test_minor_witnesses_replay(s):
    out = minors(s)
    assert out[0] == (s, ())
    keys = [(m.n, m.family) for m, _ in out]
    assert len(keys) == len(set(keys))
    for m, steps in out:
        assert apply_minor_steps(s, steps) == m


@given(set_systems(max_n=4))
@settings(max_examples=50)
def test_minors_of_delta_matroid_are_delta_matroids(s):
    if not is_delta_matroid(s):
        return
    assert all(is_delta_matroid(m) for m, _ in minors(s))


def test_minor_steps_use_original_labels():
    steps = (MinorStep("delete", 1), MinorStep("contract", 3))
    expected = contract(delete(S4, 1), 2)
    assert apply_minor_steps(S4, steps) == expected


def test_apply_sequence_examples():
    w = apply_sequence(twist(S2, subset(1, 3)), [(2, 3), (1, 2)])
    assert w.result == fam(3, (), (2,), (3,), (2, 3), (1, 2, 3))
    assert not w.is_dm
    w = apply_sequence(S5, [(1, 3)])
    assert w.result == fam(4, (), (2, 3), (3, 4), (1, 2, 3, 4))
    assert not w.is_dm
    w = apply_sequence(S2, [])
    assert w.result == S2 and w.is_dm


@given(set_systems(min_n=2, max_n=4), st.data())
def test_apply_sequence_folds(s, data):
    seq = data.draw(st.lists(st.sampled_from(all_instructions(s.n)), max_size=3))
    cur = s
    for a, b in seq:
        cur = handle_slide(cur, a, b)
    w = apply_sequence(s, seq)
    assert w.result == cur
    assert w.is_dm == is_delta_matroid(cur)


def test_all_instructions():
    assert len(all_instructions(4)) == 12
    assert all_instructions(2) == [(1, 2), (2, 1)]
