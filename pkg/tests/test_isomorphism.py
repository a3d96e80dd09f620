import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltamat import (
    S1,
    S2,
    S3,
    S4,
    S5,
    GroundSetTooLarge,
    SetSystem,
    SizeMismatch,
    apply_relabeling,
    are_isomorphic,
    canonical_form,
    subset,
    twist,
)
from deltamat.isomorphism import are_isomorphic_brute, invert

import oracle
from strategies import set_systems


def test_identity_relabeling():
    assert apply_relabeling(S5, (1, 2, 3, 4)) == S5


@pytest.mark.parametrize("p", list(permutations((1, 2, 3))))
def test_s1_is_symmetric(p):
    assert apply_relabeling(S1, p) == S1


def test_s3_symmetric_in_2_and_3():
    assert apply_relabeling(S3, (1, 3, 2)) == S3


def test_bad_relabelings():
    with pytest.raises(SizeMismatch):
        apply_relabeling(S1, (1, 2))
    with pytest.raises(SizeMismatch):
        apply_relabeling(S1, (1, 1, 2))


def test_are_isomorphic_examples():
    assert are_isomorphic(S1, S1) == (1, 2, 3)
    assert are_isomorphic(S1, S2) is None
    t = twist(S3, subset(2, 3))
    assert are_isomorphic(t, apply_relabeling(t, (1, 3, 2))) is not None
    assert are_isomorphic(S1, S4) is None


@given(set_systems(max_n=4), st.data())
def test_witness_maps_onto_target(s, data):
    p = data.draw(st.permutations(range(1, s.n + 1)))
    t = apply_relabeling(s, p)
    w = are_isomorphic(s, t)
    assert w is not None and apply_relabeling(s, w) == t
    assert apply_relabeling(t, invert(w)) == s


@given(set_systems(max_n=5), set_systems(max_n=5))
@settings(max_examples=300)
def test_pruning_matches_brute_force(s1, s2):
    if s1.n != s2.n:
        assert are_isomorphic(s1, s2) is None
        return
    assert are_isomorphic(s1, s2) == are_isomorphic_brute(s1, s2)


@given(set_systems(max_n=4), st.data())
@settings(max_examples=200)
def test_pruning_matches_brute_force_on_isomorphic_pairs(s, data):
    p = data.draw(st.permutations(range(1, s.n + 1)))
    t = apply_relabeling(s, p)
    assert are_isomorphic(s, t) == are_isomorphic_brute(s, t)
    assert (are_isomorphic(s, t) is not None) == oracle.iso_exists(oracle.as_sets(s), oracle.as_sets(t), s.n)


def test_equivalence_relation_spot_check():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 4)
        base = SetSystem(n, rng.randrange(1, 1 << (1 << n)))
        perms = [tuple(rng.sample(range(1, n + 1), n)) for _ in range(2)]
        a, b, c = base, apply_relabeling(base, perms[0]), apply_relabeling(base, perms[1])
        assert are_isomorphic(a, a) is not None
        assert (are_isomorphic(a, b) is None) == (are_isomorphic(b, a) is None)
        assert are_isomorphic(a, b) and are_isomorphic(b, c) and are_isomorphic(a, c)


@given(set_systems(max_n=5), st.data())
def test_canonical_form_invariant(s, data):
    p = data.draw(st.permutations(range(1, s.n + 1)))
    c = canonical_form(s)
    assert canonical_form(apply_relabeling(s, p)) == c
    assert canonical_form(c) == c
    assert are_isomorphic(s, c) is not None


def test_canonical_form_is_least_bitmap():
    for s in (S1, S2, S3, S4, S5, twist(S5, subset(1))):
        least = min(apply_relabeling(s, p).family for p in permutations(range(1, s.n + 1)))
        assert canonical_form(s).family == least


@given(set_systems(max_n=4), set_systems(max_n=4))
def test_canonical_forms_decide_isomorphism(s1, s2):
    same = s1.n == s2.n and canonical_form(s1) == canonical_form(s2)
    assert same == (are_isomorphic(s1, s2) is not None)


def test_canonical_s4_fixed_point():
    assert canonical_form(S4) == S4


def test_canonical_s5_random_relabelings():
    rng = random.Random(1)
    p1, p2 = (tuple(rng.sample(range(1, 5), 4)) for _ in range(2))
    assert canonical_form(apply_relabeling(S5, p1)) == canonical_form(apply_relabeling(S5, p2))


def test_canonical_size_cap():
    with pytest.raises(GroundSetTooLarge):
        canonical_form(SetSystem(9, 1))
