from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repfn.arith import canonicalize
from repfn.profiles import rep_convolution, rep_naive, weighted_indicator
from repfn.sets import ResidueSet


def test_rep_naive_hand_enumerated():
    # pairs over A={0,1}: 0+0, 0+1, 1+0, 1+1
    A = ResidueSet.from_members(4, [0, 1])
    assert rep_naive(A, canonicalize(4, [1, 1])).counts == (1, 2, 1, 0)
    # a1 + 2*a2 over the same pairs: 0, 2, 1, 3
    assert rep_naive(A, canonicalize(4, [1, 2])).counts == (1, 1, 1, 1)


def test_rep_naive_empty_set():
    assert rep_naive(ResidueSet.empty(5), canonicalize(5, [1, 2])).counts == (0,) * 5


def test_rep_naive_modulus_mismatch():
    with pytest.raises(ValueError):
        rep_naive(ResidueSet.empty(5), canonicalize(4, [1, 2]))
    with pytest.raises(ValueError):
        rep_convolution(ResidueSet.empty(5), canonicalize(4, [1, 2]))


def test_weighted_indicator_examples():
    assert weighted_indicator(ResidueSet.full(4), 2).counts == (2, 0, 2, 0)
    assert weighted_indicator(ResidueSet.from_members(4, [1]), 1).counts == (0, 1, 0, 0)
    assert weighted_indicator(ResidueSet.from_members(6, [0, 3]), 0).counts == (2, 0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        weighted_indicator(ResidueSet.full(4), 4)


def test_rep_convolution_hand_enumerated():
    assert rep_convolution(
        ResidueSet.from_members(4, [0, 1]), canonicalize(4, [1, 2])
    ).counts == (1, 1, 1, 1)
    # sums over A={0,2}, k=(1,1): 0, 2, 2, 4=0
    assert rep_convolution(
        ResidueSet.from_members(4, [0, 2]), canonicalize(4, [1, 1])
    ).counts == (2, 0, 2, 0)
    assert rep_convolution(ResidueSet.full(3), canonicalize(3, [1, 1])).counts == (3, 3, 3)


def test_routes_agree_exhaustively_small():
    for m in range(2, 7):
        for k1, k2 in product(range(m), repeat=2):
            inst = canonicalize(m, [k1, k2])
            for mask in range(1 << m):
                A = ResidueSet(m, mask)
                assert rep_naive(A, inst) == rep_convolution(A, inst)


@st.composite
def set_and_instance(draw, max_m=16, t_max=3):
    m = draw(st.integers(min_value=2, max_value=max_m))
    mask = draw(st.integers(min_value=0, max_value=(1 << m) - 1))
    t = draw(st.integers(min_value=2, max_value=t_max))
    weights = [draw(st.integers(min_value=0, max_value=m - 1)) for _ in range(t)]
    return ResidueSet(m, mask), canonicalize(m, weights)


@given(set_and_instance())
@settings(max_examples=80, deadline=None)
def test_profile_mass_is_size_to_the_t(args):
    A, inst = args
    prof = rep_naive(A, inst)
    assert prof.mass == len(A) ** inst.t
    assert all(0 <= c <= len(A) ** inst.t for c in prof.counts)


@given(set_and_instance(max_m=12))
@settings(max_examples=80, deadline=None)
def test_routes_agree_randomized_tary(args):
    A, inst = args
    assert rep_naive(A, inst) == rep_convolution(A, inst)
