from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repfn.arith import canonicalize
from repfn.characterization import (
    balanced_oracle,
    balanced_predicate,
    balanced_predicate_componentwise,
    canonical_balanced_set,
    count_balanced,
    count_balanced_componentwise,
    exists_divisibility,
    exists_parity,
    is_uniform_mod,
    reduced_moduli,
)
from repfn.profiles import rep_naive
from repfn.sets import ResidueSet


def brute_balanced_masks(m, k1, k2):
    """Independent oracle: direct profile comparison over all subsets.

    Skips |A| != m/2 only because profile masses |A|**2 and |B|**2 then
    differ, which is elementary counting.
    """
    inst = canonicalize(m, (k1, k2))
    out = []
    for mask in range(1 << m):
        A = ResidueSet(m, mask)
        if 2 * len(A) != m:
            continue
        if rep_naive(A, inst) == rep_naive(A.complement(), inst):
            out.append(mask)
    return out


def test_is_uniform_mod_examples():
    assert is_uniform_mod(ResidueSet.from_members(4, [0, 1]), 2)
    assert not is_uniform_mod(ResidueSet.from_members(4, [0, 2]), 2)
    assert is_uniform_mod(ResidueSet.from_members(4, [0, 2]), 1)
    with pytest.raises(ValueError):
        is_uniform_mod(ResidueSet.full(4), 3)
    with pytest.raises(ValueError):
        is_uniform_mod(ResidueSet.full(4), 0)


def test_is_uniform_mod_size_not_divisible():
    assert not is_uniform_mod(ResidueSet.from_members(4, [0, 1, 2]), 2)


def test_balanced_predicate_examples():
    inst = canonicalize(4, [1, 2])
    assert balanced_predicate(ResidueSet.from_members(4, [0, 1]), inst)
    assert not balanced_predicate(ResidueSet.from_members(4, [0, 2]), inst)
    assert not balanced_predicate(ResidueSet.from_members(3, [0]), canonicalize(3, [1, 1]))


def test_balanced_oracle_examples():
    assert balanced_oracle(ResidueSet.from_members(4, [0, 1]), canonicalize(4, [1, 1]))
    assert not balanced_oracle(ResidueSet.from_members(2, [0]), canonicalize(2, [1, 2]))
    assert not balanced_oracle(ResidueSet.empty(2), canonicalize(2, [1, 1]))


def test_joint_predicate_refuted_at_m12():
    """The pinned counterexample to the joint-uniformity characterization.

    A = {0,1,2,5,6,7} is balanced for (m, k) = (12, (4, 6)) yet not uniform
    mod d = 6; it is uniform mod both reduced moduli 2 and 3.
    """
    inst = canonicalize(12, [4, 6])
    A = ResidueSet.from_members(12, [0, 1, 2, 5, 6, 7])
    assert reduced_moduli(inst) == (2, 3)
    assert balanced_oracle(A, inst)
    assert not balanced_predicate(A, inst)
    assert balanced_predicate_componentwise(A, inst)


def test_componentwise_matches_oracle_exhaustively_small():
    for m in range(2, 9):
        for k1, k2 in product(range(m), repeat=2):
            inst = canonicalize(m, (k1, k2))
            want = set(brute_balanced_masks(m, k1, k2))
            for mask in range(1 << m):
                A = ResidueSet(m, mask)
                got = balanced_predicate_componentwise(A, inst)
                assert got == (mask in want), (m, k1, k2, mask)
                # below m = 12 the joint form agrees as well
                assert balanced_predicate(A, inst) == got, (m, k1, k2, mask)


def test_exists_examples():
    assert exists_parity(canonicalize(4, [1, 3]))
    assert exists_parity(canonicalize(8, [2, 1]))
    assert not exists_parity(canonicalize(2, [2, 1]))
    assert exists_divisibility(canonicalize(12, [4, 6]))
    assert not exists_divisibility(canonicalize(2, [1, 2]))
    for k1, k2 in product(range(5), repeat=2):
        assert not exists_divisibility(canonicalize(5, [k1, k2]))


def test_exists_criteria_agree_up_to_32():
    for m in range(2, 33):
        for k1, k2 in product(range(m), repeat=2):
            inst = canonicalize(m, (k1, k2))
            assert exists_parity(inst) == exists_divisibility(inst), (m, k1, k2)


def test_exists_matches_enumeration_small():
    for m in range(2, 8):
        for k1, k2 in product(range(m), repeat=2):
            inst = canonicalize(m, (k1, k2))
            assert exists_divisibility(inst) == bool(brute_balanced_masks(m, k1, k2))


def test_canonical_balanced_set_examples():
    assert canonical_balanced_set(canonicalize(4, [1, 2])) == ResidueSet.from_members(4, [0, 3])
    assert canonical_balanced_set(canonicalize(2, [1, 1])) == ResidueSet.from_members(2, [0])
    with pytest.raises(ValueError):
        canonical_balanced_set(canonicalize(2, [1, 2]))


def test_canonical_balanced_set_valid_wherever_existence_holds():
    for m in range(2, 11):
        for k1, k2 in product(range(m), repeat=2):
            inst = canonicalize(m, (k1, k2))
            if not exists_divisibility(inst):
                continue
            A = canonical_balanced_set(inst)
            assert len(A) == m // 2
            assert balanced_predicate(A, inst)
            assert balanced_predicate_componentwise(A, inst)
            assert balanced_oracle(A, inst)


def test_count_anchors_against_brute_force():
    assert count_balanced(canonicalize(4, [1, 2])) == 4
    assert len(brute_balanced_masks(4, 1, 2)) == 4
    assert count_balanced(canonicalize(6, [1, 1])) == 20
    assert len(brute_balanced_masks(6, 1, 1)) == 20


def test_count_componentwise_matches_brute_force_small():
    for m in range(2, 9):
        for k1, k2 in product(range(m), repeat=2):
            inst = canonicalize(m, (k1, k2))
            assert count_balanced_componentwise(inst) == len(
                brute_balanced_masks(m, k1, k2)
            ), (m, k1, k2)


def test_count_m12_anchor():
    inst = canonicalize(12, [4, 6])
    assert count_balanced(inst) == 64  # joint-uniform sets only
    assert count_balanced_componentwise(inst) == 88  # all balanced sets
    assert len(brute_balanced_masks(12, 4, 6)) == 88


def test_counts_agree_when_a_reduced_modulus_is_one():
    for m, k in [(6, (1, 1)), (8, (2, 4)), (16, (4, 2)), (10, (5, 3))]:
        inst = canonicalize(m, k)
        q1, q2 = reduced_moduli(inst)
        if min(q1, q2) == 1:
            assert count_balanced(inst) == count_balanced_componentwise(inst)


@st.composite
def set_and_pair_instance(draw, max_m=12):
    m = draw(st.integers(min_value=2, max_value=max_m))
    mask = draw(st.integers(min_value=0, max_value=(1 << m) - 1))
    k1 = draw(st.integers(min_value=0, max_value=m - 1))
    k2 = draw(st.integers(min_value=0, max_value=m - 1))
    return ResidueSet(m, mask), canonicalize(m, (k1, k2))


@given(set_and_pair_instance())
@settings(max_examples=80, deadline=None)
def test_predicates_closed_under_complement(args):
    A, inst = args
    B = A.complement()
    assert balanced_predicate(A, inst) == balanced_predicate(B, inst)
    assert balanced_predicate_componentwise(A, inst) == balanced_predicate_componentwise(B, inst)
