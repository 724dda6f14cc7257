from itertools import product

import pytest

from repfn.arith import canonicalize
from repfn.profiles import rep_naive
from repfn.sets import ResidueSet
from repfn.spectral import (
    annihilator_divisor_count,
    annihilator_exp_sum,
    complement_difference_transform,
    exp_sum,
    rep_spectral,
    spectral_difference,
)

EXACT_TOL = 1e-9
TRANSFORM_TOL = 1e-6


def test_exp_sum_full_set_vanishes():
    for m in range(2, 12):
        assert abs(exp_sum(ResidueSet.full(m), 1)) < EXACT_TOL


def test_exp_sum_at_zero_is_cardinality():
    T = ResidueSet.from_members(9, [1, 4, 7])
    assert exp_sum(T, 0) == 3


def test_exp_sum_two_term():
    assert abs(exp_sum(ResidueSet.from_members(4, [0, 2]), 1)) < EXACT_TOL


def test_spectral_difference_empty_set():
    inst = canonicalize(6, [2, 3])
    empty = ResidueSet.empty(6)
    full = ResidueSet.full(6)
    for x in range(6):
        want = -exp_sum(full, 2 * x) * exp_sum(full, 3 * x)
        assert abs(spectral_difference(empty, inst, x) - want) < EXACT_TOL


def test_spectral_difference_vanishes_off_kernel():
    # whenever m divides neither k1*x nor k2*x
    for m in range(2, 9):
        for k1, k2 in product(range(m), repeat=2):
            inst = canonicalize(m, [k1, k2])
            for x in range(m):
                if (k1 * x) % m == 0 or (k2 * x) % m == 0:
                    continue
                for mask in range(1 << m):
                    g = spectral_difference(ResidueSet(m, mask), inst, x)
                    assert abs(g) < EXACT_TOL


def test_spectral_difference_vanishes_on_kernel_at_half_size():
    for m in (2, 4, 6, 8):
        for k1, k2 in product(range(m), repeat=2):
            inst = canonicalize(m, [k1, k2])
            xs = [x for x in range(m) if (k1 * x) % m == 0 and (k2 * x) % m == 0]
            for mask in range(1 << m):
                A = ResidueSet(m, mask)
                if 2 * len(A) != m:
                    continue
                for x in xs:
                    assert abs(spectral_difference(A, inst, x)) < EXACT_TOL


def test_rep_spectral_examples():
    A = ResidueSet.from_members(4, [0, 1])
    assert rep_spectral(A, canonicalize(4, [1, 2]), 0) == pytest.approx(1.0, abs=TRANSFORM_TOL)
    assert rep_spectral(ResidueSet.empty(6), canonicalize(6, [1, 1]), 3) == pytest.approx(
        0.0, abs=EXACT_TOL
    )
    assert rep_spectral(ResidueSet.full(4), canonicalize(4, [1, 1]), 2) == pytest.approx(
        4.0, abs=TRANSFORM_TOL
    )


def test_rep_spectral_matches_naive_exhaustively_small():
    for m in range(2, 7):
        for k1, k2 in product(range(m), repeat=2):
            inst = canonicalize(m, [k1, k2])
            for mask in range(1 << m):
                A = ResidueSet(m, mask)
                naive = rep_naive(A, inst)
                for n in range(m):
                    assert abs(rep_spectral(A, inst, n) - naive[n]) < TRANSFORM_TOL


def test_annihilator_identity_examples():
    T = ResidueSet.full(4)
    # only x in {0, 2} survive; the count side is 2 * #{t : 2 | t} = 4
    assert annihilator_divisor_count(T, 2, 1, 0) == 4
    assert abs(annihilator_exp_sum(T, 2, 1, 0) - 4) < TRANSFORM_TOL

    empty = ResidueSet.empty(5)
    assert annihilator_divisor_count(empty, 3, 2, 1) == 0
    assert abs(annihilator_exp_sum(empty, 3, 2, 1)) < TRANSFORM_TOL

    # gcd(k, m) = 1: only x = 0 survives and divisibility by 1 always holds
    T = ResidueSet.from_members(6, [1, 2, 4])
    assert annihilator_divisor_count(T, 5, 4, 3) == 3
    assert abs(annihilator_exp_sum(T, 5, 4, 3) - 3) < TRANSFORM_TOL


def test_annihilator_identity_exhaustively_small():
    for m in range(2, 6):
        for mask in range(1 << m):
            T = ResidueSet(m, mask)
            for k, l, n in product(range(m), repeat=3):
                lhs = annihilator_exp_sum(T, k, l, n)
                rhs = annihilator_divisor_count(T, k, l, n)
                assert abs(lhs - rhs) < TRANSFORM_TOL, (m, mask, k, l, n)


def test_annihilator_handles_negative_and_large_arguments():
    T = ResidueSet.from_members(6, [0, 2, 5])
    for k, l, n in [(-4, 7, -1), (12, -5, 9), (0, 3, 2)]:
        lhs = annihilator_exp_sum(T, k, l, n)
        rhs = annihilator_divisor_count(T, k, l, n)
        assert abs(lhs - rhs) < TRANSFORM_TOL


def test_difference_transform_matches_exact_difference():
    for m in range(2, 7):
        for k1, k2 in product(range(m), repeat=2):
            inst = canonicalize(m, [k1, k2])
            for mask in range(1 << m):
                A = ResidueSet(m, mask)
                pa = rep_naive(A, inst)
                pb = rep_naive(A.complement(), inst)
                for n in range(m):
                    trans = complement_difference_transform(A, inst, n)
                    assert abs(trans - (pa[n] - pb[n])) < TRANSFORM_TOL
