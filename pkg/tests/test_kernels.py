"""Backend parity and kernel-vs-library agreement.

Every kernel function must give identical results from the compiled and the
numpy implementation, and must agree with the plain-Python library routes.
"""

from itertools import product

import numpy as np
import pytest

from repfn._kernels import available_backends, load_backend
from repfn.arith import canonicalize, gcd_profile
from repfn.characterization import (
    balanced_oracle,
    balanced_predicate,
    balanced_predicate_componentwise,
    reduced_moduli,
)
from repfn.profiles import rep_naive
from repfn.sets import ResidueSet

BACKENDS = available_backends()

SMALL_INSTANCES = [(2, 1, 1), (4, 1, 2), (5, 2, 3), (6, 0, 4), (7, 3, 3), (8, 2, 6)]


@pytest.fixture(params=BACKENDS)
def kern(request):
    return load_backend(request.param)


def test_compiled_backend_is_available():
    # the build is expected to produce the extension in CI and dev setups
    assert "pure" in BACKENDS
    if "fast" not in BACKENDS:
        pytest.skip("compiled kernels not built; pure fallback in use")


@pytest.mark.parametrize("m,k1,k2", SMALL_INSTANCES)
def test_profile_for_mask_matches_naive(kern, m, k1, k2):
    inst = canonicalize(m, (k1, k2))
    for mask in range(1 << m):
        got = kern.profile_for_mask(m, k1, k2, mask)
        want = rep_naive(ResidueSet(m, mask), inst).counts
        assert tuple(int(x) for x in got) == want


@pytest.mark.parametrize("m,k1,k2", SMALL_INSTANCES)
def test_profiles_for_range_matches_single(kern, m, k1, k2):
    block = kern.profiles_for_range(m, k1, k2, 0, 1 << m)
    for mask in range(1 << m):
        assert np.array_equal(block[mask], kern.profile_for_mask(m, k1, k2, mask))


@pytest.mark.parametrize("m,k1,k2", SMALL_INSTANCES)
def test_oracle_scan_matches_library_oracle(kern, m, k1, k2):
    inst = canonicalize(m, (k1, k2))
    want = [
        mask
        for mask in range(1 << m)
        if 2 * mask.bit_count() == m and balanced_oracle(ResidueSet(m, mask), inst)
    ]
    assert kern.balanced_masks_oracle(m, k1, k2, 0, 1 << m) == want


@pytest.mark.parametrize("m,k1,k2", SMALL_INSTANCES)
def test_predicate_scans_match_library_predicates(kern, m, k1, k2):
    inst = canonicalize(m, (k1, k2))
    d = gcd_profile(inst).d
    q1, q2 = reduced_moduli(inst)
    want_joint = [
        mask for mask in range(1 << m) if balanced_predicate(ResidueSet(m, mask), inst)
    ]
    want_comp = [
        mask
        for mask in range(1 << m)
        if balanced_predicate_componentwise(ResidueSet(m, mask), inst)
    ]
    assert kern.balanced_masks_predicate(m, d, 0, 1 << m) == want_joint
    assert kern.balanced_masks_componentwise(m, q1, q2, 0, 1 << m) == want_comp


@pytest.mark.parametrize("m,k1,k2", SMALL_INSTANCES)
def test_mismatch_scans_match_library(kern, m, k1, k2):
    inst = canonicalize(m, (k1, k2))
    d = gcd_profile(inst).d
    q1, q2 = reduced_moduli(inst)
    first_joint = -1
    first_comp = -1
    for mask in range(1 << m):
        A = ResidueSet(m, mask)
        oracle = balanced_oracle(A, inst)
        if first_joint < 0 and balanced_predicate(A, inst) != oracle:
            first_joint = mask
        if first_comp < 0 and balanced_predicate_componentwise(A, inst) != oracle:
            first_comp = mask
    assert kern.theorem_mismatch(m, k1, k2, d, 0, 1 << m) == first_joint
    assert kern.theorem_mismatch_componentwise(m, k1, k2, q1, q2, 0, 1 << m) == first_comp


@pytest.mark.parametrize("m,weights", [(2, (1, 1, 2)), (4, (1, 2, 3)), (6, (1, 1, 1)), (4, (0, 2, 3, 1))])
def test_tary_profile_matches_naive(kern, m, weights):
    inst = canonicalize(m, weights)
    for mask in range(1 << m):
        got = kern.tary_profile_for_mask(m, weights, mask)
        want = rep_naive(ResidueSet(m, mask), inst).counts
        assert tuple(int(x) for x in got) == want


@pytest.mark.parametrize("m,weights", [(2, (1, 1, 2)), (2, (1, 1, 1)), (6, (1, 2, 3))])
def test_tary_scan_matches_library(kern, m, weights):
    inst = canonicalize(m, weights)
    want = [
        mask
        for mask in range(1 << m)
        if 2 * mask.bit_count() == m
        and rep_naive(ResidueSet(m, mask), inst)
        == rep_naive(ResidueSet(m, mask).complement(), inst)
    ]
    assert kern.balanced_masks_tary(m, weights, 0, 1 << m) == want


@pytest.mark.skipif("fast" not in BACKENDS, reason="compiled kernels not built")
def test_backends_agree_on_random_instances():
    fast = load_backend("fast")
    pure = load_backend("pure")
    rng = np.random.default_rng(7)
    for _ in range(40):
        m = int(rng.integers(2, 11))
        k1, k2 = (int(x) for x in rng.integers(0, m, 2))
        inst = canonicalize(m, (k1, k2))
        d = gcd_profile(inst).d
        q1, q2 = reduced_moduli(inst)
        lo = int(rng.integers(0, 1 << m))
        hi = int(rng.integers(lo, (1 << m) + 1))
        assert np.array_equal(
            fast.profiles_for_range(m, k1, k2, lo, hi),
            pure.profiles_for_range(m, k1, k2, lo, hi),
        )
        assert fast.balanced_masks_oracle(m, k1, k2, lo, hi) == pure.balanced_masks_oracle(
            m, k1, k2, lo, hi
        )
        assert fast.balanced_masks_predicate(m, d, lo, hi) == pure.balanced_masks_predicate(
            m, d, lo, hi
        )
        assert fast.balanced_masks_componentwise(
            m, q1, q2, lo, hi
        ) == pure.balanced_masks_componentwise(m, q1, q2, lo, hi)
        assert fast.theorem_mismatch(m, k1, k2, d, lo, hi) == pure.theorem_mismatch(
            m, k1, k2, d, lo, hi
        )
        weights = tuple(int(x) for x in rng.integers(0, m, 3))
        assert fast.balanced_masks_tary(m, weights, lo, hi) == pure.balanced_masks_tary(
            m, weights, lo, hi
        )


def test_kernels_reject_oversized_modulus(kern):
    with pytest.raises(ValueError):
        kern.profile_for_mask(70, 1, 1, 0)
