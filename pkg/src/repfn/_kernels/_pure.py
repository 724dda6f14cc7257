"""numpy scan kernels over bitmask-encoded subsets of Z_m.

Drop-in fallback for the compiled module (repfn._kernels._fast); both expose
the same functions with identical results.  Mask ranges are processed in
chunks to bound memory.
"""

from __future__ import annotations

import numpy as np

NAME = "pure"

_CHUNK = 1 << 14
_MAX_SCAN_M = 62  # mask must fit an int64 range


def _check_m(m: int):
    if not 1 <= m <= _MAX_SCAN_M:
        raise ValueError(f"scan kernels support 1 <= m <= {_MAX_SCAN_M}, got {m}")


def _pushforward_matrix(m: int, k: int) -> np.ndarray:
    # P[a, j] = 1 iff k*a = j (mod m)
    P = np.zeros((m, m), dtype=np.int64)
    a = np.arange(m)
    P[a, (k * a) % m] = 1
    return P


def _indicator_block(masks: np.ndarray, m: int) -> np.ndarray:
    return ((masks[:, None] >> np.arange(m, dtype=np.int64)) & 1).astype(np.int64)


def _pair_profiles(u: np.ndarray, v: np.ndarray, m: int) -> np.ndarray:
    prof = np.empty((u.shape[0], m), dtype=np.int64)
    idx = np.arange(m)
    for n in range(m):
        prof[:, n] = np.einsum("ij,ij->i", u, v[:, (n - idx) % m])
    return prof


def profile_for_mask(m: int, k1: int, k2: int, mask: int) -> np.ndarray:
    _check_m(m)
    masks = np.array([mask], dtype=np.int64)
    ind = _indicator_block(masks, m)
    u = ind @ _pushforward_matrix(m, k1)
    v = ind @ _pushforward_matrix(m, k2)
    return _pair_profiles(u, v, m)[0]


def profiles_for_range(m: int, k1: int, k2: int, lo: int, hi: int) -> np.ndarray:
    """Profiles of every mask in [lo, hi), row per mask."""
    _check_m(m)
    P1 = _pushforward_matrix(m, k1)
    P2 = _pushforward_matrix(m, k2)
    out = np.empty((hi - lo, m), dtype=np.int64)
    for start in range(lo, hi, _CHUNK):
        stop = min(start + _CHUNK, hi)
        ind = _indicator_block(np.arange(start, stop, dtype=np.int64), m)
        out[start - lo : stop - lo] = _pair_profiles(ind @ P1, ind @ P2, m)
    return out


def balanced_masks_oracle(m: int, k1: int, k2: int, lo: int, hi: int) -> list[int]:
    """Masks in [lo, hi) whose profile equals the complement's, ascending.

    Pre-filters |A| = m/2: unequal sizes give unequal profile masses, so no
    witness is lost.
    """
    _check_m(m)
    P1 = _pushforward_matrix(m, k1)
    P2 = _pushforward_matrix(m, k2)
    F1 = P1.sum(axis=0)
    F2 = P2.sum(axis=0)
    found: list[int] = []
    for start in range(lo, hi, _CHUNK):
        stop = min(start + _CHUNK, hi)
        masks = np.arange(start, stop, dtype=np.int64)
        masks = masks[np.bitwise_count(masks) * 2 == m]
        if masks.size == 0:
            continue
        ind = _indicator_block(masks, m)
        u = ind @ P1
        v = ind @ P2
        eq = (_pair_profiles(u, v, m) == _pair_profiles(F1 - u, F2 - v, m)).all(axis=1)
        found.extend(int(x) for x in masks[eq])
    return found


def balanced_masks_predicate(m: int, d: int, lo: int, hi: int) -> list[int]:
    """Masks in [lo, hi) with |A| = m/2 and A uniform mod d, ascending."""
    _check_m(m)
    if m % 2 != 0 or (m // 2) % d != 0:
        return []
    per_class = (m // 2) // d
    C = np.zeros((m, d), dtype=np.int64)
    a = np.arange(m)
    C[a, a % d] = 1
    found: list[int] = []
    for start in range(lo, hi, _CHUNK):
        stop = min(start + _CHUNK, hi)
        masks = np.arange(start, stop, dtype=np.int64)
        masks = masks[np.bitwise_count(masks) * 2 == m]
        if masks.size == 0:
            continue
        ok = (_indicator_block(masks, m) @ C == per_class).all(axis=1)
        found.extend(int(x) for x in masks[ok])
    return found


def balanced_masks_componentwise(m: int, q1: int, q2: int, lo: int, hi: int) -> list[int]:
    """Masks in [lo, hi) with |A| = m/2 and A uniform mod q1 and mod q2, ascending."""
    _check_m(m)
    if m % 2 != 0 or (m // 2) % q1 != 0 or (m // 2) % q2 != 0:
        return []
    a = np.arange(m)
    C1 = np.zeros((m, q1), dtype=np.int64)
    C1[a, a % q1] = 1
    C2 = np.zeros((m, q2), dtype=np.int64)
    C2[a, a % q2] = 1
    per1 = (m // 2) // q1
    per2 = (m // 2) // q2
    found: list[int] = []
    for start in range(lo, hi, _CHUNK):
        stop = min(start + _CHUNK, hi)
        masks = np.arange(start, stop, dtype=np.int64)
        masks = masks[np.bitwise_count(masks) * 2 == m]
        if masks.size == 0:
            continue
        ind = _indicator_block(masks, m)
        ok = ((ind @ C1 == per1).all(axis=1)) & ((ind @ C2 == per2).all(axis=1))
        found.extend(int(x) for x in masks[ok])
    return found


def theorem_mismatch(m: int, k1: int, k2: int, d: int, lo: int, hi: int) -> int:
    """First mask in [lo, hi) where predicate and profile comparison disagree.

    Returns -1 when there is none.  The profile comparison is computed in
    full for every mask (no size shortcut), so this is an honest sweep of the
    characterization against ground truth.
    """
    _check_m(m)
    P1 = _pushforward_matrix(m, k1)
    P2 = _pushforward_matrix(m, k2)
    F1 = P1.sum(axis=0)
    F2 = P2.sum(axis=0)
    predicable = m % 2 == 0 and (m // 2) % d == 0
    if predicable:
        C = np.zeros((m, d), dtype=np.int64)
        a = np.arange(m)
        C[a, a % d] = 1
        per_class = (m // 2) // d
    for start in range(lo, hi, _CHUNK):
        stop = min(start + _CHUNK, hi)
        masks = np.arange(start, stop, dtype=np.int64)
        ind = _indicator_block(masks, m)
        u = ind @ P1
        v = ind @ P2
        oracle = (_pair_profiles(u, v, m) == _pair_profiles(F1 - u, F2 - v, m)).all(axis=1)
        if predicable:
            pred = (np.bitwise_count(masks) * 2 == m) & ((ind @ C == per_class).all(axis=1))
        else:
            pred = np.zeros(masks.shape, dtype=bool)
        bad = np.nonzero(pred != oracle)[0]
        if bad.size:
            return int(masks[bad[0]])
    return -1


def theorem_mismatch_componentwise(
    m: int, k1: int, k2: int, q1: int, q2: int, lo: int, hi: int
) -> int:
    """Like theorem_mismatch, with the componentwise predicate (mod q1 and mod q2)."""
    _check_m(m)
    P1 = _pushforward_matrix(m, k1)
    P2 = _pushforward_matrix(m, k2)
    F1 = P1.sum(axis=0)
    F2 = P2.sum(axis=0)
    predicable = m % 2 == 0 and (m // 2) % q1 == 0 and (m // 2) % q2 == 0
    if predicable:
        a = np.arange(m)
        C1 = np.zeros((m, q1), dtype=np.int64)
        C1[a, a % q1] = 1
        C2 = np.zeros((m, q2), dtype=np.int64)
        C2[a, a % q2] = 1
        per1 = (m // 2) // q1
        per2 = (m // 2) // q2
    for start in range(lo, hi, _CHUNK):
        stop = min(start + _CHUNK, hi)
        masks = np.arange(start, stop, dtype=np.int64)
        ind = _indicator_block(masks, m)
        u = ind @ P1
        v = ind @ P2
        oracle = (_pair_profiles(u, v, m) == _pair_profiles(F1 - u, F2 - v, m)).all(axis=1)
        if predicable:
            pred = (
                (np.bitwise_count(masks) * 2 == m)
                & ((ind @ C1 == per1).all(axis=1))
                & ((ind @ C2 == per2).all(axis=1))
            )
        else:
            pred = np.zeros(masks.shape, dtype=bool)
        bad = np.nonzero(pred != oracle)[0]
        if bad.size:
            return int(masks[bad[0]])
    return -1


def tary_profile_for_mask(m: int, weights, mask: int) -> np.ndarray:
    """t-ary profile by direct tuple enumeration (vectorized partial sums)."""
    _check_m(m)
    weights = tuple(weights)
    if not weights:
        raise ValueError("at least one weight is required")
    members = np.nonzero(_indicator_block(np.array([mask], dtype=np.int64), m)[0])[0]
    sums = np.zeros(1, dtype=np.int64)
    for k in weights:
        sums = (sums[:, None] + (k * members)[None, :]).reshape(-1) % m
    return np.bincount(sums, minlength=m).astype(np.int64)


def balanced_masks_tary(m: int, weights, lo: int, hi: int) -> list[int]:
    """Masks in [lo, hi) balanced under the t-ary counter, ascending.

    Pre-filters |A| = m/2 (profile mass |A|**t forces equal sizes).
    """
    _check_m(m)
    weights = tuple(weights)
    full = (1 << m) - 1
    found: list[int] = []
    for start in range(lo, hi, _CHUNK):
        stop = min(start + _CHUNK, hi)
        masks = np.arange(start, stop, dtype=np.int64)
        masks = masks[np.bitwise_count(masks) * 2 == m]
        for mask in masks:
            mask = int(mask)
            pa = tary_profile_for_mask(m, weights, mask)
            pb = tary_profile_for_mask(m, weights, full ^ mask)
            if np.array_equal(pa, pb):
                found.append(mask)
    return found
