# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels over bitmask-encoded subsets of Z_m.

Same surface and same results as repfn._kernels._pure; this module exists
because the subset sweeps are the hot inner loop of the whole package.
"""

import numpy as np

NAME = "fast"

ctypedef unsigned long long u64
ctypedef long long i64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

cdef int _MAX_SCAN_M = 62
cdef int _MAX_T = 16


cdef inline void _push(int m, const int* tab, u64 mask, i64* out) nogil:
    # out[j] = #{a in mask : tab[a] == j}
    cdef int a
    for a in range(m):
        out[a] = 0
    for a in range(m):
        if (mask >> a) & 1:
            out[tab[a]] += 1


cdef inline void _conv(int m, const i64* u, const i64* v, i64* out) nogil:
    cdef int n, j, i
    cdef i64 s
    for n in range(m):
        s = 0
        for j in range(m):
            i = n - j
            if i < 0:
                i += m
            s += u[j] * v[i]
        out[n] = s


cdef inline bint _profiles_equal(int m, u64 mask, const int* tab1, const int* tab2,
                                 const i64* f1, const i64* f2) nogil:
    cdef i64 u[62]
    cdef i64 v[62]
    cdef i64 ub[62]
    cdef i64 vb[62]
    cdef i64 pa[62]
    cdef i64 pb[62]
    cdef int j, n
    _push(m, tab1, mask, u)
    _push(m, tab2, mask, v)
    for j in range(m):
        ub[j] = f1[j] - u[j]
        vb[j] = f2[j] - v[j]
    _conv(m, u, v, pa)
    _conv(m, ub, vb, pb)
    for n in range(m):
        if pa[n] != pb[n]:
            return False
    return True


cdef inline bint _uniform_half(int m, int d, int per_class, u64 mask) nogil:
    # |A| = m/2 and every class mod d holds per_class members
    cdef int cc[62]
    cdef int a, r
    if 2 * __builtin_popcountll(mask) != m:
        return False
    for r in range(d):
        cc[r] = 0
    for a in range(m):
        if (mask >> a) & 1:
            cc[a % d] += 1
    for r in range(d):
        if cc[r] != per_class:
            return False
    return True


cdef inline bint _uniform_half2(int m, int q1, int per1, int q2, int per2, u64 mask) nogil:
    # |A| = m/2, uniform mod q1 and uniform mod q2
    cdef int c1[62]
    cdef int c2[62]
    cdef int a, r
    if 2 * __builtin_popcountll(mask) != m:
        return False
    for r in range(q1):
        c1[r] = 0
    for r in range(q2):
        c2[r] = 0
    for a in range(m):
        if (mask >> a) & 1:
            c1[a % q1] += 1
            c2[a % q2] += 1
    for r in range(q1):
        if c1[r] != per1:
            return False
    for r in range(q2):
        if c2[r] != per2:
            return False
    return True


cdef _tables(int m, int k1, int k2, int* tab1, int* tab2, i64* f1, i64* f2):
    cdef int a
    for a in range(m):
        tab1[a] = (k1 * a) % m
        tab2[a] = (k2 * a) % m
        f1[a] = 0
        f2[a] = 0
    for a in range(m):
        f1[tab1[a]] += 1
        f2[tab2[a]] += 1


def _check_m(int m):
    if m < 1 or m > _MAX_SCAN_M:
        raise ValueError(f"scan kernels support 1 <= m <= {_MAX_SCAN_M}, got {m}")


def profile_for_mask(int m, int k1, int k2, u64 mask):
    _check_m(m)
    cdef int tab1[62]
    cdef int tab2[62]
    cdef i64 f1[62]
    cdef i64 f2[62]
    cdef i64 u[62]
    cdef i64 v[62]
    _tables(m, k1, k2, tab1, tab2, f1, f2)
    _push(m, tab1, mask, u)
    _push(m, tab2, mask, v)
    out = np.empty(m, dtype=np.int64)
    cdef i64[::1] mv = out
    _conv(m, u, v, &mv[0])
    return out


def profiles_for_range(int m, int k1, int k2, u64 lo, u64 hi):
    """Profiles of every mask in [lo, hi), row per mask."""
    _check_m(m)
    cdef int tab1[62]
    cdef int tab2[62]
    cdef i64 f1[62]
    cdef i64 f2[62]
    cdef i64 u[62]
    cdef i64 v[62]
    _tables(m, k1, k2, tab1, tab2, f1, f2)
    out = np.empty((hi - lo, m), dtype=np.int64)
    cdef i64[:, ::1] mv = out
    cdef u64 mask
    cdef Py_ssize_t row = 0
    for mask in range(lo, hi):
        _push(m, tab1, mask, u)
        _push(m, tab2, mask, v)
        _conv(m, u, v, &mv[row, 0])
        row += 1
    return out


def balanced_masks_oracle(int m, int k1, int k2, u64 lo, u64 hi):
    """Masks in [lo, hi) whose profile equals the complement's, ascending.

    Pre-filters |A| = m/2: unequal sizes give unequal profile masses, so no
    witness is lost.
    """
    _check_m(m)
    cdef int tab1[62]
    cdef int tab2[62]
    cdef i64 f1[62]
    cdef i64 f2[62]
    _tables(m, k1, k2, tab1, tab2, f1, f2)
    found = []
    cdef u64 mask
    for mask in range(lo, hi):
        if 2 * __builtin_popcountll(mask) != m:
            continue
        if _profiles_equal(m, mask, tab1, tab2, f1, f2):
            found.append(mask)
    return found


def balanced_masks_predicate(int m, int d, u64 lo, u64 hi):
    """Masks in [lo, hi) with |A| = m/2 and A uniform mod d, ascending."""
    _check_m(m)
    if m % 2 != 0 or (m // 2) % d != 0:
        return []
    cdef int per_class = (m // 2) // d
    found = []
    cdef u64 mask
    for mask in range(lo, hi):
        if _uniform_half(m, d, per_class, mask):
            found.append(mask)
    return found


def balanced_masks_componentwise(int m, int q1, int q2, u64 lo, u64 hi):
    """Masks in [lo, hi) with |A| = m/2 and A uniform mod q1 and mod q2, ascending."""
    _check_m(m)
    if m % 2 != 0 or (m // 2) % q1 != 0 or (m // 2) % q2 != 0:
        return []
    cdef int per1 = (m // 2) // q1
    cdef int per2 = (m // 2) // q2
    found = []
    cdef u64 mask
    for mask in range(lo, hi):
        if _uniform_half2(m, q1, per1, q2, per2, mask):
            found.append(mask)
    return found


def theorem_mismatch(int m, int k1, int k2, int d, u64 lo, u64 hi):
    """First mask in [lo, hi) where predicate and profile comparison disagree.

    Returns -1 when there is none.  The profile comparison is computed in
    full for every mask (no size shortcut), so this is an honest sweep of the
    characterization against ground truth.
    """
    _check_m(m)
    cdef int tab1[62]
    cdef int tab2[62]
    cdef i64 f1[62]
    cdef i64 f2[62]
    _tables(m, k1, k2, tab1, tab2, f1, f2)
    cdef bint predicable = m % 2 == 0 and (m // 2) % d == 0
    cdef int per_class = (m // 2) // d if predicable else 0
    cdef u64 mask
    cdef bint pred, oracle
    for mask in range(lo, hi):
        oracle = _profiles_equal(m, mask, tab1, tab2, f1, f2)
        pred = predicable and _uniform_half(m, d, per_class, mask)
        if pred != oracle:
            return <i64>mask
    return -1


def theorem_mismatch_componentwise(int m, int k1, int k2, int q1, int q2, u64 lo, u64 hi):
    """Like theorem_mismatch, with the componentwise predicate (mod q1 and mod q2)."""
    _check_m(m)
    cdef int tab1[62]
    cdef int tab2[62]
    cdef i64 f1[62]
    cdef i64 f2[62]
    _tables(m, k1, k2, tab1, tab2, f1, f2)
    cdef bint predicable = m % 2 == 0 and (m // 2) % q1 == 0 and (m // 2) % q2 == 0
    cdef int per1 = (m // 2) // q1 if predicable else 0
    cdef int per2 = (m // 2) // q2 if predicable else 0
    cdef u64 mask
    cdef bint pred, oracle
    for mask in range(lo, hi):
        oracle = _profiles_equal(m, mask, tab1, tab2, f1, f2)
        pred = predicable and _uniform_half2(m, q1, per1, q2, per2, mask)
        if pred != oracle:
            return <i64>mask
    return -1


def tary_profile_for_mask(int m, weights, u64 mask):
    """t-ary profile by direct tuple enumeration (odometer over A**t)."""
    _check_m(m)
    ws = tuple(weights)
    if not ws:
        raise ValueError("at least one weight is required")
    cdef int t = len(ws)
    if t > _MAX_T:
        raise ValueError(f"at most {_MAX_T} weights supported, got {t}")
    out = np.zeros(m, dtype=np.int64)
    cdef i64[::1] mv = out
    cdef int tabs[16][62]
    cdef int mem[62]
    cdef int nmem = 0
    cdef int i, a
    for i in range(t):
        k = ws[i]
        for a in range(m):
            tabs[i][a] = (<int>k * a) % m
    for a in range(m):
        if (mask >> a) & 1:
            mem[nmem] = a
            nmem += 1
    if nmem == 0:
        return out
    _tary_fill(m, t, nmem, &tabs[0][0], mem, &mv[0])
    return out


cdef void _tary_fill(int m, int t, int nmem, const int* tabs, const int* mem, i64* prof) nogil:
    # tabs is the flattened [t][62] table; psum[j] is the partial sum of the
    # first j coordinates, reduced mod m
    cdef int idx[16]
    cdef int psum[17]
    cdef int level, j
    for j in range(t):
        idx[j] = 0
    psum[0] = 0
    for j in range(t):
        psum[j + 1] = (psum[j] + tabs[j * 62 + mem[0]]) % m
    while True:
        prof[psum[t]] += 1
        level = t - 1
        while level >= 0:
            idx[level] += 1
            if idx[level] < nmem:
                for j in range(level, t):
                    psum[j + 1] = (psum[j] + tabs[j * 62 + mem[idx[j]]]) % m
                break
            idx[level] = 0
            level -= 1
        if level < 0:
            break


def balanced_masks_tary(int m, weights, u64 lo, u64 hi):
    """Masks in [lo, hi) balanced under the t-ary counter, ascending.

    Pre-filters |A| = m/2 (profile mass |A|**t forces equal sizes).
    """
    _check_m(m)
    ws = tuple(weights)
    cdef u64 full = (<u64>1 << m) - 1
    found = []
    cdef u64 mask
    cdef int n
    for mask in range(lo, hi):
        if 2 * __builtin_popcountll(mask) != m:
            continue
        pa = tary_profile_for_mask(m, ws, mask)
        pb = tary_profile_for_mask(m, ws, full ^ mask)
        if (pa == pb).all():
            found.append(mask)
    return found
