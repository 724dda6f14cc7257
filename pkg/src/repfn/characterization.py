"""The balance characterization: predicates, existence criteria, construction, counts.

A set A is complement-balanced for an instance when its representation
profile equals that of Z_m \\ A at every n.  Two closed-form criteria are
implemented, built on the reduced moduli q1 = d1/d3 and q2 = d2/d3:

- ``balanced_predicate``: |A| = m/2 and A uniform mod q1*q2 (the joint form).
- ``balanced_predicate_componentwise``: |A| = m/2 and A uniform mod q1 and
  mod q2 separately.

The joint form is strictly stronger than balance: uniformity mod two coprime
moduli does not force uniformity mod their product, and profile comparison
refutes the joint form at m = 12 (for example k = (4, 6),
A = {0, 1, 2, 5, 6, 7}).  The componentwise form matches the brute-force
oracle exactly on every swept instance; ``repfn verify`` exhibits both facts.
``balanced_oracle`` is the ground truth both are tested against.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .arith import Instance, gcd_profile, v2
from .profiles import rep_naive
from .sets import ResidueSet

__all__ = [
    "is_uniform_mod",
    "reduced_moduli",
    "balanced_predicate",
    "balanced_predicate_componentwise",
    "balanced_oracle",
    "exists_divisibility",
    "exists_parity",
    "canonical_balanced_set",
    "count_balanced",
    "count_balanced_componentwise",
]


def is_uniform_mod(A: ResidueSet, q: int) -> bool:
    """True iff every residue class mod q holds exactly |A|/q members of A.

    Total by design: when q does not divide |A| the answer is False, not an
    error.  q itself must be a positive divisor of m.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if A.m % q != 0:
        raise ValueError(f"q={q} does not divide m={A.m}")
    size = len(A)
    if size % q != 0:
        return False
    per_class = size // q
    counts = [0] * q
    for a in A:
        counts[a % q] += 1
    return all(c == per_class for c in counts)


def reduced_moduli(inst: Instance) -> tuple[int, int]:
    """The coprime pair (d1/d3, d2/d3); their product is the gcd profile's d."""
    g = gcd_profile(inst)
    return g.d1 // g.d3, g.d2 // g.d3


def balanced_predicate(A: ResidueSet, inst: Instance) -> bool:
    """Joint-form balance test: m even, |A| = m/2, A uniform mod d1*d2/d3**2.

    Known gap: this is strictly stronger than profile balance whenever both
    reduced moduli exceed 1 (first refuted at m = 12, k = (4, 6)); use
    :func:`balanced_predicate_componentwise` for the criterion that agrees
    with :func:`balanced_oracle` on every swept instance.
    """
    if A.m != inst.m:
        raise ValueError(f"modulus mismatch: set has m={A.m}, instance m={inst.m}")
    if inst.m % 2 != 0 or 2 * len(A) != inst.m:
        return False
    return is_uniform_mod(A, gcd_profile(inst).d)


def balanced_predicate_componentwise(A: ResidueSet, inst: Instance) -> bool:
    """Componentwise balance test: m even, |A| = m/2, A uniform mod each reduced modulus.

    Uniformity is required mod d1/d3 and mod d2/d3 separately, which is
    weaker than uniformity mod their product and exactly characterizes
    profile balance.
    """
    if A.m != inst.m:
        raise ValueError(f"modulus mismatch: set has m={A.m}, instance m={inst.m}")
    if inst.m % 2 != 0 or 2 * len(A) != inst.m:
        return False
    q1, q2 = reduced_moduli(inst)
    return is_uniform_mod(A, q1) and is_uniform_mod(A, q2)


def balanced_oracle(A: ResidueSet, inst: Instance) -> bool:
    """Brute-force balance test: compare the profiles of A and its complement.

    Ground truth for :func:`balanced_predicate`; computed by direct tuple
    counting, so cost grows like |A|**2.
    """
    return rep_naive(A, inst) == rep_naive(A.complement(), inst)


def exists_divisibility(inst: Instance) -> bool:
    """Authoritative existence test: a balanced set exists iff 2d divides m.

    2d | m is exactly "a set of size m/2 uniform mod d exists".
    """
    return inst.m % (2 * gcd_profile(inst).d) == 0


def exists_parity(inst: Instance) -> bool:
    """Existence restated through weight parities; equals exists_divisibility.

    True iff m is even and either both weights have the same parity, or they
    differ in parity and the even one has v2(k) < v2(m).  With canonical
    weights, a weight 0 has v2 = +inf, so a zero weight with an odd partner
    correctly fails.  Kept as an independently implemented cross-check.
    """
    if inst.t != 2:
        raise ValueError(f"parity criterion requires exactly 2 weights, got {inst.t}")
    m = inst.m
    if m % 2 != 0:
        return False
    k1, k2 = inst.weights
    if k1 % 2 == k2 % 2:
        return True
    vm = v2(m)
    return all(v2(k) < vm for k in (k1, k2) if k % 2 == 0)


def canonical_balanced_set(inst: Instance) -> ResidueSet:
    """The explicit balanced set: union over i in [1, d] of {i + d*l : l in [1, m/(2d)]}.

    Requires a balanced set to exist (2d | m); the result has size m/2, is
    uniform mod d, and passes both balance tests.
    """
    if not exists_divisibility(inst):
        raise ValueError(f"no balanced set exists for m={inst.m}, weights={inst.weights}")
    m = inst.m
    d = gcd_profile(inst).d
    members = {(i + d * l) % m for i in range(1, d + 1) for l in range(1, m // (2 * d) + 1)}
    A = ResidueSet.from_members(m, members)
    assert len(A) == m // 2
    return A


def count_balanced(inst: Instance) -> int:
    """Number of joint-uniform sets: C(m/d, m/(2d)) ** d, or 0 when none exist.

    Uniform mod d with |A| = m/2 means picking m/(2d) members from each of
    the d classes of size m/d, independently.  This counts the sets accepted
    by :func:`balanced_predicate`; it undercounts truly balanced sets on the
    instances where the joint form is too strong (see
    :func:`count_balanced_componentwise`).
    """
    if not exists_divisibility(inst):
        return 0
    m = inst.m
    d = gcd_profile(inst).d
    return math.comb(m // d, m // (2 * d)) ** d


def count_balanced_componentwise(inst: Instance) -> int:
    """Exact number of balanced sets, counted under the componentwise criterion.

    A componentwise-uniform set assigns to every joint class (i mod q1,
    j mod q2) some c_ij of its m/(q1*q2) elements so that rows sum to
    m/(2*q1) and columns to m/(2*q2); the count is the binomial-weighted
    number of such contingency tables, evaluated by exact dynamic
    programming.  Collapses to the closed form of :func:`count_balanced`
    when either reduced modulus is 1.  Validated against exhaustive
    enumeration in the test suite.
    """
    if not exists_divisibility(inst):
        return 0
    m = inst.m
    q1, q2 = reduced_moduli(inst)
    cell = m // (q1 * q2)  # size of each joint class
    row_quota = m // (2 * q1)
    col_quota = m // (2 * q2)

    @lru_cache(maxsize=None)
    def tables(remaining: tuple[int, ...]) -> int:
        if sum(remaining) == 0:
            return 1
        total = 0
        for rest, weight in _column_fills(remaining, col_quota, cell):
            total += weight * tables(rest)
        return total

    return tables((row_quota,) * q1)


def _column_fills(remaining, budget, cell):
    """All ways to place one column: c_i in [0, min(cell, remaining_i)], sum = budget.

    Yields (new remaining row sums, product of C(cell, c_i)).
    """
    out: list[tuple[tuple[int, ...], int]] = []

    def rec(i: int, left: int, acc: list[int], weight: int):
        if i == len(remaining) - 1:
            if left <= min(cell, remaining[i]):
                out.append((tuple(acc + [remaining[i] - left]), weight * math.comb(cell, left)))
            return
        for c in range(min(cell, remaining[i], left) + 1):
            rec(i + 1, left - c, acc + [remaining[i] - c], weight * math.comb(cell, c))

    rec(0, budget, [], 1)
    return out
