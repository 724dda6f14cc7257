"""Representation profiles by two independent exact routes.

The profile of A under weights (k1, ..., kt) is the length-m sequence whose
entry n counts the ordered t-tuples (a1, ..., at) from A with
k1*a1 + ... + kt*at = n (mod m).

``rep_naive`` enumerates tuples directly and is the ground truth; it is never
optimized.  ``rep_convolution`` computes the same numbers as an iterated
cyclic convolution of weighted indicators, in exact integer arithmetic, and
must agree with ``rep_naive`` bit for bit (the test suite enforces this).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .arith import Instance
from .sets import ResidueSet

__all__ = [
    "RepProfile",
    "WeightedIndicator",
    "rep_naive",
    "weighted_indicator",
    "rep_convolution",
]


@dataclass(frozen=True, slots=True)
class RepProfile:
    """The full sequence n -> representation count, for n in Z_m.

    The entries always sum to |A|**t; every entry lies in [0, |A|**t].
    """

    m: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.m:
            raise ValueError("profile length must equal the modulus")

    def __getitem__(self, n: int) -> int:
        return self.counts[n % self.m]

    @property
    def mass(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True, slots=True)
class WeightedIndicator:
    """Pushforward of A's indicator under multiplication by a weight k.

    counts[j] = #{a in A : k*a = j (mod m)}; the entries sum to |A|.
    """

    m: int
    counts: tuple[int, ...]


def _check_modulus(A: ResidueSet, inst: Instance):
    if A.m != inst.m:
        raise ValueError(f"modulus mismatch: set has m={A.m}, instance m={inst.m}")


def rep_naive(A: ResidueSet, inst: Instance) -> RepProfile:
    """Count ordered t-tuples directly.  Cost O(|A|**t); the caller bounds t and m."""
    _check_modulus(A, inst)
    m = inst.m
    counts = [0] * m
    members = A.members
    if inst.t == 2:
        k1, k2 = inst.weights
        for a1 in members:
            base = k1 * a1
            for a2 in members:
                counts[(base + k2 * a2) % m] += 1
    else:
        for tup in product(members, repeat=inst.t):
            counts[sum(k * a for k, a in zip(inst.weights, tup)) % m] += 1
    return RepProfile(m, tuple(counts))


def weighted_indicator(A: ResidueSet, k: int) -> WeightedIndicator:
    """counts[j] = #{a in A : k*a = j (mod m)}."""
    if not 0 <= k < A.m:
        raise ValueError(f"weight {k} not reduced into [0, {A.m})")
    counts = [0] * A.m
    for a in A:
        counts[(k * a) % A.m] += 1
    return WeightedIndicator(A.m, tuple(counts))


def _cyclic_convolve(m: int, u, v) -> list[int]:
    out = [0] * m
    for j, uj in enumerate(u):
        if uj == 0:
            continue
        for i, vi in enumerate(v):
            out[(j + i) % m] += uj * vi
    return out


def rep_convolution(A: ResidueSet, inst: Instance) -> RepProfile:
    """Profile as the iterated cyclic convolution of weighted indicators.

    Schoolbook O(t*m**2), exact integers throughout.  Equal to
    ``rep_naive`` entry for entry on every input.
    """
    _check_modulus(A, inst)
    acc = list(weighted_indicator(A, inst.weights[0]).counts)
    for k in inst.weights[1:]:
        acc = _cyclic_convolve(inst.m, acc, weighted_indicator(A, k).counts)
    return RepProfile(inst.m, tuple(acc))
