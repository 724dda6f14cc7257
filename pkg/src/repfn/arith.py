"""Exact integer primitives: weight canonicalization, gcd profiles, 2-adic valuation.

All functions here are pure and operate on plain Python integers, so there is
no precision ceiling and no shared state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["Instance", "GcdProfile", "canonicalize", "gcd_profile", "v2"]


@dataclass(frozen=True, slots=True)
class Instance:
    """A problem instance: modulus ``m >= 2`` plus weights reduced into [0, m).

    Weights must already be canonical; use :func:`canonicalize` to build an
    instance from arbitrary integers.
    """

    m: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"modulus must be >= 2, got {self.m}")
        if not self.weights:
            raise ValueError("at least one weight is required")
        for w in self.weights:
            if not 0 <= w < self.m:
                raise ValueError(f"weight {w} not reduced into [0, {self.m})")

    @property
    def t(self) -> int:
        """Number of weights (the arity of the representation count)."""
        return len(self.weights)


@dataclass(frozen=True, slots=True)
class GcdProfile:
    """The gcd quadruple attached to a two-weight instance.

    ``d1 = gcd(k1, m)``, ``d2 = gcd(k2, m)``, ``d3 = gcd(d1, d2)`` and
    ``d = d1*d2/d3**2``, the modulus that governs the uniformity condition of
    the balance criterion.  ``d`` is always an exact positive divisor of m.
    """

    d1: int
    d2: int
    d3: int
    d: int


def canonicalize(m: int, raw_weights) -> Instance:
    """Build an Instance from arbitrary integer weights.

    Each weight is reduced into [0, m) by mathematical mod (result always
    nonnegative).  Reduction never changes a representation count, since
    ``k*a mod m`` depends only on ``k mod m``.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    weights = tuple(int(w) % m for w in raw_weights)
    if not weights:
        raise ValueError("at least one weight is required")
    return Instance(m, weights)


def gcd_profile(inst: Instance) -> GcdProfile:
    """Compute (d1, d2, d3, d) for a two-weight instance.

    Convention: gcd(0, m) = m, so a weight that is 0 mod m (annihilating all
    of Z_m) yields d_i = m.
    """
    if inst.t != 2:
        raise ValueError(f"gcd profile requires exactly 2 weights, got {inst.t}")
    k1, k2 = inst.weights
    d1 = math.gcd(k1, inst.m)
    d2 = math.gcd(k2, inst.m)
    d3 = math.gcd(d1, d2)
    d, rem = divmod(d1 * d2, d3 * d3)
    # d3 | d1 and d3 | d2 with gcd(d1/d3, d2/d3) = 1 force both of these;
    # a failure means a bug upstream, not bad input.
    assert rem == 0, (inst, d1, d2, d3)
    assert inst.m % d == 0, (inst, d)
    return GcdProfile(d1, d2, d3, d)


def v2(k: int) -> int | float:
    """2-adic valuation of ``k >= 0``; ``v2(0) = +inf``.

    The infinity convention makes the strict comparison ``v2(k) < v2(m)``
    well-defined (and false) for weights that are 0 mod m.
    """
    if k < 0:
        raise ValueError(f"v2 requires k >= 0, got {k}")
    if k == 0:
        return math.inf
    return (k & -k).bit_length() - 1
