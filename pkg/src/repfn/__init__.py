"""Weighted representation profiles on Z_m.

Counts ordered t-tuples from a subset A with k1*a1 + ... + kt*at = n (mod m),
decides when A and its complement have identical profiles via an exact
gcd/uniformity criterion, verifies the criterion against brute-force oracles,
and runs bounded searches for profile-equal pairs and t-ary analogues.
"""

from ._kernels import BACKEND_NAME
from .arith import GcdProfile, Instance, canonicalize, gcd_profile, v2
from .characterization import (
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
from .profiles import (
    RepProfile,
    WeightedIndicator,
    rep_convolution,
    rep_naive,
    weighted_indicator,
)
from .search import (
    DEFAULT_BOUNDS,
    DEFAULT_WITNESS_CAP,
    BoundExceededError,
    SearchReport,
    enumerate_balanced,
    pair_search,
    t_ary_balanced_search,
)
from .sets import ResidueSet
from .spectral import (
    annihilator_divisor_count,
    annihilator_exp_sum,
    complement_difference_transform,
    exp_sum,
    rep_spectral,
    spectral_difference,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "BoundExceededError",
    "DEFAULT_BOUNDS",
    "DEFAULT_WITNESS_CAP",
    "GcdProfile",
    "Instance",
    "RepProfile",
    "ResidueSet",
    "SearchReport",
    "WeightedIndicator",
    "annihilator_divisor_count",
    "annihilator_exp_sum",
    "balanced_oracle",
    "balanced_predicate",
    "balanced_predicate_componentwise",
    "canonical_balanced_set",
    "canonicalize",
    "complement_difference_transform",
    "count_balanced",
    "count_balanced_componentwise",
    "enumerate_balanced",
    "exists_divisibility",
    "exists_parity",
    "exp_sum",
    "gcd_profile",
    "is_uniform_mod",
    "pair_search",
    "reduced_moduli",
    "rep_convolution",
    "rep_naive",
    "rep_spectral",
    "spectral_difference",
    "t_ary_balanced_search",
    "v2",
    "weighted_indicator",
]
