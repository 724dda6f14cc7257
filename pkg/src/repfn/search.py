"""Bounded exhaustive searches over subsets of Z_m.

Subsets are enumerated as an m-bit counter sweep over [0, 2**m); the counter
value is a canonical total order, so witness lists are deterministic and the
range is trivially partitionable across workers.  Workers share nothing; the
final report concatenates per-range results in range order, so the worker
count never changes the output.

All searches skip |A| != m/2 immediately: the profile mass is |A|**t, so a
set and its complement (or any profile-equal partner) must have equal sizes.
"""

from __future__ import annotations

import math
import os
import time
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .arith import Instance, gcd_profile
from .sets import ResidueSet

__all__ = [
    "SearchReport",
    "BoundExceededError",
    "enumerate_balanced",
    "pair_search",
    "t_ary_balanced_search",
    "DEFAULT_BOUNDS",
    "DEFAULT_WITNESS_CAP",
]

DEFAULT_BOUNDS = {"oracle": 16, "predicate": 24, "pairs": 8, "tary": 12}
DEFAULT_WITNESS_CAP = 10**6


class BoundExceededError(ValueError):
    """The instance modulus exceeds the configured search bound."""


def resolved_bound(mode: str) -> int:
    """Default bound for a search mode; REPFN_MAX_M raises all hard bounds."""
    bound = DEFAULT_BOUNDS[mode]
    env = os.environ.get("REPFN_MAX_M")
    if env:
        bound = max(bound, int(env))
    return bound


def _check_bound(mode: str, m: int, bound: int | None) -> None:
    limit = bound if bound is not None else resolved_bound(mode)
    if m > limit:
        raise BoundExceededError(
            f"m={m} exceeds the {mode} search bound {limit} "
            "(override with bound= or REPFN_MAX_M)"
        )


@dataclass(frozen=True, slots=True)
class SearchReport:
    """Outcome of a search: witnesses in ascending bit-pattern order.

    ``counts`` is always the exact total, even when the witness list was
    truncated at the cap.  ``exhaustive`` is True when the full subset space
    was covered (possibly through the sound size pre-filter).
    """

    instance: Instance
    mode: str  # "enumerate" | "pairs" | "tary"
    witnesses: tuple
    counts: int
    elapsed_ms: float
    exhaustive: bool
    truncated: bool

    def witness_rows(self) -> list:
        """Witnesses as plain member lists (pairs become two-element lists)."""
        if self.mode == "pairs":
            return [[list(a.members), list(b.members)] for a, b in self.witnesses]
        return [list(w.members) for w in self.witnesses]

    def to_json_dict(self) -> dict:
        return {
            "instance": {"m": self.instance.m, "weights": list(self.instance.weights)},
            "mode": self.mode,
            "witnesses": self.witness_rows(),
            "counts": self.counts,
            "elapsed_ms": self.elapsed_ms,
            "exhaustive": self.exhaustive,
            "truncated": self.truncated,
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "SearchReport":
        inst = Instance(doc["instance"]["m"], tuple(doc["instance"]["weights"]))
        m = inst.m
        if doc["mode"] == "pairs":
            witnesses = tuple(
                (ResidueSet.from_members(m, a), ResidueSet.from_members(m, b))
                for a, b in doc["witnesses"]
            )
        else:
            witnesses = tuple(ResidueSet.from_members(m, w) for w in doc["witnesses"])
        return cls(
            instance=inst,
            mode=doc["mode"],
            witnesses=witnesses,
            counts=doc["counts"],
            elapsed_ms=doc["elapsed_ms"],
            exhaustive=doc["exhaustive"],
            truncated=doc["truncated"],
        )


def _ranges(total: int, workers: int) -> list[tuple[int, int]]:
    size, extra = divmod(total, workers)
    out = []
    lo = 0
    for i in range(workers):
        hi = lo + size + (1 if i < extra else 0)
        if hi > lo:
            out.append((lo, hi))
        lo = hi
    return out


def _scan_chunk(payload):
    kind, m, params, lo, hi = payload
    if kind == "oracle":
        return _kernels.balanced_masks_oracle(m, params[0], params[1], lo, hi)
    if kind == "predicate":
        return _kernels.balanced_masks_predicate(m, params[0], lo, hi)
    if kind == "componentwise":
        return _kernels.balanced_masks_componentwise(m, params[0], params[1], lo, hi)
    if kind == "tary":
        return _kernels.balanced_masks_tary(m, params, lo, hi)
    if kind == "profiles":
        return _kernels.profiles_for_range(m, params[0], params[1], lo, hi)
    raise ValueError(f"unknown scan kind {kind!r}")


def _run_scan(kind: str, m: int, params, workers: int):
    payloads = [(kind, m, params, lo, hi) for lo, hi in _ranges(1 << m, workers)]
    if workers <= 1 or len(payloads) <= 1:
        return [_scan_chunk(p) for p in payloads]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_scan_chunk, payloads))


def enumerate_balanced(
    inst: Instance,
    use_predicate: bool = False,
    *,
    mode: str | None = None,
    workers: int = 1,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    bound: int | None = None,
) -> SearchReport:
    """All balanced sets A, by profile comparison (default) or by a predicate.

    ``mode`` overrides ``use_predicate`` when given: "oracle" compares
    profiles (ground truth), "predicate" applies the joint-uniformity closed
    form, "componentwise" applies the split criterion that matches the oracle
    on every swept instance.  Oracle and componentwise witness lists agree
    everywhere; "predicate" misses witnesses on the instances where the joint
    form is too strong.
    """
    if inst.t != 2:
        raise ValueError("enumeration requires exactly 2 weights")
    if mode is None:
        mode = "predicate" if use_predicate else "oracle"
    if mode not in ("oracle", "predicate", "componentwise"):
        raise ValueError(f"unknown enumeration mode {mode!r}")
    _check_bound("oracle" if mode == "oracle" else "predicate", inst.m, bound)
    start = time.perf_counter()
    if mode == "predicate":
        chunks = _run_scan("predicate", inst.m, (gcd_profile(inst).d,), workers)
    elif mode == "componentwise":
        g = gcd_profile(inst)
        chunks = _run_scan("componentwise", inst.m, (g.d1 // g.d3, g.d2 // g.d3), workers)
    else:
        chunks = _run_scan("oracle", inst.m, inst.weights, workers)
    masks = [mask for chunk in chunks for mask in chunk]
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    witnesses = tuple(ResidueSet(inst.m, mask) for mask in masks[:witness_cap])
    return SearchReport(
        instance=inst,
        mode="enumerate",
        witnesses=witnesses,
        counts=len(masks),
        elapsed_ms=elapsed_ms,
        exhaustive=True,
        truncated=len(masks) > witness_cap,
    )


def pair_search(
    inst: Instance,
    exclude_trivial: bool = False,
    *,
    workers: int = 1,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    bound: int | None = None,
) -> SearchReport:
    """All unordered pairs {A, B}, A != B, with identical profiles.

    Covers the 4**m ordered pairs by grouping the 2**m profiles, which is
    exact.  When ``exclude_trivial`` is set, pairs where B is the complement
    of A (the balanced case) are dropped.  Exploratory: there is no
    closed-form count to check against.
    """
    if inst.t != 2:
        raise ValueError("pair search requires exactly 2 weights")
    _check_bound("pairs", inst.m, bound)
    start = time.perf_counter()
    m = inst.m
    full = (1 << m) - 1
    profiles = np.vstack(_run_scan("profiles", m, inst.weights, workers))
    keys = [profiles[mask].tobytes() for mask in range(1 << m)]
    groups: dict[bytes, list[int]] = {}
    for mask, key in enumerate(keys):
        groups.setdefault(key, []).append(mask)

    counts = sum(math.comb(len(g), 2) for g in groups.values())
    if exclude_trivial:
        counts -= sum(
            1 for a in range(1 << m) if a < (full ^ a) and keys[a] == keys[full ^ a]
        )

    witnesses = []
    truncated = False
    for a in range(1 << m):
        group = groups[keys[a]]
        if len(group) < 2:
            continue
        for b in group[bisect_right(group, a) :]:
            if exclude_trivial and b == full ^ a:
                continue
            if len(witnesses) >= witness_cap:
                truncated = True
                break
            witnesses.append((ResidueSet(m, a), ResidueSet(m, b)))
        if truncated:
            break
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return SearchReport(
        instance=inst,
        mode="pairs",
        witnesses=tuple(witnesses),
        counts=counts,
        elapsed_ms=elapsed_ms,
        exhaustive=True,
        truncated=truncated,
    )


def t_ary_balanced_search(
    inst: Instance,
    *,
    workers: int = 1,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    bound: int | None = None,
) -> SearchReport:
    """All A balanced against their complement under t >= 3 weights.

    Uses the direct t-ary tuple counter.  Exploratory: the interesting datum
    is whether counts > 0 for the given (m, k1, ..., kt).
    """
    if inst.t < 3:
        raise ValueError(f"t-ary search requires at least 3 weights, got {inst.t}")
    _check_bound("tary", inst.m, bound)
    start = time.perf_counter()
    chunks = _run_scan("tary", inst.m, inst.weights, workers)
    masks = [mask for chunk in chunks for mask in chunk]
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    witnesses = tuple(ResidueSet(inst.m, mask) for mask in masks[:witness_cap])
    return SearchReport(
        instance=inst,
        mode="tary",
        witnesses=witnesses,
        counts=len(masks),
        elapsed_ms=elapsed_ms,
        exhaustive=True,
        truncated=len(masks) > witness_cap,
    )
