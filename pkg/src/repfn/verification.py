"""Verification sweeps: every identity the package claims, checked at desk scale.

Each sweep returns a :class:`CheckResult` and never raises on a mathematical
failure; counterexamples are collected so callers (CLI ``verify``, the
acceptance tests) can report them.  The sweeps pair an implementation with an
independent route wherever one exists:

- theorem: the closed-form balance predicates against full profile
  comparison, for every subset, every weight pair, every modulus up to the
  bound.  The joint-uniformity form is checked as stated and is refuted at
  m = 12 (the sweep prints the counterexamples); the componentwise form is
  checked alongside and holds everywhere;
- corollary: the parity existence criterion against the divisibility one, and
  both against actual enumeration;
- counting: the closed-form balanced-set counts against enumeration (the
  joint-form count undercounts exactly where the joint predicate fails; the
  componentwise count matches);
- routes: convolution (exact) and transform (float) profiles against direct
  tuple counting on seeded random instances;
- identities: the transform-side identities behind the characterization
  (vanishing off/on the kernel, the annihilator identity, the complement
  difference transform), exhaustively for small m and through the scalar API
  on seeded samples for larger m;
- construction: the canonical balanced set passes both balance tests whenever
  existence holds;
- determinism: worker partitioning and repeated runs never change a witness
  list;
- searches: pinned regressions for the pair and t-ary searches.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from itertools import product

import numpy as np

from . import _kernels
from .arith import Instance, canonicalize, gcd_profile
from .characterization import (
    balanced_oracle,
    balanced_predicate,
    balanced_predicate_componentwise,
    canonical_balanced_set,
    count_balanced,
    count_balanced_componentwise,
    exists_divisibility,
    exists_parity,
    reduced_moduli,
)
from .profiles import rep_convolution, rep_naive
from .search import enumerate_balanced, pair_search, t_ary_balanced_search
from .sets import ResidueSet
from .spectral import (
    annihilator_divisor_count,
    annihilator_exp_sum,
    complement_difference_transform,
    rep_spectral,
    spectral_difference,
)

__all__ = ["CheckResult", "run_checks", "SCOPES"]

_MAX_FAILURES = 5

EXACT_ZERO_TOL = 1e-9
TRANSFORM_TOL = 1e-6


@dataclass(slots=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    elapsed_ms: float
    failures: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "elapsed_ms": self.elapsed_ms,
            "failures": list(self.failures),
        }


class _Collector:
    """Accumulates case counts and the first few counterexamples."""

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failures: list[str] = []
        self._start = time.perf_counter()

    def bump(self, n: int = 1):
        self.cases += n

    def fail(self, message: str):
        if len(self.failures) < _MAX_FAILURES:
            self.failures.append(message)

    def result(self) -> CheckResult:
        return CheckResult(
            name=self.name,
            passed=not self.failures,
            cases=self.cases,
            elapsed_ms=(time.perf_counter() - self._start) * 1000.0,
            failures=tuple(self.failures),
        )


def _weight_pairs(m: int):
    return product(range(m), repeat=2)


# ---------------------------------------------------------------------------
# theorem / corollary / counting


def sweep_theorem(max_m: int = 12) -> CheckResult:
    """Joint predicate == profile comparison for every A, every weight pair, m <= max_m.

    Fails honestly at m >= 12: the joint form is strictly stronger than
    balance on weight pairs whose reduced moduli are both > 1.
    """
    col = _Collector("theorem-joint")
    for m in range(2, max_m + 1):
        for k1, k2 in _weight_pairs(m):
            d = gcd_profile(canonicalize(m, (k1, k2))).d
            bad = _kernels.theorem_mismatch(m, k1, k2, d, 0, 1 << m)
            col.bump(1 << m)
            if bad >= 0:
                A = ResidueSet(m, bad)
                inst = canonicalize(m, (k1, k2))
                col.fail(
                    f"m={m} k=({k1},{k2}) A={A}: predicate="
                    f"{balanced_predicate(A, inst)} oracle={balanced_oracle(A, inst)}"
                )
    return col.result()


def sweep_theorem_componentwise(max_m: int = 12) -> CheckResult:
    """Componentwise predicate == profile comparison, same grid as sweep_theorem."""
    col = _Collector("theorem-componentwise")
    for m in range(2, max_m + 1):
        for k1, k2 in _weight_pairs(m):
            inst = canonicalize(m, (k1, k2))
            q1, q2 = reduced_moduli(inst)
            bad = _kernels.theorem_mismatch_componentwise(m, k1, k2, q1, q2, 0, 1 << m)
            col.bump(1 << m)
            if bad >= 0:
                A = ResidueSet(m, bad)
                col.fail(
                    f"m={m} k=({k1},{k2}) A={A}: predicate="
                    f"{balanced_predicate_componentwise(A, inst)} "
                    f"oracle={balanced_oracle(A, inst)}"
                )
    return col.result()


def sweep_corollary(max_m: int = 64, enum_max_m: int = 12) -> CheckResult:
    """Parity criterion == divisibility criterion, == (witnesses exist) where enumerable."""
    col = _Collector("corollary")
    for m in range(2, max_m + 1):
        for k1, k2 in _weight_pairs(m):
            inst = canonicalize(m, (k1, k2))
            par = exists_parity(inst)
            div = exists_divisibility(inst)
            col.bump()
            if par != div:
                col.fail(f"m={m} k=({k1},{k2}): parity={par} divisibility={div}")
    for m in range(2, enum_max_m + 1):
        for k1, k2 in _weight_pairs(m):
            inst = canonicalize(m, (k1, k2))
            found = len(_kernels.balanced_masks_oracle(m, k1, k2, 0, 1 << m)) > 0
            col.bump()
            if found != exists_divisibility(inst):
                col.fail(f"m={m} k=({k1},{k2}): enumeration found={found}")
    return col.result()


def sweep_counting(max_m: int = 12) -> CheckResult:
    """Joint-form count == exhaustive enumeration, m <= max_m.

    Fails honestly where the joint predicate does (it undercounts there).
    """
    col = _Collector("counting-joint")
    for m in range(2, max_m + 1):
        for k1, k2 in _weight_pairs(m):
            inst = canonicalize(m, (k1, k2))
            enum = len(_kernels.balanced_masks_oracle(m, k1, k2, 0, 1 << m))
            col.bump()
            if enum != count_balanced(inst):
                col.fail(
                    f"m={m} k=({k1},{k2}): enumerated {enum}, formula {count_balanced(inst)}"
                )
    return col.result()


def sweep_counting_componentwise(max_m: int = 12) -> CheckResult:
    """Componentwise count == exhaustive enumeration, m <= max_m."""
    col = _Collector("counting-componentwise")
    for m in range(2, max_m + 1):
        for k1, k2 in _weight_pairs(m):
            inst = canonicalize(m, (k1, k2))
            enum = len(_kernels.balanced_masks_oracle(m, k1, k2, 0, 1 << m))
            col.bump()
            if enum != count_balanced_componentwise(inst):
                col.fail(
                    f"m={m} k=({k1},{k2}): enumerated {enum}, "
                    f"componentwise formula {count_balanced_componentwise(inst)}"
                )
    return col.result()


# ---------------------------------------------------------------------------
# routes


def _random_instance(rng: np.random.Generator, max_m: int):
    m = int(rng.integers(2, max_m + 1))
    k1, k2 = (int(x) for x in rng.integers(0, m, 2))
    mask = 0
    for a in np.nonzero(rng.integers(0, 2, m))[0]:
        mask |= 1 << int(a)
    return ResidueSet(m, mask), canonicalize(m, (k1, k2))


def sweep_routes(
    samples: int = 1000,
    seed: int = 0,
    conv_max_m: int = 64,
    spectral_max_m: int = 32,
) -> CheckResult:
    """Convolution == naive exactly; transform within TRANSFORM_TOL; seeded."""
    col = _Collector("routes")
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        A, inst = _random_instance(rng, conv_max_m)
        col.bump()
        if rep_convolution(A, inst) != rep_naive(A, inst):
            col.fail(f"convolution mismatch: m={inst.m} k={inst.weights} A={A}")
    for _ in range(samples):
        A, inst = _random_instance(rng, spectral_max_m)
        naive = rep_naive(A, inst)
        worst = max(abs(rep_spectral(A, inst, n) - naive[n]) for n in range(inst.m))
        col.bump()
        if worst >= TRANSFORM_TOL:
            col.fail(f"spectral residual {worst:.3g}: m={inst.m} k={inst.weights} A={A}")
    return col.result()


# ---------------------------------------------------------------------------
# transform identities


def _exp_tables(m: int):
    omega = np.exp(2j * np.pi * np.arange(m) / m)
    mult = np.outer(np.arange(m), np.arange(m)) % m
    return omega, mult


def sweep_identities_exhaustive(max_m: int = 10) -> list[CheckResult]:
    """The transform identities over every subset and weight pair, m <= max_m.

    Emits three results: vanishing of the complement difference transform off
    the kernel, vanishing on the common kernel at half size, and agreement of
    the transform-side profile difference with the exact one.  Residues are
    evaluated against a cached root table, so "exact zero" claims are tested
    at EXACT_ZERO_TOL and transform agreement at TRANSFORM_TOL.
    """
    off_col = _Collector("identity-vanish-off-kernel")
    on_col = _Collector("identity-vanish-on-kernel")
    diff_col = _Collector("identity-difference-transform")
    for m in range(2, max_m + 1):
        omega, mult = _exp_tables(m)
        nonzero = mult != 0  # [k, x] true iff m does not divide k*x
        s_full = omega[mult].sum(axis=0)
        u_full = (mult[:, :, None] == np.arange(m)).sum(axis=1)  # [k, j]
        # E[x, n] = exp(-2*pi*i*n*x/m); roll[n, j] = (n - j) % m
        E = omega[(-np.outer(np.arange(m), np.arange(m))) % m]
        roll = (np.arange(m)[:, None] - np.arange(m)[None, :]) % m
        off_mask3 = nonzero[:, None, :] & nonzero[None, :, :]
        on_mask3 = ~nonzero[:, None, :] & ~nonzero[None, :, :]
        for mask in range(1 << m):
            members = [a for a in range(m) if (mask >> a) & 1]
            if members:
                s_a = omega[mult[members]].sum(axis=0)
                u_a = (mult[:, members][:, :, None] == np.arange(m)).sum(axis=1)
            else:
                s_a = np.zeros(m, dtype=complex)
                u_a = np.zeros((m, m), dtype=np.int64)
            s_b = s_full - s_a
            u_b = u_full - u_a
            g_a = s_a[mult]
            g_b = s_b[mult]
            g = g_a[:, None, :] * g_a[None, :, :] - g_b[:, None, :] * g_b[None, :, :]

            worst_off = np.abs(g[off_mask3]).max() if off_mask3.any() else 0.0
            off_col.bump(int(off_mask3.sum()))
            if worst_off >= EXACT_ZERO_TOL:
                off_col.fail(f"m={m} mask={mask:#x}: residual {worst_off:.3g}")

            if m % 2 == 0 and 2 * len(members) == m:
                worst_on = np.abs(g[on_mask3]).max()
                on_col.bump(int(on_mask3.sum()))
                if worst_on >= EXACT_ZERO_TOL:
                    on_col.fail(f"m={m} mask={mask:#x}: residual {worst_on:.3g}")

            prof_a = np.einsum("aj,bnj->abn", u_a, u_a[:, roll])
            prof_b = np.einsum("aj,bnj->abn", u_b, u_b[:, roll])
            d_trans = np.tensordot(g, E, axes=([2], [0])) / m
            worst_diff = np.abs(d_trans - (prof_a - prof_b)).max()
            diff_col.bump(m * m * m)
            if worst_diff >= TRANSFORM_TOL:
                diff_col.fail(f"m={m} mask={mask:#x}: residual {worst_diff:.3g}")
    return [off_col.result(), on_col.result(), diff_col.result()]


def sweep_annihilator_exhaustive(max_m: int = 10) -> CheckResult:
    """Annihilator identity for every T and every (k, l, n), m <= max_m.

    Both sides depend on k only through gcd(k, m), exactly, so the sweep
    evaluates one representative per divisor of m and covers every k.
    """
    col = _Collector("identity-annihilator")
    for m in range(2, max_m + 1):
        omega, mult = _exp_tables(m)
        divisors = [dd for dd in range(1, m + 1) if m % dd == 0]
        ells = np.arange(m)
        for mask in range(1 << m):
            members = np.array([a for a in range(m) if (mask >> a) & 1], dtype=np.int64)
            if members.size:
                s_t = omega[mult[members]].sum(axis=0)
            else:
                s_t = np.zeros(m, dtype=complex)
            for dd in divisors:
                xs = np.arange(0, m, m // dd)
                lx = np.outer(ells, xs) % m
                nx = (-np.outer(ells, xs)) % m
                lhs = np.einsum("lx,nx->ln", s_t[lx], omega[nx])
                if members.size:
                    lt = np.outer(ells, members) % dd
                    rhs = dd * (lt[:, None, :] == (ells % dd)[None, :, None]).sum(axis=2)
                else:
                    rhs = np.zeros((m, m), dtype=np.int64)
                worst = np.abs(lhs - rhs).max()
                if worst >= TRANSFORM_TOL:
                    col.fail(f"m={m} mask={mask:#x} gcd={dd}: residual {worst:.3g}")
            col.bump(m * m * m)  # every (k, l, n) is covered through its gcd class
    return col.result()


def sweep_identities_sampled(
    samples: int = 400, seed: int = 0, max_m: int = 32
) -> CheckResult:
    """The same identities through the scalar API on seeded random inputs."""
    col = _Collector("identity-sampled-api")
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        A, inst = _random_instance(rng, max_m)
        m = inst.m
        k1, k2 = inst.weights
        x = int(rng.integers(0, m))
        n = int(rng.integers(0, m))
        l = int(rng.integers(0, m))
        k = int(rng.integers(0, m))

        g = spectral_difference(A, inst, x)
        if (k1 * x) % m != 0 and (k2 * x) % m != 0:
            col.bump()
            if abs(g) >= EXACT_ZERO_TOL:
                col.fail(f"off-kernel residual {abs(g):.3g}: m={m} k={inst.weights} x={x}")
        elif (k1 * x) % m == 0 and (k2 * x) % m == 0 and 2 * len(A) == m:
            col.bump()
            if abs(g) >= EXACT_ZERO_TOL:
                col.fail(f"on-kernel residual {abs(g):.3g}: m={m} k={inst.weights} x={x}")

        lhs = annihilator_exp_sum(A, k, l, n)
        rhs = annihilator_divisor_count(A, k, l, n)
        col.bump()
        if abs(lhs - rhs) >= TRANSFORM_TOL:
            col.fail(f"annihilator residual {abs(lhs - rhs):.3g}: m={m} k={k} l={l} n={n}")

        exact = rep_naive(A, inst)[n] - rep_naive(A.complement(), inst)[n]
        trans = complement_difference_transform(A, inst, n)
        col.bump()
        if abs(trans - exact) >= TRANSFORM_TOL:
            col.fail(
                f"difference-transform residual {abs(trans - exact):.3g}: "
                f"m={m} k={inst.weights} n={n}"
            )
    return col.result()


# ---------------------------------------------------------------------------
# construction / determinism / search regressions


def sweep_construction(max_m: int = 64, oracle_max_m: int = 12) -> CheckResult:
    """Canonical set passes the predicate everywhere and the oracle where cheap."""
    col = _Collector("construction")
    for m in range(2, max_m + 1):
        for k1, k2 in _weight_pairs(m):
            inst = canonicalize(m, (k1, k2))
            if not exists_divisibility(inst):
                continue
            A = canonical_balanced_set(inst)
            col.bump()
            if not balanced_predicate(A, inst):
                col.fail(f"m={m} k=({k1},{k2}): construction fails predicate, A={A}")
            if m <= oracle_max_m:
                col.bump()
                if not balanced_oracle(A, inst):
                    col.fail(f"m={m} k=({k1},{k2}): construction fails oracle, A={A}")
    return col.result()


def sweep_determinism(
    instances=((12, (4, 6)), (10, (1, 1))), worker_counts=(1, 2, 8)
) -> CheckResult:
    """Witness lists are byte-identical across worker counts and repeated runs."""
    col = _Collector("determinism")
    for m, weights in instances:
        inst = canonicalize(m, weights)
        blobs = []
        for w in worker_counts:
            report = enumerate_balanced(inst, workers=w)
            blobs.append(json.dumps(report.witness_rows()).encode())
        blobs.append(json.dumps(enumerate_balanced(inst, workers=worker_counts[0]).witness_rows()).encode())
        col.bump(len(blobs) - 1)
        if len(set(blobs)) != 1:
            col.fail(f"m={m} k={weights}: witness lists differ across runs")
    return col.result()


def sweep_search_regressions() -> CheckResult:
    """Pinned hand-checked outcomes for the pair and t-ary searches."""
    col = _Collector("searches")

    report = pair_search(canonicalize(2, (1, 1)))
    pair = (ResidueSet.from_members(2, [0]), ResidueSet.from_members(2, [1]))
    col.bump()
    if pair not in report.witnesses:
        col.fail("pair search m=2 k=(1,1): expected pair {0},{1} missing")

    report = t_ary_balanced_search(canonicalize(2, (1, 1, 2)))
    col.bump()
    if ResidueSet.from_members(2, [0]) not in report.witnesses:
        col.fail("t-ary search m=2 k=(1,1,2): expected witness {0} missing")

    report = t_ary_balanced_search(canonicalize(2, (1, 1, 1)))
    col.bump()
    if report.counts != 0:
        col.fail(f"t-ary search m=2 k=(1,1,1): expected no witnesses, got {report.counts}")
    return col.result()


# ---------------------------------------------------------------------------
# driver

SCOPES = (
    "theorem",
    "corollary",
    "counting",
    "routes",
    "identities",
    "construction",
    "determinism",
    "searches",
)


def run_checks(max_m: int = 12, seed: int = 0, scopes=SCOPES) -> list[CheckResult]:
    """Run the selected sweeps; --max-m bounds the subset-exhaustive ones.

    Scalar sweeps (corollary parity, routes, identities, construction
    predicate side) keep their fixed desk-scale ranges, which are cheap at
    any max_m.
    """
    results: list[CheckResult] = []
    if "theorem" in scopes:
        results.append(sweep_theorem(max_m))
        results.append(sweep_theorem_componentwise(max_m))
    if "corollary" in scopes:
        results.append(sweep_corollary(64, enum_max_m=min(max_m, 12)))
    if "counting" in scopes:
        results.append(sweep_counting(min(max_m, 12)))
        results.append(sweep_counting_componentwise(min(max_m, 12)))
    if "routes" in scopes:
        results.append(sweep_routes(seed=seed))
    if "identities" in scopes:
        results.extend(sweep_identities_exhaustive(10))
        results.append(sweep_annihilator_exhaustive(10))
        results.append(sweep_identities_sampled(seed=seed))
    if "construction" in scopes:
        results.append(sweep_construction())
    if "determinism" in scopes:
        results.append(sweep_determinism())
    if "searches" in scopes:
        results.append(sweep_search_regressions())
    return results
