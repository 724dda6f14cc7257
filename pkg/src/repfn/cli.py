"""Command-line front end.

Commands: check, exists, profile, enumerate, pairs, tary, verify.

Exit codes are a stable contract: 0 ok/true, 1 ok/false, 2 internal
contradiction (a verdict disagreement that should be impossible), 64 usage
error, 65 input out of range or over a search bound.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from .arith import canonicalize, gcd_profile
from .characterization import (
    balanced_oracle,
    balanced_predicate,
    balanced_predicate_componentwise,
    canonical_balanced_set,
    count_balanced,
    count_balanced_componentwise,
    exists_divisibility,
    exists_parity,
)
from .profiles import rep_convolution, rep_naive
from .search import (
    DEFAULT_WITNESS_CAP,
    BoundExceededError,
    enumerate_balanced,
    pair_search,
    resolved_bound,
    t_ary_balanced_search,
)
from .sets import ResidueSet
from .spectral import rep_spectral
from .verification import SCOPES, run_checks

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_VIOLATION = 2
EXIT_USAGE = 64
EXIT_RANGE = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight list {text!r}") from None


def _set_literal(text: str) -> tuple[int, ...]:
    try:
        residues = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad set literal {text!r}") from None
    if len(set(residues)) != len(residues):
        raise argparse.ArgumentTypeError(f"duplicate residues in {text!r}")
    return residues


def _modulus(text: str) -> int:
    try:
        m = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad modulus {text!r}") from None
    if m < 2:
        raise argparse.ArgumentTypeError(f"modulus must be >= 2, got {m}")
    return m


def _add_common(p: argparse.ArgumentParser, *, out=True):
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    if out:
        p.add_argument("--out", metavar="PATH", help="write the report to PATH")


def _add_search_flags(p: argparse.ArgumentParser):
    p.add_argument("--csv", action="store_true", help="emit the witness list as CSV")
    p.add_argument(
        "--workers",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes for the scan (default: machine parallelism)",
    )
    p.add_argument(
        "--witness-cap",
        type=int,
        default=DEFAULT_WITNESS_CAP,
        help="retain at most this many witnesses (counts stay exact)",
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="repfn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[], help="test one set for balance")
    p.add_argument("-m", type=_modulus, required=True)
    p.add_argument("-k", type=_weights, required=True, metavar="K1,K2")
    p.add_argument("-A", type=_set_literal, required=True, metavar="A0,A1,...")
    _add_common(p)

    p = sub.add_parser("exists", help="decide whether any balanced set exists")
    p.add_argument("-m", type=_modulus, required=True)
    p.add_argument("-k", type=_weights, required=True, metavar="K1,K2")
    _add_common(p)

    p = sub.add_parser("profile", help="print representation profiles")
    p.add_argument("-m", type=_modulus, required=True)
    p.add_argument("-k", type=_weights, required=True, metavar="K1,...,KT")
    p.add_argument("-A", type=_set_literal, required=True, metavar="A0,A1,...")
    p.add_argument(
        "--route",
        choices=["naive", "exact", "spectral"],
        default="exact",
        help="computation route (default: exact convolution)",
    )
    _add_common(p)

    p = sub.add_parser("enumerate", help="enumerate all balanced sets")
    p.add_argument("-m", type=_modulus, required=True)
    p.add_argument("-k", type=_weights, required=True, metavar="K1,K2")
    p.add_argument(
        "--mode",
        choices=["oracle", "predicate", "componentwise"],
        default="oracle",
        help="oracle compares profiles; predicate applies the joint-uniformity "
        "closed form (too strong on some instances); componentwise applies "
        "the split criterion that matches the oracle",
    )
    _add_search_flags(p)
    _add_common(p)

    p = sub.add_parser("pairs", help="search for profile-equal set pairs")
    p.add_argument("-m", type=_modulus, required=True)
    p.add_argument("-k", type=_weights, required=True, metavar="K1,K2")
    p.add_argument(
        "--exclude-trivial",
        action="store_true",
        help="drop pairs where B is the complement of A",
    )
    _add_search_flags(p)
    _add_common(p)

    p = sub.add_parser("tary", help="search for balanced sets under t >= 3 weights")
    p.add_argument("-m", type=_modulus, required=True)
    p.add_argument("-k", type=_weights, required=True, metavar="K1,...,KT")
    _add_search_flags(p)
    _add_common(p)

    p = sub.add_parser("verify", help="run the full verification sweep suite")
    p.add_argument(
        "--max-m",
        type=_modulus,
        default=12,
        help="bound for the subset-exhaustive sweeps (default 12)",
    )
    p.add_argument("--seed", type=int, default=0, help="seed for sampled sweeps")
    p.add_argument(
        "--scope",
        default="all",
        help="comma-separated subset of: " + ",".join(SCOPES),
    )
    p.add_argument("--workers", type=int, default=None, help=argparse.SUPPRESS)
    _add_common(p)

    return parser


def _emit(args, text: str):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _members(A: ResidueSet) -> list[int]:
    return list(A.members)


def _instance_doc(inst) -> dict:
    return {"m": inst.m, "weights": list(inst.weights)}


def _gcd_doc(inst) -> dict:
    g = gcd_profile(inst)
    return {"d1": g.d1, "d2": g.d2, "d3": g.d3, "d": g.d}


def _fmt_gcd(inst) -> str:
    g = gcd_profile(inst)
    return f"d1={g.d1} d2={g.d2} d3={g.d3} d={g.d}"


def _build_set(m: int, residues) -> ResidueSet:
    # range errors here are EXIT_RANGE, not usage errors
    return ResidueSet.from_members(m, residues)


def _cmd_check(args) -> int:
    start = time.perf_counter()
    if len(args.k) != 2:
        raise UsageError("check requires exactly 2 weights")
    inst = canonicalize(args.m, args.k)
    A = _build_set(args.m, args.A)
    pred = balanced_predicate(A, inst)
    comp = balanced_predicate_componentwise(A, inst)
    oracle = balanced_oracle(A, inst) if args.m <= resolved_bound("oracle") else None
    agree = oracle is None or (pred == oracle and comp == oracle)
    prof_a = rep_convolution(A, inst)
    prof_b = rep_convolution(A.complement(), inst)
    elapsed_ms = (time.perf_counter() - start) * 1000.0

    if args.json:
        doc = {
            "command": "check",
            "instance": _instance_doc(inst),
            "gcd_profile": _gcd_doc(inst),
            "verdicts": {
                "predicate": pred,
                "componentwise": comp,
                "oracle": oracle,
                "agree": agree,
            },
            "profiles": {"A": list(prof_a.counts), "complement": list(prof_b.counts)},
            "elapsed_ms": elapsed_ms,
        }
        _emit(args, json.dumps(doc, indent=2))
    else:
        lines = [
            f"instance: m={inst.m} weights={list(inst.weights)}",
            f"gcd profile: {_fmt_gcd(inst)}",
            f"A = {A} (size {len(A)})",
            f"profile(A)          = {list(prof_a.counts)}",
            f"profile(complement) = {list(prof_b.counts)}",
            f"joint predicate verdict:         {'balanced' if pred else 'not balanced'}",
            f"componentwise predicate verdict: {'balanced' if comp else 'not balanced'}",
        ]
        if oracle is None:
            lines.append(f"oracle verdict: skipped (m > {resolved_bound('oracle')})")
        else:
            lines.append(f"oracle verdict: {'balanced' if oracle else 'not balanced'}")
            lines.append(f"verdicts agree: {agree}")
        _emit(args, "\n".join(lines))

    if not agree:
        return EXIT_VIOLATION
    balanced = oracle if oracle is not None else comp
    return EXIT_OK if balanced else EXIT_FALSE


def _cmd_exists(args) -> int:
    start = time.perf_counter()
    if len(args.k) != 2:
        raise UsageError("exists requires exactly 2 weights")
    inst = canonicalize(args.m, args.k)
    par = exists_parity(inst)
    div = exists_divisibility(inst)
    agree = par == div
    counts = count_balanced_componentwise(inst)
    counts_joint = count_balanced(inst)
    witness = canonical_balanced_set(inst) if div else None
    elapsed_ms = (time.perf_counter() - start) * 1000.0

    if args.json:
        doc = {
            "command": "exists",
            "instance": _instance_doc(inst),
            "gcd_profile": _gcd_doc(inst),
            "verdicts": {"parity": par, "divisibility": div, "agree": agree, "exists": div},
            "counts": counts,
            "counts_joint_uniform": counts_joint,
            "witness": _members(witness) if witness else None,
            "elapsed_ms": elapsed_ms,
        }
        _emit(args, json.dumps(doc, indent=2))
    else:
        lines = [
            f"instance: m={inst.m} weights={list(inst.weights)}",
            f"gcd profile: {_fmt_gcd(inst)}",
            f"divisibility criterion (2d | m): {div}",
            f"parity criterion:                {par}",
        ]
        if not agree:
            lines.append("CRITERIA DISAGREE (internal contradiction)")
        elif div:
            lines.append(f"balanced sets exist; count = {counts} ({counts_joint} uniform mod d)")
            lines.append(f"canonical witness: {witness}")
        else:
            lines.append("no balanced set exists; count = 0")
        _emit(args, "\n".join(lines))

    if not agree:
        return EXIT_VIOLATION
    return EXIT_OK if div else EXIT_FALSE


def _cmd_profile(args) -> int:
    start = time.perf_counter()
    inst = canonicalize(args.m, args.k)
    if args.route == "spectral" and inst.t != 2:
        raise UsageError("spectral route requires exactly 2 weights")
    A = _build_set(args.m, args.A)
    B = A.complement()
    if args.route == "naive":
        prof_a, prof_b = list(rep_naive(A, inst).counts), list(rep_naive(B, inst).counts)
    elif args.route == "exact":
        prof_a = list(rep_convolution(A, inst).counts)
        prof_b = list(rep_convolution(B, inst).counts)
    else:
        prof_a = [rep_spectral(A, inst, n) for n in range(inst.m)]
        prof_b = [rep_spectral(B, inst, n) for n in range(inst.m)]
    elapsed_ms = (time.perf_counter() - start) * 1000.0

    if args.json:
        doc = {
            "command": "profile",
            "instance": _instance_doc(inst),
            "route": args.route,
            "profiles": {"A": prof_a, "complement": prof_b},
            "elapsed_ms": elapsed_ms,
        }
        _emit(args, json.dumps(doc, indent=2))
    else:
        _emit(
            args,
            "\n".join(
                [
                    f"instance: m={inst.m} weights={list(inst.weights)} route={args.route}",
                    f"A = {A}",
                    f"profile(A)          = {prof_a}",
                    f"profile(complement) = {prof_b}",
                ]
            ),
        )
    return EXIT_OK


def _witness_csv(report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    if report.mode == "pairs":
        for a, b in report.witnesses:
            writer.writerow([",".join(map(str, a.members)), ",".join(map(str, b.members))])
    else:
        for w in report.witnesses:
            writer.writerow([",".join(map(str, w.members))])
    return buf.getvalue().rstrip("\n")


def _emit_search(args, report, extra_lines=()) -> int:
    if args.json and args.csv:
        raise UsageError("--json and --csv are mutually exclusive")
    if args.json:
        doc = {"command": args.command, **report.to_json_dict()}
        if report.instance.t == 2:
            doc["gcd_profile"] = _gcd_doc(report.instance)
        _emit(args, json.dumps(doc, indent=2))
    elif args.csv:
        _emit(args, _witness_csv(report))
    else:
        inst = report.instance
        lines = [f"instance: m={inst.m} weights={list(inst.weights)} mode={report.mode}"]
        lines.extend(extra_lines)
        shown = report.witnesses[:50]
        lines.append(f"witnesses ({report.counts} total, showing {len(shown)}):")
        if report.mode == "pairs":
            lines.extend(f"  {a} / {b}" for a, b in shown)
        else:
            lines.extend(f"  {w}" for w in shown)
        lines.append(
            f"counts={report.counts} exhaustive={report.exhaustive} "
            f"truncated={report.truncated} elapsed={report.elapsed_ms:.1f}ms"
        )
        _emit(args, "\n".join(lines))
    return EXIT_OK if report.counts > 0 else EXIT_FALSE


def _cmd_enumerate(args) -> int:
    if len(args.k) != 2:
        raise UsageError("enumerate requires exactly 2 weights")
    inst = canonicalize(args.m, args.k)
    report = enumerate_balanced(
        inst,
        mode=args.mode,
        workers=args.workers,
        witness_cap=args.witness_cap,
    )
    return _emit_search(args, report)


def _cmd_pairs(args) -> int:
    if len(args.k) != 2:
        raise UsageError("pairs requires exactly 2 weights")
    inst = canonicalize(args.m, args.k)
    report = pair_search(
        inst,
        exclude_trivial=args.exclude_trivial,
        workers=args.workers,
        witness_cap=args.witness_cap,
    )
    return _emit_search(args, report)


def _cmd_tary(args) -> int:
    if len(args.k) < 3:
        raise UsageError("tary requires at least 3 weights")
    inst = canonicalize(args.m, args.k)
    report = t_ary_balanced_search(
        inst, workers=args.workers, witness_cap=args.witness_cap
    )
    return _emit_search(args, report)


def _cmd_verify(args) -> int:
    start = time.perf_counter()
    if args.scope == "all":
        scopes = SCOPES
    else:
        scopes = tuple(s.strip() for s in args.scope.split(","))
        unknown = [s for s in scopes if s not in SCOPES]
        if unknown:
            raise UsageError(f"unknown scope(s): {', '.join(unknown)}")
    results = run_checks(max_m=args.max_m, seed=args.seed, scopes=scopes)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    all_passed = all(r.passed for r in results)

    if args.json:
        doc = {
            "command": "verify",
            "max_m": args.max_m,
            "seed": args.seed,
            "scope": list(scopes),
            "checks": [r.to_json_dict() for r in results],
            "passed": all_passed,
            "elapsed_ms": elapsed_ms,
        }
        _emit(args, json.dumps(doc, indent=2))
    else:
        lines = []
        for r in results:
            status = "pass" if r.passed else "FAIL"
            lines.append(
                f"{r.name:<34s} {status}  ({r.cases} cases, {r.elapsed_ms:.0f}ms)"
            )
            for f in r.failures:
                lines.append(f"    counterexample: {f}")
        lines.append(
            f"{'all checks passed' if all_passed else 'CHECKS FAILED'} "
            f"({len(results)} checks, {elapsed_ms:.0f}ms)"
        )
        _emit(args, "\n".join(lines))
    return EXIT_OK if all_passed else EXIT_VIOLATION


class UsageError(Exception):
    pass


_HANDLERS = {
    "check": _cmd_check,
    "exists": _cmd_exists,
    "profile": _cmd_profile,
    "enumerate": _cmd_enumerate,
    "pairs": _cmd_pairs,
    "tary": _cmd_tary,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"repfn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundExceededError as exc:
        print(f"repfn: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except ValueError as exc:
        print(f"repfn: {exc}", file=sys.stderr)
        return EXIT_RANGE


if __name__ == "__main__":
    sys.exit(main())
