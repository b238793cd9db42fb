"""Command-line interface.

One subcommand per library operation; every run writes a single JSON report
to stdout (stable key order, canonical rational strings) and diagnostics to
stderr.  Exit codes: 0 success, 1 domain error (bad input), 2 mathematics
failure (oracle disagreement or a falsified invariant, which must never
happen on a valid input), 64 usage.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .errors import InputError, MathIntegrityError
from .functionals import check_S1, check_S2, family_functional, reconstruct_f, \
    removed_distance_functional, verify_reconstruction
from .greedoid import check_greedoid_axioms, check_prefix_theorem, max_perimeter_sets
from .greedy import all_greedy_orders, greedy_order, increment_signature
from .oracle import brute_all_permutation_perimeters, brute_dist_r, brute_max_perimeter
from .perimeter import dist_r, per_r_ordered, per_r_set
from .rational import format_rational
from .specfile import load_family, load_triple
from .triple import UltraTriple

_ALL_TRACES_CAP = 8


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise _UsageError(message)


def _rat(x: Fraction) -> str:
    return format_rational(x)


def _rats(xs) -> list[str]:
    return [format_rational(x) for x in xs]


def _point_list(t: UltraTriple, labels) -> list[str]:
    return t.sorted_points(labels)

def _set_of_sets(t: UltraTriple, sets) -> list[list[str]]:
    return sorted((t.sorted_points(s) for s in sets),
                  key=lambda s: [t.index(p) for p in s])


def _parse_points(raw: str) -> list[str]:
    if raw == "":
        return []
    return [part for part in raw.split(",")]


def _digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _trace_json(trace) -> dict:
    return {"perm": list(trace.perm), "increments": _rats(trace.increments)}


# ---------------------------------------------------------------- commands

def _cmd_validate(ns):
    t = load_triple(ns.input)
    results = {"valid": True, "n_points": len(t.points), "points": list(t.points)}
    verification = None
    if ns.verify:
        verification = {"ultrametric_violations": 0, "agrees": True}
    return results, verification, True


def _cmd_dist(ns):
    t = load_triple(ns.input)
    group = _parse_points(ns.set)
    value = dist_r(t, group, ns.point, ns.r)
    results = {"value": _rat(value)}
    verification = None
    ok = True
    if ns.verify:
        oracle = brute_dist_r(t, group, ns.point, ns.r)
        ok = oracle.value == value
        verification = {
            "oracle_value": _rat(oracle.value),
            "witnesses": _set_of_sets(t, oracle.witnesses),
            "agrees": ok,
        }
    return results, verification, ok


def _cmd_perimeter(ns):
    t = load_triple(ns.input)
    if (ns.set is None) == (ns.ordered is None):
        raise InputError("exactly one of --set / --ordered is required")
    if ns.ordered is not None:
        seq = _parse_points(ns.ordered)
        value = per_r_ordered(t, seq, ns.r)
        members = seq
    else:
        members = _parse_points(ns.set)
        value = per_r_set(t, members, ns.r)
    results = {"value": _rat(value)}
    verification = None
    ok = True
    if ns.verify:
        values = brute_all_permutation_perimeters(t, members, ns.r)
        ok = values == {value}
        verification = {
            "ordering_values": sorted(_rats(values)),
            "singleton": len(values) == 1,
            "agrees": ok,
        }
    return results, verification, ok


def _pool_and_m(t, ns):
    pool = _parse_points(ns.pool) if ns.pool is not None else list(t.points)
    m = ns.m if ns.m is not None else len(pool)
    return pool, m


def _verify_against_max(t, trace, r) -> dict:
    # Greedy prefixes must attain the exhaustive per-size maxima.
    agrees = True
    for k in range(len(trace.perm) + 1):
        value = per_r_set(t, trace.perm[:k], r)
        if value != brute_max_perimeter(t, k, r).value:
            agrees = False
            break
    return {"prefix_maxima_agree": agrees}


def _cmd_order(ns):
    t = load_triple(ns.input)
    pool, m = _pool_and_m(t, ns)
    full_pool = set(pool) == set(t.points)
    ok = True
    if ns.ties == "all":
        traces = all_greedy_orders(t, pool, m, ns.r)
        results = {"traces": [_trace_json(tr) for tr in traces]}
        increments_agree = len({tr.increments for tr in traces}) == 1
        head = traces[0]
    else:
        head = greedy_order(t, pool, m, ns.r)
        results = _trace_json(head)
        increments_agree = None
    verification = None
    if ns.verify:
        if full_pool:
            verification = _verify_against_max(t, head, ns.r)
        else:
            verification = {"skipped": "pool does not cover the ground set"}
        if increments_agree is not None:
            verification["increments_agree"] = increments_agree
        ok = all(v for v in verification.values() if isinstance(v, bool))
    return results, verification, ok


def _cmd_signature(ns):
    t = load_triple(ns.input)
    pool, m = _pool_and_m(t, ns)
    sig = increment_signature(t, pool, m, ns.r)
    results = {"increments": _rats(sig)}
    verification = None
    ok = True
    if ns.verify:
        verification = {}
        if len(pool) <= _ALL_TRACES_CAP:
            traces = all_greedy_orders(t, pool, m, ns.r)
            verification["n_traces"] = len(traces)
            verification["all_traces_agree"] = {tr.increments for tr in traces} == {sig}
        if set(pool) == set(t.points):
            maxima = [brute_max_perimeter(t, k, ns.r).value for k in range(m + 1)]
            diffs = tuple(maxima[k] - maxima[k - 1] for k in range(1, m + 1))
            verification["oracle_diffs_agree"] = diffs == sig
        ok = all(v for v in verification.values() if isinstance(v, bool))
    return results, verification, ok


def _cmd_maxsets(ns):
    t = load_triple(ns.input)
    fam = max_perimeter_sets(t, ns.r, ns.kmax)
    results = {"by_size": [
        {"k": k, "value": _rat(fam.max_value[k]), "sets": _set_of_sets(t, fam.by_size[k])}
        for k in sorted(fam.by_size)
    ]}
    verification = None
    ok = True
    if ns.verify:
        agrees = True
        for k in sorted(fam.by_size):
            oracle = brute_max_perimeter(t, k, ns.r)
            if oracle.value != fam.max_value[k] or oracle.witnesses != fam.by_size[k]:
                agrees = False
                break
        verification = {"oracle_agrees": agrees}
        ok = agrees
    return results, verification, ok


def _failure_json(failure) -> dict | None:
    if failure is None:
        return None
    return {
        "axiom": failure.axiom,
        "A": list(failure.set_a),
        "B": None if failure.set_b is None else list(failure.set_b),
        "details": failure.details,
    }


def _cmd_greedoid(ns):
    t = load_triple(ns.input)
    fam = max_perimeter_sets(t, ns.r, ns.kmax)
    report = check_greedoid_axioms(fam)
    results = {
        "axioms": {"i": report.axiom_i, "ii": report.axiom_ii,
                   "iii": report.axiom_iii, "iv": report.axiom_iv},
        "counterexample": _failure_json(report.failure),
    }
    ok = report.all_hold
    verification = None
    if ns.verify:
        agrees = all(brute_max_perimeter(t, k, ns.r).value == fam.max_value[k]
                     for k in sorted(fam.by_size))
        verification = {"oracle_agrees": agrees}
        ok = ok and agrees
    return results, verification, ok


def _cmd_prefix_check(ns):
    t = load_triple(ns.input)
    members = _parse_points(ns.set)
    trace = check_prefix_theorem(t, members, ns.r)
    results = _trace_json(trace)
    results["prefix"] = _point_list(t, members)
    verification = None
    ok = True
    if ns.verify:
        k = len(members)
        prefix_is_set = set(trace.perm[:k]) == set(members)
        condition = True
        for p in range(len(trace.perm)):
            chosen = trace.perm[:p]
            best = max(t.weight(x) + dist_r(t, chosen, x, ns.r)
                       for x in t.points if x not in set(chosen))
            if trace.increments[p] != best:
                condition = False
                break
        verification = {"prefix_is_set": prefix_is_set, "greedy_condition": condition}
        ok = prefix_is_set and condition
    return results, verification, ok


def _functional_from_flags(ns, need_depth: int | None = None):
    if (ns.r is None) == (ns.family is None):
        raise InputError("exactly one of --r / --family is required")
    if ns.r is not None:
        return removed_distance_functional(ns.r), None
    fam = load_family(ns.family)
    if need_depth is not None and fam.depth < need_depth:
        raise InputError(f"family depth {fam.depth} is below the required {need_depth}")
    return family_functional(fam), ns.family


def _cmd_props(ns):
    t = load_triple(ns.input)
    functional, _ = _functional_from_flags(ns, need_depth=ns.cap + 1)
    s1 = check_S1(t, functional, ns.cap)
    s2 = check_S2(t, functional, ns.cap)
    results = {
        "functional": functional.name,
        "s1_counterexamples": [
            {"C": list(c.C), "x": c.x, "y": c.y, "lhs": _rat(c.lhs), "rhs": _rat(c.rhs)}
            for c in s1
        ],
        "s2_counterexamples": [
            {"C": list(c.C), "x": c.x, "y": c.y,
             "dist_x": _rat(c.dist_x), "dist_y": _rat(c.dist_y)}
            for c in s2
        ],
    }
    ok = not s1 and not s2
    verification = {"exhaustive_to": ns.cap, "laws_hold": ok} if ns.verify else None
    return results, verification, ok


def _cmd_reconstruct(ns):
    functional, family_path = _functional_from_flags(ns, need_depth=ns.mmax)
    domain = [int(part) for part in ns.domain.split(",") if part]
    fam = reconstruct_f(functional, ns.p, ns.mmax, domain)
    ok, witness = verify_reconstruction(functional, fam, ns.p, ns.mmax, domain)
    results = {
        "tables": [
            [[_rat(k), _rat(v)] for k, v in sorted(table.items())]
            for table in fam.tables
        ],
        "monotone": fam.monotone,
        "verified_to_depth": ns.mmax if ok else 0,
        "counterexample": None if witness is None else list(witness),
    }
    good = ok and fam.monotone
    verification = {"round_trip": ok, "monotone": fam.monotone} if ns.verify else None
    return results, verification, good, family_path


# ---------------------------------------------------------------- plumbing

def _build_parser() -> _Parser:
    parser = _Parser(prog="ultragreedy", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, with_input=True):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        if with_input:
            p.add_argument("--input", required=True, help="triple spec file (explicit or padic JSON)")
        p.add_argument("--verify", action="store_true",
                       help="re-derive the results with the brute-force oracles")
        return p

    add("validate", _cmd_validate, "load a triple spec and run the full validation")

    p = add("dist", _cmd_dist, "removed distance from a point to a set")
    p.add_argument("--set", required=True, help="comma-separated point labels")
    p.add_argument("--point", required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("perimeter", _cmd_perimeter, "perimeter of a set or of an explicit ordering")
    p.add_argument("--set", help="comma-separated point labels (canonical order)")
    p.add_argument("--ordered", help="comma-separated point labels, order significant")
    p.add_argument("--r", type=int, required=True)

    p = add("order", _cmd_order, "greedy maximum-perimeter ordering")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, help="length of the ordering (default: whole pool)")
    p.add_argument("--pool", help="restrict the candidate pool (default: all points)")
    p.add_argument("--ties", choices=("first", "all"), default="first")

    p = add("signature", _cmd_signature, "per-step increment sequence of the greedy ordering")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--pool")

    p = add("maxsets", _cmd_maxsets, "all maximum-perimeter subsets per size")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)

    p = add("greedoid", _cmd_greedoid, "greedoid axiom report for the maximum-perimeter family")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)

    p = add("prefix-check", _cmd_prefix_check, "extend a maximum-perimeter set to a full greedy ordering")
    p.add_argument("--set", required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("props", _cmd_props, "exhaustive exchange/domination law check for a functional")
    p.add_argument("--cap", type=int, required=True, help="largest |C| to enumerate")
    p.add_argument("--r", type=int)
    p.add_argument("--family", help="monotone family file")

    p = add("reconstruct", _cmd_reconstruct,
            "recover rank maps from a profile-determined functional", with_input=False)
    p.add_argument("--p", type=int, required=True, help="odd prime")
    p.add_argument("--mmax", type=int, required=True)
    p.add_argument("--domain", required=True, help="comma-separated non-positive integers")
    p.add_argument("--r", type=int)
    p.add_argument("--family", help="monotone family file")

    return parser


def _args_echo(ns) -> dict:
    skip = {"func", "command"}
    return {key: value for key, value in sorted(vars(ns).items()) if key not in skip}


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")


def main(argv=None) -> int:
    try:
        ns = _build_parser().parse_args(argv)
    except _UsageError:
        return 64

    report = {
        "command": ns.command,
        "args": _args_echo(ns),
        "input_sha256": None,
        "results": None,
        "verification": None,
        "status": "ok",
    }
    try:
        if getattr(ns, "input", None) is not None:
            report["input_sha256"] = _digest(ns.input)
        out = ns.func(ns)
        if len(out) == 4:
            results, verification, ok, family_path = out
            if family_path is not None:
                report["input_sha256"] = _digest(family_path)
        else:
            results, verification, ok = out
        report["results"] = results
        report["verification"] = verification
        if not ok:
            report["status"] = "verification-failed"
            _emit(report)
            return 2
        _emit(report)
        return 0
    except InputError as exc:
        report["status"] = "domain-error"
        report["error"] = str(exc)
        _emit(report)
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except MathIntegrityError as exc:
        report["status"] = "math-integrity-failure"
        report["error"] = str(exc)
        _emit(report)
        sys.stderr.write(f"mathematics failed: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
