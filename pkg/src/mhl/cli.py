"""Command-line front end.

Exit codes: 0 when the command succeeds and any checked property holds,
1 when a property is violated or a pair is blocked, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from .errors import InputError, MhlError, PropertyViolation
from .exchange import build_exchange_digraph, digraph_to_dot
from .instances import (FAMILIES, GROUND_LIMIT, InstanceFile, build_pair,
                        generate_instance, instance_to_dict, instance_to_json,
                        parse_instance)
from .solver import (Matchable, check_hall, is_matchable,
                     min_max_certificate, solve_intersection)
from .structure import (LabContext, build_class_poset, compute_witnesses,
                        is_negligible, is_stable, maximal_negligible,
                        merge_stable)
from .verify import report_to_dict, run_verify

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2

REPORT_KEYS = ("command", "instance", "verdict", "certificate", "counters")


def validate_report(report: dict) -> None:
    """Schema check for the JSON report record every command emits."""
    if not isinstance(report, dict) or set(report) != set(REPORT_KEYS):
        raise PropertyViolation(f"report keys {sorted(report)} do not match schema")
    if not isinstance(report["command"], str):
        raise PropertyViolation("report.command must be a string")
    if not (report["instance"] is None or isinstance(report["instance"], str)):
        raise PropertyViolation("report.instance must be a string or null")
    if not isinstance(report["verdict"], str):
        raise PropertyViolation("report.verdict must be a string")
    if not (report["certificate"] is None
            or isinstance(report["certificate"], (dict, list))):
        raise PropertyViolation("report.certificate must be an object, list or null")
    if not isinstance(report["counters"], dict):
        raise PropertyViolation("report.counters must be an object")


def _emit(args, report: dict, text_lines: list[str]) -> None:
    validate_report(report)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _load(args) -> InstanceFile:
    if args.file is None:
        raise InputError("this command needs an instance file (or - for stdin)")
    if args.file == "-":
        return parse_instance(sys.stdin.read())
    try:
        with open(args.file, "rb") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc}") from exc
    return parse_instance(text)


def _fmt_set(instance: InstanceFile, s) -> str:
    if not s:
        return "{}"
    return "{" + ", ".join(instance.label_of(e) for e in sorted(s)) + "}"


def _write_dot(path: str, content: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(content)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def cmd_intersect(args) -> int:
    instance = _load(args)
    m, n = build_pair(instance)
    run = solve_intersection(m, n)
    k, cut = min_max_certificate(m, n)
    if args.dot:
        digraph = build_exchange_digraph(m, n, run.independent_set)
        _write_dot(args.dot, digraph_to_dot(digraph, instance.labels))
    report = {
        "command": "intersect",
        "instance": args.file,
        "verdict": "ok",
        "certificate": {
            "independent_set": sorted(run.independent_set),
            "size": k,
            "min_cut": sorted(cut),
        },
        "counters": {"iterations": run.iterations},
    }
    _emit(args, report, [
        f"maximum common independent set: {_fmt_set(instance, run.independent_set)}",
        f"size: {k} (augmentations: {run.iterations})",
        f"certifying cut: {_fmt_set(instance, cut)}",
    ])
    return EXIT_OK


def cmd_matchable(args) -> int:
    instance = _load(args)
    m, n = build_pair(instance)
    verdict = is_matchable(m, n)
    if isinstance(verdict, Matchable):
        report = {
            "command": "matchable",
            "instance": args.file,
            "verdict": "matchable",
            "certificate": {"base": sorted(verdict.base)},
            "counters": {},
        }
        _emit(args, report, [
            f"matchable: base {_fmt_set(instance, verdict.base)} is independent "
            f"on both sides",
        ])
        return EXIT_OK
    report = {
        "command": "matchable",
        "instance": args.file,
        "verdict": "blocked",
        "certificate": {
            "blocking_set": sorted(verdict.blocking_set),
            "rank_restricted": verdict.rank_restricted,
            "rank_contracted": verdict.rank_contracted,
        },
        "counters": {},
    }
    _emit(args, report, [
        f"blocked: X = {_fmt_set(instance, verdict.blocking_set)} has restricted "
        f"rank {verdict.rank_restricted} < contracted rank {verdict.rank_contracted}",
    ])
    return EXIT_VIOLATION


def cmd_hall(args) -> int:
    instance = _load(args)
    m, n = build_pair(instance)
    violation = check_hall(m, n)
    if violation is None:
        report = {
            "command": "hall",
            "instance": args.file,
            "verdict": "holds",
            "certificate": None,
            "counters": {"subsets": 2 ** instance.ground_size},
        }
        _emit(args, report, ["the matroidal Hall condition holds"])
        return EXIT_OK
    report = {
        "command": "hall",
        "instance": args.file,
        "verdict": "violated",
        "certificate": {"violating_set": sorted(violation)},
        "counters": {"subsets": 2 ** instance.ground_size},
    }
    _emit(args, report, [
        f"violated by X = {_fmt_set(instance, violation)}",
    ])
    return EXIT_VIOLATION


def _poset_dot(poset, instance: InstanceFile) -> str:
    lines = ["digraph classes {", "  rankdir=BT;"]
    for i, rep in enumerate(poset.representatives):
        lines.append(f'  c{i} [label="{_fmt_set(instance, rep)}", shape=box];')
    for low, high in poset.covers():
        lines.append(f"  c{low} -> c{high};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_classes(args) -> int:
    instance = _load(args)
    m, n = build_pair(instance)
    poset = build_class_poset(m, n)
    if args.dot:
        _write_dot(args.dot, _poset_dot(poset, instance))
    classes = [
        {
            "id": i,
            "representative": sorted(poset.representatives[i]),
            "members": len(poset.members[i]),
            "m_span": sorted(poset.fingerprints[i].m_span),
            "n_span": sorted(poset.fingerprints[i].n_span),
        }
        for i in range(poset.class_count)
    ]
    report = {
        "command": "classes",
        "instance": args.file,
        "verdict": "ok",
        "certificate": classes,
        "counters": {
            "classes": poset.class_count,
            "maximal": len(poset.maximal_ids()),
        },
    }
    lines = [f"{poset.class_count} classes, {len(poset.maximal_ids())} maximal"]
    for entry in classes:
        star = "*" if entry["id"] in poset.maximal_ids() else " "
        lines.append(
            f"  [{entry['id']}]{star} rep {_fmt_set(instance, entry['representative'])} "
            f"({entry['members']} members)")
    _emit(args, report, lines)
    return EXIT_OK


def cmd_witnesses(args) -> int:
    instance = _load(args)
    m, n = build_pair(instance)
    wit = compute_witnesses(m, n)
    report = {
        "command": "witnesses",
        "instance": args.file,
        "verdict": "ok",
        "certificate": {
            "chosen_class": wit.chosen_class_id,
            "directed_classes": sorted(wit.directed_class_ids),
            "anchors": {str(x): sorted(s) for x, s in wit.anchor_sets.items()},
            "reach_region": sorted(wit.reach_region),
            "core": sorted(wit.core),
            "residue": sorted(wit.residue),
        },
        "counters": {"directed_classes": len(wit.directed_class_ids)},
    }
    _emit(args, report, [
        f"chosen maximal class: {wit.chosen_class_id}",
        f"directed family: {sorted(wit.directed_class_ids)}",
        f"reach region: {_fmt_set(instance, wit.reach_region)}",
        f"core: {_fmt_set(instance, wit.core)}",
        f"residue: {_fmt_set(instance, wit.residue)}",
    ])
    return EXIT_OK


def cmd_stable(args) -> int:
    instance = _load(args)
    m, n = build_pair(instance)
    ctx = LabContext(m, n)
    stable = [s for s in ctx.commons() if is_stable(m, n, s)]
    merged = merge_stable(m, n, stable) if stable else frozenset()
    report = {
        "command": "stable",
        "instance": args.file,
        "verdict": "ok",
        "certificate": {
            "stable_sets": [sorted(s) for s in stable],
            "merged": sorted(merged),
        },
        "counters": {"stable_sets": len(stable)},
    }
    lines = [f"{len(stable)} stable sets"]
    lines += [f"  {_fmt_set(instance, s)}" for s in stable]
    lines.append(f"merged spanning representative: {_fmt_set(instance, merged)}")
    _emit(args, report, lines)
    return EXIT_OK


def cmd_negligible(args) -> int:
    instance = _load(args)
    m, n = build_pair(instance)
    best = maximal_negligible(m, n)
    whole = is_negligible(m, n, m.universe())
    report = {
        "command": "negligible",
        "instance": args.file,
        "verdict": "ok",
        "certificate": {
            "maximal_negligible": sorted(best),
            "everything_negligible": whole,
        },
        "counters": {},
    }
    _emit(args, report, [
        f"maximal negligible set: {_fmt_set(instance, best)}",
        f"whole ground set negligible: {'yes' if whole else 'no'}",
    ])
    return EXIT_OK


def cmd_verify(args) -> int:
    started = time.monotonic()
    report = run_verify(args.seed, args.count, args.max_ground)
    data = report_to_dict(report)
    wrapped = {
        "command": "verify",
        "instance": None,
        "verdict": "ok" if report.ok else "violations",
        "certificate": data,
        "counters": {
            "cases": args.count,
            "violations": sum(o.violations for o in report.outcomes),
        },
    }
    lines = [f"seed={args.seed} count={args.count} max-ground={args.max_ground}"]
    for outcome in report.outcomes:
        lines.append(
            f"  {outcome.name:42s} cases={outcome.cases:4d} "
            f"checks={outcome.checks:7d} violations={outcome.violations}")
        if outcome.counterexample is not None:
            lines.append(f"    first counterexample: {json.dumps(outcome.counterexample, sort_keys=True)}")
    lines.append("all checks passed" if report.ok else "VIOLATIONS FOUND")
    _emit(args, wrapped, lines)
    print(f"elapsed: {time.monotonic() - started:.1f}s", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_gen(args) -> int:
    instance = generate_instance(args.seed, args.family, args.ground_size)
    text = instance_to_json(instance)
    written = None
    if args.file and args.file != "-":
        try:
            with open(args.file, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.file}: {exc}") from exc
        written = args.file
    if args.json:
        report = {
            "command": "gen",
            "instance": written,
            "verdict": "ok",
            "certificate": instance_to_dict(instance),
            "counters": {"ground_size": args.ground_size},
        }
        _emit(args, report, [])
    elif written is None:
        sys.stdout.write(text)
    else:
        print(f"wrote {written}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mhl",
        description="matroid-intersection workbench over finite independence oracles")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, needs_file=True):
        p = sub.add_parser(name, help=help_text)
        if needs_file:
            p.add_argument("file", nargs="?", default=None, metavar="FILE",
                           help="instance file (JSON), or - for stdin")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.set_defaults(func=func)
        return p

    p = add("intersect", cmd_intersect, "maximum common independent set")
    p.add_argument("--dot", metavar="OUT", help="write the final exchange digraph")
    add("matchable", cmd_matchable, "matchability verdict with certificate")
    add("hall", cmd_hall, "scan for a matroidal Hall violation")
    p = add("classes", cmd_classes, "class poset of common independent sets")
    p.add_argument("--dot", metavar="OUT", help="write the class order diagram")
    add("witnesses", cmd_witnesses, "witness regions of a maximal directed family")
    add("stable", cmd_stable, "stable sets and their merged representative")
    add("negligible", cmd_negligible, "maximal negligible set")

    p = add("verify", cmd_verify, "run the seeded property suite", needs_file=False)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-ground", type=int, default=6, dest="max_ground")

    p = add("gen", cmd_gen, "generate a random instance")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--family", choices=FAMILIES, default="mixed")
    p.add_argument("--ground-size", type=int, default=6, dest="ground_size",
                   metavar=f"N (0..{GROUND_LIMIT})")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PropertyViolation as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except MhlError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
