"""Command-line front end: simulate, compare, reproduce, generate."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cases as casemod
from .engine import ARRIVAL_MODES, POLICIES, SimConfig, run_simulation
from .metrics import aggregate
from .policies import DEFAULT_QUANTUM_FLOOR, DEFAULT_STATIC_QUANTUM
from .report import (
    ComparisonRow,
    export_plot_data,
    render_comparison_table,
    render_gantt_ascii,
    render_gantt_svg,
)
from .workload import (
    DEFAULT_ARRIVAL_RANGE,
    DEFAULT_BURST_RANGE,
    WorkloadError,
    generate_random_workload,
    load_workload,
    serialize_workload,
)

ALGORITHM_LABELS = {"rr": "RR", "mmrr": "MMRR", "fcfs": "FCFS", "sjf": "SJF"}


class CliError(Exception):
    """Bad input detected after argument parsing; reported with exit status 1."""


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _add_sim_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tq", type=positive_int, default=DEFAULT_STATIC_QUANTUM,
                   help="static quantum for rr (default: %(default)s)")
    p.add_argument("--floor", type=positive_int, default=DEFAULT_QUANTUM_FLOOR,
                   help="minimum quantum for mmrr (default: %(default)s)")
    p.add_argument("--arrival-mode", choices=ARRIVAL_MODES, default="standard")


def _load(source: str):
    """Workload from a CSV/JSON path, or a built-in case by name."""
    if not os.path.exists(source) and source in casemod.CASE_NAMES:
        return casemod.get_case(source).workload
    try:
        pset = load_workload(source)
    except OSError as exc:
        raise CliError(f"cannot read {source}: {exc.strerror}") from None
    except WorkloadError as exc:
        raise CliError(f"{source}: {exc}") from None
    if len(pset) == 0:
        raise CliError(f"{source}: workload is empty")
    return pset


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_simulate(args) -> int:
    pset = _load(args.workload)
    config = SimConfig(args.policy, args.tq, args.floor, args.arrival_mode)
    schedule = run_simulation(pset, config)
    report = aggregate(schedule)

    if args.format == "json":
        payload = {"schedule": schedule.to_dict(), "metrics": report.to_dict()}
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0

    if args.gantt == "svg":
        title = f"{ALGORITHM_LABELS[args.policy]} {args.workload}"
        _emit(render_gantt_svg(schedule, title=title), args.out)
    elif args.gantt == "ascii":
        _emit(render_gantt_ascii(schedule, merge_adjacent=args.merge), args.out)
    sys.stdout.write(report.to_json() + "\n" if args.metrics == "json" else report.to_text())
    return 0


def cmd_compare(args) -> int:
    policies = [p.strip() for p in args.policies.split(",") if p.strip()]
    unknown = [p for p in policies if p not in POLICIES]
    if unknown:
        raise CliError(f"unknown policies: {', '.join(unknown)}")
    if len(set(policies)) < 2:
        args.parser.error("compare needs at least two distinct policies")
    pset = _load(args.workload)
    rows = []
    for policy in policies:
        config = SimConfig(policy, args.tq, args.floor, args.arrival_mode)
        report = aggregate(run_simulation(pset, config))
        rows.append(ComparisonRow.from_report(ALGORITHM_LABELS[policy], report))
    _emit(render_comparison_table(rows, args.format), args.out)
    return 0


def cmd_reproduce(args) -> int:
    selected = casemod.builtin_cases()
    if args.case != "all":
        selected = [c for c in selected if c.name == args.case]
    results = [r for case in selected for r in casemod.check_case(case)]
    if args.format == "json":
        text = json.dumps(casemod.results_to_dict(results), indent=2) + "\n"
    else:
        text = casemod.format_results(results)
        counts = {s: sum(r.status == s for r in results) for s in ("PASS", "NOTE", "FAIL")}
        text += f"{counts['PASS']} PASS, {counts['NOTE']} NOTE, {counts['FAIL']} FAIL\n"
    _emit(text, args.out)

    if args.plot_data:
        grouped = {}
        for case in selected:
            rows = []
            for label, config in (("RR", case.rr_config), ("MMRR", case.mmrr_config)):
                rows.append(ComparisonRow.from_report(label, aggregate(run_simulation(case.workload, config))))
            grouped[case.name] = rows
        fmt = "json" if args.plot_data.lower().endswith(".json") else "csv"
        with open(args.plot_data, "w", encoding="utf-8") as fh:
            fh.write(export_plot_data(grouped, fmt))
    return 1 if any(r.status == "FAIL" for r in results) else 0


def cmd_generate(args) -> int:
    if args.n < 1:
        args.parser.error(f"--n must be >= 1, got {args.n}")
    if args.burst_range[0] < 1:
        args.parser.error("--burst-range lower bound must be >= 1")
    if args.arrival_range[0] < 0:
        args.parser.error("--arrival-range lower bound must be >= 0")
    pset = generate_random_workload(args.n, args.seed, args.burst_range, args.arrival_range)
    _emit(serialize_workload(pset, args.format), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mmrr", description="Min-Max Round Robin CPU scheduling simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run one policy over a workload")
    p.add_argument("workload", help="CSV/JSON workload file or built-in case name")
    p.add_argument("--policy", choices=POLICIES, default="mmrr")
    _add_sim_flags(p)
    p.add_argument("--gantt", choices=("ascii", "svg", "none"), default="ascii")
    p.add_argument("--merge", action="store_true", help="merge adjacent same-process bars in the ASCII chart")
    p.add_argument("--metrics", choices=("text", "json"), default="text")
    p.add_argument("--format", choices=("text", "json"), default="text",
                   help="json: emit schedule and metrics as one JSON document")
    p.add_argument("--out", help="write the chart (or JSON document) here instead of stdout")
    p.set_defaults(func=cmd_simulate, parser=p)

    p = sub.add_parser("compare", help="compare policies on one workload")
    p.add_argument("workload")
    p.add_argument("--policies", default="rr,mmrr", help="comma-separated, e.g. rr,mmrr,fcfs,sjf")
    _add_sim_flags(p)
    p.add_argument("--format", choices=("text", "csv", "json", "markdown"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compare, parser=p)

    p = sub.add_parser("reproduce", help="rerun the built-in published cases")
    p.add_argument("--case", choices=("all",) + casemod.CASE_NAMES, default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.add_argument("--plot-data", metavar="PATH", help="also write case,algorithm,metric,value records")
    p.set_defaults(func=cmd_reproduce, parser=p)

    p = sub.add_parser("generate", help="write a seeded random workload")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--burst-range", type=parse_range, default=DEFAULT_BURST_RANGE, metavar="LO:HI")
    p.add_argument("--arrival-range", type=parse_range, default=DEFAULT_ARRIVAL_RANGE, metavar="LO:HI")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate, parser=p)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"mmrr: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
