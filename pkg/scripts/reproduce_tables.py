#!/usr/bin/env python3
"""Regenerate the comparison tables, Gantt charts and plot data for the built-in cases.

Usage: python scripts/reproduce_tables.py [--out results/]
"""
import argparse
import re
from pathlib import Path

from mmrr.cases import builtin_cases, check_case, format_results
from mmrr.engine import run_simulation
from mmrr.metrics import aggregate
from mmrr.report import ComparisonRow, export_plot_data, render_comparison_table, render_gantt_ascii, render_gantt_svg
from mmrr.workload import serialize_workload


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="results")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    grouped = {}
    tables = []
    for case in builtin_cases():
        (out / f"{case.name}.csv").write_text(serialize_workload(case.workload))
        rows = []
        for label, config in case.configs().items():
            schedule = run_simulation(case.workload, config)
            rows.append(ComparisonRow.from_report(label, aggregate(schedule)))
            stem = f"{case.name}_{re.sub(r'[^a-z0-9]+', '_', label.lower()).strip('_')}"
            (out / f"{stem}.svg").write_text(render_gantt_svg(schedule, title=f"{case.description} - {label}"))
            (out / f"{stem}.txt").write_text(render_gantt_ascii(schedule))
        grouped[case.name] = [r for r in rows if r.algorithm in ("RR", "MMRR")]
        tables.append(f"### {case.description}\n\n" + render_comparison_table(rows, "markdown"))

    (out / "tables.md").write_text("\n".join(tables))
    (out / "plot_data.csv").write_text(export_plot_data(grouped))
    results = [r for case in builtin_cases() for r in check_case(case)]
    (out / "reproduction.txt").write_text(format_results(results))
    print("\n".join(tables))
    print(format_results(results))
    print(f"wrote {out}/")


if __name__ == "__main__":
    main()
