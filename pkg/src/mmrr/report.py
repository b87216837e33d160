"""Gantt charts, comparison tables and plot-data export.

Everything here consumes finished Schedules / metrics; nothing re-derives
scheduling decisions.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence
from xml.sax.saxutils import escape

from .engine import Schedule, Slice
from .metrics import MetricsReport, exact_from_json, exact_to_json, format_exact

TABLE_COLUMNS = ("Algorithm", "Time Quantum", "Turnaround Time", "Waiting Time", "Context Switch")
_CSV_COLUMNS = ("algorithm", "time_quantum", "turnaround_time", "waiting_time", "context_switch")
PLOT_HEADER = ("case", "algorithm", "metric", "value")


@dataclass(frozen=True)
class ComparisonRow:
    algorithm: str
    quantum_trace: tuple[int, ...]
    att: Fraction
    awt: Fraction
    cs: int

    @classmethod
    def from_report(cls, algorithm: str, report: MetricsReport) -> "ComparisonRow":
        return cls(algorithm, tuple(report.quantum_trace), report.avg_turnaround, report.avg_waiting,
                   report.context_switches)

    @property
    def quantum_text(self) -> str:
        return ",".join(str(q) for q in self.quantum_trace)


def merge_adjacent_slices(slices: Sequence[Slice]) -> list[Slice]:
    merged: list[Slice] = []
    for s in slices:
        if merged and merged[-1].pid == s.pid and merged[-1].end == s.start:
            merged[-1] = Slice(s.pid, merged[-1].start, s.end)
        else:
            merged.append(s)
    return merged


def render_gantt_ascii(schedule: Schedule, merge_adjacent: bool = False) -> str:
    """Single-lane text Gantt chart with tick labels under each boundary.

    Idle gaps (clock jumps to a later arrival) show up as ``idle`` cells.
    """
    if not schedule.slices:
        raise ValueError("schedule has no slices")
    bars = merge_adjacent_slices(schedule.slices) if merge_adjacent else list(schedule.slices)

    cells: list[tuple[str, int, int]] = []
    for s in bars:
        if cells and cells[-1][2] < s.start:
            cells.append(("idle", cells[-1][2], s.start))
        cells.append((s.pid, s.start, s.end))

    top = "|"
    positions = [0]
    for name, start, _ in cells:
        # wide enough that this cell's start label never touches the next one
        width = max(len(name), len(str(start)))
        top += name.center(width) + "|"
        positions.append(positions[-1] + width + 1)

    ticks = [cells[0][1]] + [end for _, _, end in cells]
    label_line = ""
    for pos, tick in zip(positions, ticks):
        label_line = label_line.ljust(pos) + str(tick)
    return top + "\n" + label_line + "\n"


_PALETTE = ("#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
            "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac")


def render_gantt_svg(schedule: Schedule, width: int = 800, bar_height: int = 40, title: str | None = None) -> str:
    """SVG 1.1 Gantt chart: one ``rect`` per slice, x and width proportional to time."""
    if not schedule.slices:
        raise ValueError("schedule has no slices")
    margin = 20
    top = 30 if title else 10
    span = schedule.slices[-1].end
    scale = (width - 2 * margin) / span
    height = top + bar_height + 30

    colors: dict[str, str] = {}
    for s in schedule.slices:
        colors.setdefault(s.pid, _PALETTE[len(colors) % len(_PALETTE)])

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if title:
        out.append(f'<text x="{margin}" y="20" font-family="monospace" font-size="14">{escape(title)}</text>')
    ticks = sorted({0} | {s.start for s in schedule.slices} | {s.end for s in schedule.slices})
    for s in schedule.slices:
        x = margin + s.start * scale
        w = s.duration * scale
        out.append(
            f'<rect x="{x:.3f}" y="{top}" width="{w:.3f}" height="{bar_height}" '
            f'fill="{colors[s.pid]}" stroke="black" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{x + w / 2:.3f}" y="{top + bar_height / 2 + 4:.1f}" font-family="monospace" '
            f'font-size="11" text-anchor="middle">{escape(s.pid)}</text>'
        )
    axis_y = top + bar_height
    out.append(f'<line x1="{margin}" y1="{axis_y}" x2="{width - margin}" y2="{axis_y}" stroke="black"/>')
    for tick in ticks:
        x = margin + tick * scale
        out.append(
            f'<text x="{x:.3f}" y="{axis_y + 15}" font-family="monospace" font-size="10" '
            f'text-anchor="middle">{tick}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _row_cells(row: ComparisonRow) -> list[str]:
    return [row.algorithm, row.quantum_text, format_exact(row.att), format_exact(row.awt), str(row.cs)]


def render_comparison_table(rows: Sequence[ComparisonRow], format: str = "text") -> str:
    if not rows:
        raise ValueError("no rows to render")
    if format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(_CSV_COLUMNS)
        for r in rows:
            w.writerow(_row_cells(r))
        return buf.getvalue()
    if format == "json":
        records = [
            {
                "algorithm": r.algorithm,
                "quantum_trace": list(r.quantum_trace),
                "att": exact_to_json(r.att),
                "awt": exact_to_json(r.awt),
                "cs": r.cs,
            }
            for r in rows
        ]
        return json.dumps(records, indent=2) + "\n"
    body = [_row_cells(r) for r in rows]
    if format == "markdown":
        lines = ["| " + " | ".join(TABLE_COLUMNS) + " |", "|" + "|".join("---" for _ in TABLE_COLUMNS) + "|"]
        lines += ["| " + " | ".join(cells) + " |" for cells in body]
        return "\n".join(lines) + "\n"
    if format == "text":
        widths = [max(len(h), *(len(c[i]) for c in body)) for i, h in enumerate(TABLE_COLUMNS)]
        fmt = "  ".join(f"{{:<{w}}}" for w in widths)
        lines = [fmt.format(*TABLE_COLUMNS), fmt.format(*("-" * w for w in widths))]
        lines += [fmt.format(*cells) for cells in body]
        return "\n".join(line.rstrip() for line in lines) + "\n"
    raise ValueError(f"unknown table format {format!r}")


def _parse_trace(text: str) -> tuple[int, ...]:
    return tuple(int(q) for q in text.split(",") if q.strip())


def parse_comparison_table(text: str, format: str = "csv") -> list[ComparisonRow]:
    """Inverse of :func:`render_comparison_table` for the csv and json formats."""
    if format == "csv":
        reader = csv.DictReader(io.StringIO(text))
        return [
            ComparisonRow(r["algorithm"], _parse_trace(r["time_quantum"]), Fraction(r["turnaround_time"]),
                          Fraction(r["waiting_time"]), int(r["context_switch"]))
            for r in reader
        ]
    if format == "json":
        return [
            ComparisonRow(r["algorithm"], tuple(r["quantum_trace"]), exact_from_json(r["att"]),
                          exact_from_json(r["awt"]), int(r["cs"]))
            for r in json.loads(text)
        ]
    raise ValueError(f"cannot parse table format {format!r}")


def plot_records(cases: Mapping[str, Iterable[ComparisonRow]]) -> list[tuple[str, str, str, Fraction]]:
    """Long-format (case, algorithm, metric, value) records; metrics ATT, AWT, CS."""
    if not cases:
        raise ValueError("need at least one case")
    records = []
    for case, rows in cases.items():
        for r in rows:
            records.append((case, r.algorithm, "ATT", r.att))
            records.append((case, r.algorithm, "AWT", r.awt))
            records.append((case, r.algorithm, "CS", Fraction(r.cs)))
    return records


def export_plot_data(cases: Mapping[str, Iterable[ComparisonRow]], format: str = "csv") -> str:
    records = plot_records(cases)
    if format == "json":
        return json.dumps(
            [dict(zip(PLOT_HEADER, (c, a, m, exact_to_json(v)))) for c, a, m, v in records], indent=2
        ) + "\n"
    if format != "csv":
        raise ValueError(f"unknown plot-data format {format!r}")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(PLOT_HEADER)
    for c, a, m, v in records:
        w.writerow((c, a, m, format_exact(v)))
    return buf.getvalue()
