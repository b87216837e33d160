"""Turnaround, waiting and context-switch metrics over a Schedule.

Averages are kept as :class:`fractions.Fraction` so values such as 95.75
or 133.25 come out exact.

Waiting time is turnaround minus burst, i.e. all time spent not running.
The "start time minus arrival" formula sometimes quoted for round robin
does not reproduce the published comparison tables; this one does.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .engine import Schedule


class IncompleteScheduleError(RuntimeError):
    """The schedule does not account for every process's full burst."""


def _check_complete(schedule: Schedule) -> None:
    busy = schedule.busy_time()
    for p in schedule.workload:
        if busy.get(p.pid, 0) != p.burst or p.pid not in schedule.finish:
            raise IncompleteScheduleError(
                f"{p.pid}: scheduled {busy.get(p.pid, 0)} of {p.burst} ticks"
            )


def per_process_turnaround(schedule: Schedule) -> dict[str, int]:
    _check_complete(schedule)
    return {p.pid: schedule.finish[p.pid] - p.arrival for p in schedule.workload}


def per_process_waiting(schedule: Schedule) -> dict[str, int]:
    tat = per_process_turnaround(schedule)
    return {p.pid: tat[p.pid] - p.burst for p in schedule.workload}


def count_context_switches(schedule: Schedule) -> int:
    """Dispatch boundaries: number of slices minus one.

    A process re-dispatched right after its own quantum expired counts as
    a switch; the final completion does not.
    """
    if not schedule.slices:
        raise IncompleteScheduleError("schedule has no slices")
    return len(schedule.slices) - 1


def format_exact(value) -> str:
    """Render an int/Fraction without float rounding.

    Terminating decimals print as decimals ("95.75"); anything else falls
    back to "p/q".
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    digits = max(twos, fives)
    scaled = value * 10**digits
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled.numerator), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def exact_to_json(value):
    """JSON-friendly exact value: int, float for terminating decimals, else "p/q"."""
    text = format_exact(value)
    if "/" in text:
        return text
    return int(text) if "." not in text else float(text)


def exact_from_json(value) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("boolean is not a numeric value")
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class ProcessMetrics:
    turnaround: int
    waiting: int
    finish: int


@dataclass(frozen=True)
class MetricsReport:
    per_process: dict[str, ProcessMetrics]
    avg_turnaround: Fraction
    avg_waiting: Fraction
    context_switches: int
    quantum_trace: tuple[int, ...]

    @property
    def att(self) -> Fraction:
        return self.avg_turnaround

    @property
    def awt(self) -> Fraction:
        return self.avg_waiting

    @property
    def cs(self) -> int:
        return self.context_switches

    def to_dict(self) -> dict:
        return {
            "per_process": {
                pid: {"turnaround": m.turnaround, "waiting": m.waiting, "finish": m.finish}
                for pid, m in self.per_process.items()
            },
            "att": exact_to_json(self.avg_turnaround),
            "awt": exact_to_json(self.avg_waiting),
            "cs": self.context_switches,
            "quantum_trace": list(self.quantum_trace),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"{'pid':<8}{'finish':>8}{'TAT':>8}{'WT':>8}"]
        for pid, m in self.per_process.items():
            lines.append(f"{pid:<8}{m.finish:>8}{m.turnaround:>8}{m.waiting:>8}")
        trace = ",".join(str(q) for q in self.quantum_trace) or "-"
        lines.append(f"ATT = {format_exact(self.avg_turnaround)}")
        lines.append(f"AWT = {format_exact(self.avg_waiting)}")
        lines.append(f"CS  = {self.context_switches}")
        lines.append(f"TQ  = {trace}")
        return "\n".join(lines) + "\n"


def aggregate(schedule: Schedule) -> MetricsReport:
    tat = per_process_turnaround(schedule)
    wt = per_process_waiting(schedule)
    n = len(schedule.workload)
    per = {
        p.pid: ProcessMetrics(tat[p.pid], wt[p.pid], schedule.finish[p.pid])
        for p in schedule.workload
    }
    return MetricsReport(
        per_process=per,
        avg_turnaround=Fraction(sum(tat.values()), n),
        avg_waiting=Fraction(sum(wt.values()), n),
        context_switches=count_context_switches(schedule),
        quantum_trace=tuple(schedule.quantum_trace),
    )
