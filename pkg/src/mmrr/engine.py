"""Event-driven single-CPU simulator producing a :class:`Schedule`."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Literal

from .policies import (
    DEFAULT_QUANTUM_FLOOR,
    DEFAULT_STATIC_QUANTUM,
    ReadyEntry,
    ReadyQueueState,
    baseline_schedule,
    mmrr_round,
    rr_next_dispatch,
)
from .workload import Process, ProcessSet

Policy = Literal["rr", "mmrr", "fcfs", "sjf"]
ArrivalMode = Literal["standard", "paper_faithful"]

POLICIES = ("rr", "mmrr", "fcfs", "sjf")
ARRIVAL_MODES = ("standard", "paper_faithful")


@dataclass(frozen=True)
class SimConfig:
    """Policy selection and its parameters.

    ``arrival_mode="paper_faithful"`` schedules every process as if it were
    ready at t=0 in input order; metrics still subtract the true arrival.
    """

    policy: Policy = "mmrr"
    static_quantum: int = DEFAULT_STATIC_QUANTUM
    quantum_floor: int = DEFAULT_QUANTUM_FLOOR
    arrival_mode: ArrivalMode = "standard"

    def __post_init__(self) -> None:
        if self.policy not in POLICIES:
            raise ValueError(f"unknown policy {self.policy!r}")
        if self.arrival_mode not in ARRIVAL_MODES:
            raise ValueError(f"unknown arrival mode {self.arrival_mode!r}")
        if self.static_quantum < 1:
            raise ValueError(f"static_quantum must be >= 1, got {self.static_quantum}")
        if self.quantum_floor < 1:
            raise ValueError(f"quantum_floor must be >= 1, got {self.quantum_floor}")

    def scheduling_arrival(self, p: Process) -> int:
        return 0 if self.arrival_mode == "paper_faithful" else p.arrival


@dataclass(frozen=True)
class Slice:
    pid: str
    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start >= self.end:
            raise ValueError(f"empty or inverted slice {self.pid} {self.start}..{self.end}")

    @property
    def duration(self) -> int:
        return self.end - self.start


@dataclass(frozen=True)
class RoundRecord:
    """One MMRR round: the ready set it planned over and the quantum chosen."""

    start: int
    ready: tuple[tuple[str, int], ...]  # (pid, remaining) in dispatch order
    raw_quantum: int
    quantum: int


@dataclass(frozen=True)
class Schedule:
    slices: tuple[Slice, ...]
    finish: dict[str, int]
    quantum_trace: tuple[int, ...]
    workload: ProcessSet
    config: SimConfig = field(default_factory=SimConfig)
    rounds: tuple[RoundRecord, ...] = ()

    def to_dict(self) -> dict:
        return {
            "slices": [{"pid": s.pid, "start": s.start, "end": s.end} for s in self.slices],
            "quantum_trace": list(self.quantum_trace),
            "finish": dict(self.finish),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def busy_time(self) -> dict[str, int]:
        out = {p.pid: 0 for p in self.workload}
        for s in self.slices:
            out[s.pid] += s.duration
        return out


def _entries(pset: ProcessSet, config: SimConfig) -> list[ReadyEntry]:
    entries = [ReadyEntry(p.pid, p.burst, config.scheduling_arrival(p), i) for i, p in enumerate(pset)]
    entries.sort(key=lambda e: (e.arrival, e.order))
    return entries


def _run_rr(pset: ProcessSet, config: SimConfig):
    pending = deque(_entries(pset, config))
    queue: deque[ReadyEntry] = deque()
    slices, finish = [], {}
    t = 0

    def admit(now):
        while pending and pending[0].arrival <= now:
            queue.append(pending.popleft())

    admit(t)
    while queue or pending:
        if not queue:
            t = pending[0].arrival
            admit(t)
        pid, run = rr_next_dispatch(queue, config.static_quantum)
        head = queue.popleft()
        slices.append(Slice(pid, t, t + run))
        t += run
        # arrivals up to and including the expiry instant queue ahead of the preempted process
        admit(t)
        if head.remaining > run:
            queue.append(ReadyEntry(head.pid, head.remaining - run, head.arrival, head.order))
        else:
            finish[pid] = t
    return slices, finish, [config.static_quantum], ()


def _run_mmrr(pset: ProcessSet, config: SimConfig):
    pending = deque(_entries(pset, config))
    ready: list[ReadyEntry] = []
    slices, finish, trace, rounds = [], {}, [], []
    t = 0
    while ready or pending:
        while pending and pending[0].arrival <= t:
            ready.append(pending.popleft())
        if not ready:
            t = pending[0].arrival
            continue
        plan, decision = mmrr_round(ReadyQueueState(ready), config.quantum_floor)
        trace.append(decision.effective)
        by_pid = {e.pid: e for e in ready}
        rounds.append(RoundRecord(t, tuple((pid, by_pid[pid].remaining) for pid, _ in plan),
                                  decision.raw, decision.effective))
        carried = []
        for pid, run in plan:
            slices.append(Slice(pid, t, t + run))
            t += run
            e = by_pid[pid]
            if e.remaining > run:
                carried.append(ReadyEntry(pid, e.remaining - run, e.arrival, e.order))
            else:
                finish[pid] = t
        ready = carried
    return slices, finish, trace, tuple(rounds)


def _run_baseline(pset: ProcessSet, config: SimConfig):
    view = ProcessSet(Process(p.pid, config.scheduling_arrival(p), p.burst) for p in pset)
    procs = view.by_pid()
    slices, finish = [], {}
    t = 0
    for pid in baseline_schedule(view, config.policy):
        p = procs[pid]
        t = max(t, p.arrival)
        slices.append(Slice(pid, t, t + p.burst))
        t += p.burst
        finish[pid] = t
    return slices, finish, [], ()


_RUNNERS = {"rr": _run_rr, "mmrr": _run_mmrr, "fcfs": _run_baseline, "sjf": _run_baseline}


def run_simulation(pset: ProcessSet, config: SimConfig | None = None) -> Schedule:
    """Simulate ``pset`` on one CPU under ``config``.

    No preemption on arrival, zero context-switch cost, and the clock jumps
    to the next arrival whenever the ready queue is empty. Every dispatch
    yields its own slice, even back-to-back runs of the same process.
    """
    config = config or SimConfig()
    if len(pset) == 0:
        raise ValueError("workload is empty")
    slices, finish, trace, rounds = _RUNNERS[config.policy](pset, config)
    return Schedule(tuple(slices), finish, tuple(trace), pset, config, rounds)
