"""Dispatch rules: static Round Robin, Min-Max Round Robin, FCFS and SJF.

These are pure functions over explicit queue states. The engine owns the
clock and arrival admission; it calls in here to decide who runs and for
how long.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .workload import ProcessSet

DEFAULT_QUANTUM_FLOOR = 25
DEFAULT_STATIC_QUANTUM = 20


@dataclass(frozen=True)
class QuantumDecision:
    raw: int
    effective: int


@dataclass(frozen=True)
class ReadyEntry:
    pid: str
    remaining: int
    arrival: int
    # position in the input ProcessSet, the final tie-breaker
    order: int = 0

    def __post_init__(self) -> None:
        if self.remaining <= 0:
            raise ValueError(f"{self.pid}: ready entries need remaining > 0")

    def sort_key(self) -> tuple[int, int, int]:
        return (self.remaining, self.arrival, self.order)


@dataclass(frozen=True)
class ReadyQueueState:
    entries: tuple[ReadyEntry, ...]

    def __init__(self, entries: Sequence[ReadyEntry]) -> None:
        object.__setattr__(self, "entries", tuple(entries))

    def __len__(self) -> int:
        return len(self.entries)


def compute_min_max_quantum(remaining: Sequence[int], floor: int = DEFAULT_QUANTUM_FLOOR) -> QuantumDecision:
    """Range of the remaining bursts, raised to ``floor`` when smaller.

    A lone process gets its own remaining burst as the raw value, and the
    floor still applies on top of that.
    """
    if not remaining:
        raise ValueError("remaining bursts must be nonempty")
    if floor < 1:
        raise ValueError(f"floor must be >= 1, got {floor}")
    if any(r < 1 for r in remaining):
        raise ValueError("remaining bursts must all be >= 1")
    if len(remaining) == 1:
        raw = remaining[0]
    else:
        raw = max(remaining) - min(remaining)
    return QuantumDecision(raw=raw, effective=max(raw, floor))


def mmrr_round(
    state: ReadyQueueState, floor: int = DEFAULT_QUANTUM_FLOOR
) -> tuple[list[tuple[str, int]], QuantumDecision]:
    """Plan one Min-Max round over the ready set.

    Entries are sorted ascending by remaining burst (ties: arrival, then
    input order) and each is dispatched once for min(quantum, remaining).
    Processes arriving while the round runs are not part of it.
    """
    if not state.entries:
        raise ValueError("cannot plan a round over an empty ready queue")
    ordered = sorted(state.entries, key=ReadyEntry.sort_key)
    decision = compute_min_max_quantum([e.remaining for e in ordered], floor)
    plan = [(e.pid, min(decision.effective, e.remaining)) for e in ordered]
    return plan, decision


def rr_next_dispatch(queue: Sequence[ReadyEntry], static_quantum: int = DEFAULT_STATIC_QUANTUM) -> tuple[str, int]:
    """Head of the FIFO queue runs for up to one quantum."""
    if not queue:
        raise ValueError("ready queue is empty")
    if static_quantum < 1:
        raise ValueError(f"static quantum must be >= 1, got {static_quantum}")
    head = queue[0]
    return head.pid, min(static_quantum, head.remaining)


def baseline_schedule(pset: ProcessSet, policy: Literal["fcfs", "sjf"]) -> list[str]:
    """Non-preemptive dispatch order for FCFS or SJF.

    FCFS runs in arrival order (ties by input order). SJF picks, at every
    completion, the shortest admitted burst (ties by arrival, then input
    order); when nothing is admitted the clock jumps to the next arrival.
    """
    indexed = list(enumerate(pset))
    if policy == "fcfs":
        indexed.sort(key=lambda ip: (ip[1].arrival, ip[0]))
        return [p.pid for _, p in indexed]
    if policy != "sjf":
        raise ValueError(f"unknown baseline policy {policy!r}")

    pending = sorted(indexed, key=lambda ip: (ip[1].arrival, ip[0]))
    order: list[str] = []
    ready: list[tuple[int, object]] = []
    t = 0
    while pending or ready:
        while pending and pending[0][1].arrival <= t:
            ready.append(pending.pop(0))
        if not ready:
            t = pending[0][1].arrival
            continue
        pick = min(ready, key=lambda ip: (ip[1].burst, ip[1].arrival, ip[0]))
        ready.remove(pick)
        order.append(pick[1].pid)
        t += pick[1].burst
    return order
