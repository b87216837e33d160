"""Naive one-tick-at-a-time simulator used to cross-check the engine.

Deliberately shares no scheduling code with :mod:`mmrr.engine` or
:mod:`mmrr.policies`: it advances the clock by exactly one tick per loop
iteration, including idle ticks, and re-derives every rule inline.
"""

from __future__ import annotations

from .engine import Schedule, SimConfig, Slice
from .workload import ProcessSet


def tick_oracle_simulate(pset: ProcessSet, config: SimConfig | None = None) -> Schedule:
    config = config or SimConfig()
    if len(pset) == 0:
        raise ValueError("workload is empty")

    procs = list(pset)
    order = {p.pid: i for i, p in enumerate(procs)}
    burst = {p.pid: p.burst for p in procs}
    if config.arrival_mode == "paper_faithful":
        arrive = {p.pid: 0 for p in procs}
    else:
        arrive = {p.pid: p.arrival for p in procs}
    remaining = dict(burst)

    policy = config.policy
    pool: list[str] = []  # admitted and waiting (RR: the FIFO queue itself)
    round_left: list[str] = []  # MMRR: not yet dispatched in the current round
    round_q = 0
    trace: list[int] = [config.static_quantum] if policy == "rr" else []

    spans: list[list] = []  # [pid, start, end]
    finish: dict[str, int] = {}
    current = None
    used = 0
    t = 0

    while len(finish) < len(procs):
        for p in procs:
            if arrive[p.pid] == t:
                pool.append(p.pid)

        if current is not None:
            limit = config.static_quantum if policy == "rr" else round_q
            if policy in ("rr", "mmrr") and used == limit:
                pool.append(current)
                current = None

        if current is None:
            if policy == "rr":
                if pool:
                    current = pool.pop(0)
            elif policy == "mmrr":
                if not round_left and pool:
                    rems = [remaining[pid] for pid in pool]
                    if len(rems) == 1:
                        q = rems[0]
                    else:
                        q = max(rems) - min(rems)
                    if q < config.quantum_floor:
                        q = config.quantum_floor
                    round_q = q
                    trace.append(q)
                    round_left = sorted(pool, key=lambda pid: (remaining[pid], arrive[pid], order[pid]))
                    pool = []
                if round_left:
                    current = round_left.pop(0)
            elif policy == "fcfs":
                if pool:
                    current = min(pool, key=lambda pid: (arrive[pid], order[pid]))
                    pool.remove(current)
            else:  # sjf
                if pool:
                    current = min(pool, key=lambda pid: (burst[pid], arrive[pid], order[pid]))
                    pool.remove(current)
            if current is not None:
                used = 0
                spans.append([current, t, t])

        if current is not None:
            remaining[current] -= 1
            used += 1
            spans[-1][2] = t + 1
            if remaining[current] == 0:
                finish[current] = t + 1
                current = None
        t += 1

    slices = tuple(Slice(pid, s, e) for pid, s, e in spans)
    return Schedule(slices, finish, tuple(trace), pset, config)
