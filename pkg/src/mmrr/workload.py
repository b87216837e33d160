"""Process model, workload file I/O and seeded random workload generation."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Literal

Format = Literal["csv", "json"]

CSV_HEADER = ("pid", "arrival", "burst")

DEFAULT_BURST_RANGE = (1, 200)
DEFAULT_ARRIVAL_RANGE = (0, 50)


class WorkloadError(ValueError):
    """Raised for unparseable or invalid workload data."""


@dataclass(frozen=True)
class Process:
    pid: str
    arrival: int
    burst: int

    def __post_init__(self) -> None:
        if not isinstance(self.pid, str) or not self.pid:
            raise WorkloadError("pid must be a nonempty string")
        if isinstance(self.arrival, bool) or not isinstance(self.arrival, int):
            raise WorkloadError(f"{self.pid}: arrival must be an integer")
        if isinstance(self.burst, bool) or not isinstance(self.burst, int):
            raise WorkloadError(f"{self.pid}: burst must be an integer")
        if self.arrival < 0:
            raise WorkloadError(f"{self.pid}: arrival must be >= 0, got {self.arrival}")
        if self.burst < 1:
            raise WorkloadError(f"{self.pid}: burst must be >= 1, got {self.burst}")


@dataclass(frozen=True, init=False)
class ProcessSet:
    """Ordered, immutable collection of processes; input order is significant."""

    processes: tuple[Process, ...] = ()

    def __init__(self, processes: Iterable[Process] = ()) -> None:
        procs = tuple(processes)
        seen = set()
        for p in procs:
            if p.pid in seen:
                raise WorkloadError(f"duplicate pid {p.pid!r}")
            seen.add(p.pid)
        object.__setattr__(self, "processes", procs)

    @property
    def n(self) -> int:
        return len(self.processes)

    def __len__(self) -> int:
        return len(self.processes)

    def __iter__(self):
        return iter(self.processes)

    def __getitem__(self, i):
        return self.processes[i]

    def by_pid(self) -> dict[str, Process]:
        return {p.pid: p for p in self.processes}

    @classmethod
    def from_tuples(cls, rows: Iterable[tuple[str, int, int]]) -> "ProcessSet":
        return cls(Process(pid, arrival, burst) for pid, arrival, burst in rows)


def _to_int(value: str, what: str, line: int) -> int:
    try:
        return int(value.strip())
    except (ValueError, AttributeError):
        raise WorkloadError(f"line {line}: {what} is not an integer: {value!r}") from None


def _parse_csv(text: str) -> ProcessSet:
    rows = list(csv.reader(io.StringIO(text)))
    processes = []
    header_seen = False
    for line_no, row in enumerate(rows, start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if not header_seen:
            if tuple(c.strip().lower() for c in row) != CSV_HEADER:
                raise WorkloadError(
                    f"line {line_no}: expected header {','.join(CSV_HEADER)!r}, got {','.join(row)!r}"
                )
            header_seen = True
            continue
        if len(row) != 3:
            raise WorkloadError(f"line {line_no}: expected 3 fields, got {len(row)}")
        pid = row[0].strip()
        if not pid:
            raise WorkloadError(f"line {line_no}: empty pid")
        arrival = _to_int(row[1], "arrival", line_no)
        burst = _to_int(row[2], "burst", line_no)
        try:
            processes.append(Process(pid, arrival, burst))
        except WorkloadError as exc:
            raise WorkloadError(f"line {line_no}: {exc}") from None
    return ProcessSet(processes)


def _parse_json(text: str) -> ProcessSet:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WorkloadError(f"line {exc.lineno}: invalid JSON: {exc.msg}") from None
    if not isinstance(data, list):
        raise WorkloadError("JSON workload must be an array of objects")
    processes = []
    for i, item in enumerate(data):
        if not isinstance(item, dict) or set(item) != set(CSV_HEADER):
            raise WorkloadError(f"record {i}: expected object with keys pid, arrival, burst")
        try:
            processes.append(Process(item["pid"], item["arrival"], item["burst"]))
        except WorkloadError as exc:
            raise WorkloadError(f"record {i}: {exc}") from None
    return ProcessSet(processes)


def parse_workload(text: str, format: Format = "csv") -> ProcessSet:
    """Parse a workload file. Row order becomes input order.

    Raises WorkloadError for malformed rows (with the line number),
    duplicate pids and out-of-range values.
    """
    if format == "csv":
        return _parse_csv(text)
    if format == "json":
        return _parse_json(text)
    raise ValueError(f"unknown workload format {format!r}")


def serialize_workload(pset: ProcessSet, format: Format = "csv") -> str:
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for p in pset:
            writer.writerow((p.pid, p.arrival, p.burst))
        return buf.getvalue()
    if format == "json":
        records = [{"pid": p.pid, "arrival": p.arrival, "burst": p.burst} for p in pset]
        return json.dumps(records, indent=2) + "\n"
    raise ValueError(f"unknown workload format {format!r}")


def load_workload(path) -> ProcessSet:
    """Read a workload file, picking the format from the extension (.json, else CSV)."""
    path = str(path)
    fmt: Format = "json" if path.lower().endswith(".json") else "csv"
    with open(path, encoding="utf-8") as fh:
        return parse_workload(fh.read(), fmt)


# SplitMix64 (Steele, Lea & Flood 2014). Chosen over the stdlib Mersenne
# Twister because it is a few lines in any language, so generated
# workloads can be reproduced bit-for-bit elsewhere.
_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] by rejection sampling (no modulo bias)."""
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span


def generate_random_workload(
    n: int,
    seed: int,
    burst_range: tuple[int, int] = DEFAULT_BURST_RANGE,
    arrival_range: tuple[int, int] = DEFAULT_ARRIVAL_RANGE,
) -> ProcessSet:
    """Deterministic uniform workload with pids P1..Pn.

    Draw order per process i = 1..n is burst first, then arrival, both
    from one SplitMix64 stream seeded with ``seed mod 2**64``.
    """
    b_lo, b_hi = burst_range
    a_lo, a_hi = arrival_range
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= b_lo <= b_hi:
        raise ValueError(f"invalid burst range [{b_lo}, {b_hi}]")
    if not 0 <= a_lo <= a_hi:
        raise ValueError(f"invalid arrival range [{a_lo}, {a_hi}]")
    rng = SplitMix64(seed)
    procs = []
    for i in range(1, n + 1):
        burst = rng.randint(b_lo, b_hi)
        arrival = rng.randint(a_lo, a_hi)
        procs.append(Process(f"P{i}", arrival, burst))
    return ProcessSet(procs)
