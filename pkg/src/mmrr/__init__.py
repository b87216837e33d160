"""Min-Max Round Robin CPU scheduling simulator."""

from .engine import Schedule, SimConfig, Slice, run_simulation
from .metrics import MetricsReport, aggregate
from .oracle import tick_oracle_simulate
from .policies import QuantumDecision, ReadyEntry, ReadyQueueState, compute_min_max_quantum, mmrr_round
from .workload import Process, ProcessSet, generate_random_workload, parse_workload, serialize_workload

__all__ = [
    "MetricsReport",
    "Process",
    "ProcessSet",
    "QuantumDecision",
    "ReadyEntry",
    "ReadyQueueState",
    "Schedule",
    "SimConfig",
    "Slice",
    "aggregate",
    "compute_min_max_quantum",
    "generate_random_workload",
    "mmrr_round",
    "parse_workload",
    "run_simulation",
    "serialize_workload",
    "tick_oracle_simulate",
]
