import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ILLUSTRATION, TABLE5, TABLE7, TABLE9, process_sets, pset
from mmrr.engine import POLICIES, SimConfig, Slice, run_simulation
from mmrr.oracle import tick_oracle_simulate

ALL_CONFIGS = [
    SimConfig(policy, arrival_mode=mode, static_quantum=tq, quantum_floor=floor)
    for policy in POLICIES
    for mode in ("standard", "paper_faithful")
    for tq, floor in ((20, 25), (3, 5))
]


def same_schedule(a, b):
    return a.slices == b.slices and a.finish == b.finish and a.quantum_trace == b.quantum_trace


def test_table5_mmrr():
    s = run_simulation(pset(TABLE5), SimConfig("mmrr", quantum_floor=25))
    assert s.quantum_trace == (140, 25)
    assert s.finish == {"P1": 20, "P2": 60, "P3": 140, "P4": 300}
    assert [x.pid for x in s.slices] == ["P1", "P2", "P3", "P4", "P4"]


def test_worked_example_slices():
    s = run_simulation(pset(ILLUSTRATION), SimConfig("mmrr"))
    assert s.slices == (
        Slice("P3", 0, 9), Slice("P4", 9, 46), Slice("P1", 46, 133),
        Slice("P2", 133, 220), Slice("P1", 220, 223), Slice("P2", 223, 232),
    )


@pytest.mark.parametrize("policy", POLICIES)
def test_single_process(policy):
    s = run_simulation(pset([("P1", 0, 7)]), SimConfig(policy))
    assert s.slices == (Slice("P1", 0, 7),)


def test_table9_rr_paper_faithful_finishes():
    # hand-executed with every process treated as ready at t=0
    s = run_simulation(pset(TABLE9), SimConfig("rr", static_quantum=20, arrival_mode="paper_faithful"))
    assert s.finish == {"P1": 82, "P2": 149, "P3": 195, "P4": 209}


def test_mmrr_admits_arrivals_only_at_round_boundaries():
    s = run_simulation(pset(TABLE9), SimConfig("mmrr"))
    # P2 arrives at 17 while P1 is running alone; it gets its own later round
    assert s.quantum_trace == (25, 47, 25, 25, 25)
    assert [r.start for r in s.rounds] == [0, 22, 69, 119, 169]


def test_idle_gap_jumps_to_next_arrival():
    for policy in POLICIES:
        s = run_simulation(pset([("A", 0, 3), ("B", 10, 4)]), SimConfig(policy))
        assert s.slices == (Slice("A", 0, 3), Slice("B", 10, 14))


def test_empty_workload_rejected():
    with pytest.raises(ValueError, match="empty"):
        run_simulation(pset([]), SimConfig())
    with pytest.raises(ValueError, match="empty"):
        tick_oracle_simulate(pset([]), SimConfig())


@pytest.mark.parametrize("kwargs", [dict(policy="lottery"), dict(static_quantum=0), dict(quantum_floor=0),
                                    dict(arrival_mode="eager")])
def test_bad_config(kwargs):
    with pytest.raises(ValueError):
        SimConfig(**kwargs)


@pytest.mark.parametrize("rows", [TABLE5, ILLUSTRATION, TABLE7, TABLE9])
@pytest.mark.parametrize("config", ALL_CONFIGS, ids=str)
def test_oracle_matches_on_published_workloads(rows, config):
    s = pset(rows)
    assert same_schedule(run_simulation(s, config), tick_oracle_simulate(s, config))


@settings(max_examples=300, deadline=None)
@given(process_sets(), st.sampled_from(ALL_CONFIGS))
def test_oracle_equivalence_property(s, config):
    assert same_schedule(run_simulation(s, config), tick_oracle_simulate(s, config))


def check_invariants(schedule, arrival_aware=True):
    procs = schedule.workload.by_pid()
    slices = schedule.slices
    for a, b in zip(slices, slices[1:]):
        assert a.end <= b.start
    assert schedule.busy_time() == {pid: p.burst for pid, p in procs.items()}
    for pid, p in procs.items():
        assert schedule.finish[pid] == max(x.end for x in slices if x.pid == pid)
    if arrival_aware:
        for x in slices:
            assert x.start >= procs[x.pid].arrival
        # gaps only when nothing admitted still had work
        for a, b in zip(slices, slices[1:]):
            if a.start < b.start and a.end < b.start:
                for pid, p in procs.items():
                    done_by_gap = sum(x.duration for x in slices if x.pid == pid and x.end <= a.end)
                    assert not (p.arrival <= a.end and done_by_gap < p.burst)
    else:
        assert slices[0].start == 0
        assert slices[-1].end == sum(p.burst for p in procs.values())


@settings(max_examples=300, deadline=None)
@given(process_sets(), st.sampled_from(ALL_CONFIGS))
def test_schedule_invariants(s, config):
    check_invariants(run_simulation(s, config), config.arrival_mode == "standard")


@settings(max_examples=100, deadline=None)
@given(process_sets(max_arrival=0), st.sampled_from(POLICIES))
def test_all_at_zero_ends_at_total_burst(s, policy):
    sched = run_simulation(s, SimConfig(policy))
    assert sched.slices[-1].end == sum(p.burst for p in s)


@given(process_sets(), st.sampled_from(ALL_CONFIGS))
def test_deterministic(s, config):
    assert run_simulation(s, config) == run_simulation(s, config)


def test_schedule_json_export():
    s = run_simulation(pset(TABLE5), SimConfig("mmrr"))
    doc = json.loads(s.to_json())
    assert set(doc) == {"slices", "quantum_trace", "finish"}
    assert doc["slices"][-1] == {"pid": "P4", "start": 280, "end": 300}
    assert doc["quantum_trace"] == [140, 25]
    assert doc["finish"]["P4"] == 300


def test_slice_rejects_empty_interval():
    with pytest.raises(ValueError):
        Slice("P1", 5, 5)
