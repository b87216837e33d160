from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ILLUSTRATION, TABLE5, TABLE7, TABLE9, process_sets, pset
from mmrr.engine import POLICIES, Schedule, SimConfig, Slice, run_simulation
from mmrr.metrics import (
    IncompleteScheduleError,
    aggregate,
    count_context_switches,
    exact_from_json,
    exact_to_json,
    format_exact,
    per_process_turnaround,
    per_process_waiting,
)
from mmrr.workload import Process, ProcessSet


def mmrr(rows):
    return run_simulation(pset(rows), SimConfig("mmrr"))


def test_worked_example_turnaround():
    s = mmrr(ILLUSTRATION)
    assert s.finish == {"P3": 9, "P4": 46, "P1": 223, "P2": 232}
    tat = per_process_turnaround(s)
    assert tat == {"P1": 223, "P2": 232, "P3": 9, "P4": 46}
    assert Fraction(sum(tat.values()), 4) == Fraction("127.5")


def test_worked_example_waiting():
    wt = per_process_waiting(mmrr(ILLUSTRATION))
    assert wt == {"P3": 0, "P4": 9, "P1": 133, "P2": 136}
    assert Fraction(sum(wt.values()), 4) == Fraction("69.5")


def test_table9_mmrr_turnaround():
    assert per_process_turnaround(mmrr(TABLE9)) == {"P1": 22, "P2": 52, "P3": 150, "P4": 159}


def test_no_waiting_single_slice():
    s = run_simulation(pset([("P1", 4, 10)]), SimConfig("rr"))
    assert per_process_turnaround(s) == {"P1": 10}
    assert per_process_waiting(s) == {"P1": 0}


def test_table5_mmrr_waiting_mean():
    assert aggregate(mmrr(TABLE5)).avg_waiting == 55


def test_context_switch_counts():
    assert count_context_switches(mmrr(ILLUSTRATION)) == 5
    assert count_context_switches(mmrr(TABLE5)) == 4
    assert count_context_switches(run_simulation(pset([("P1", 0, 7)]), SimConfig())) == 0


def test_incomplete_schedule_rejected():
    w = pset([("P1", 0, 10)])
    partial = Schedule((Slice("P1", 0, 4),), {"P1": 4}, (), w)
    with pytest.raises(IncompleteScheduleError):
        per_process_turnaround(partial)
    with pytest.raises(IncompleteScheduleError):
        count_context_switches(Schedule((), {}, (), w))


@pytest.mark.parametrize(
    "rows, config, att, awt, cs",
    [
        (TABLE7, SimConfig("mmrr"), "72.5", "32.5", 7),
        (TABLE5, SimConfig("rr", static_quantum=20), "155", "80", None),
        (TABLE9, SimConfig("rr", static_quantum=20, arrival_mode="paper_faithful"), "133.25", "81", 12),
    ],
)
def test_aggregate_against_published(rows, config, att, awt, cs):
    r = aggregate(run_simulation(pset(rows), config))
    assert r.avg_turnaround == Fraction(att)
    assert r.avg_waiting == Fraction(awt)
    if cs is not None:
        assert r.context_switches == cs


@settings(max_examples=200, deadline=None)
@given(process_sets(), st.sampled_from(POLICIES))
def test_metric_identities(s, policy):
    r = aggregate(run_simulation(s, SimConfig(policy)))
    bursts = {p.pid: p.burst for p in s}
    for pid, m in r.per_process.items():
        assert m.waiting + bursts[pid] == m.turnaround
        assert m.turnaround >= bursts[pid]
    assert (r.avg_turnaround * s.n).denominator == 1
    assert (r.avg_waiting * s.n).denominator == 1


@settings(max_examples=100, deadline=None)
@given(process_sets(), st.sampled_from(POLICIES), st.randoms(use_true_random=False))
def test_cs_invariant_under_relabeling(s, policy, rnd):
    names = [f"Q{i}" for i in range(s.n)]
    rnd.shuffle(names)
    relabeled = ProcessSet(Process(name, p.arrival, p.burst) for name, p in zip(names, s))
    a = aggregate(run_simulation(s, SimConfig(policy)))
    b = aggregate(run_simulation(relabeled, SimConfig(policy)))
    assert a.context_switches == b.context_switches


@given(st.lists(st.integers(1, 20), min_size=1, max_size=8), st.integers(20, 40))
def test_rr_with_large_quantum_is_fcfs(bursts, tq):
    s = pset([(f"P{i}", 0, b) for i, b in enumerate(bursts)])
    rr = run_simulation(s, SimConfig("rr", static_quantum=tq))
    fcfs = run_simulation(s, SimConfig("fcfs"))
    assert rr.slices == fcfs.slices
    assert aggregate(rr).context_switches == len(bursts) - 1


@pytest.mark.parametrize(
    "value, text",
    [(Fraction(130), "130"), (Fraction("95.75"), "95.75"), (Fraction("32.5"), "32.5"),
     (Fraction(1, 3), "1/3"), (Fraction(-3, 4), "-0.75"), (Fraction(1, 8), "0.125")],
)
def test_format_exact(value, text):
    assert format_exact(value) == text
    assert exact_from_json(exact_to_json(value)) == value


def test_report_json_shape():
    d = aggregate(mmrr(TABLE5)).to_dict()
    assert set(d) == {"per_process", "att", "awt", "cs", "quantum_trace"}
    assert d["att"] == 130 and d["awt"] == 55 and d["cs"] == 4
    assert d["quantum_trace"] == [140, 25]
    assert d["per_process"]["P4"] == {"turnaround": 300, "waiting": 140, "finish": 300}
