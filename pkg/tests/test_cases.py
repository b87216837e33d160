from dataclasses import fields

import pytest

from mmrr.cases import ORACLE, PAPER, Expected, builtin_cases, check_case, get_case
from mmrr.engine import SimConfig
from mmrr.metrics import aggregate
from mmrr.oracle import tick_oracle_simulate


def test_case_list():
    names = [c.name for c in builtin_cases()]
    assert names == ["illustration", "case1", "case3", "case4", "case5"]


def test_case5_workload_transcribed():
    assert [p.arrival for p in get_case("case5").workload] == [0, 17, 35, 50]
    assert [p.burst for p in get_case("case5").workload] == [22, 47, 66, 74]


def test_case3_expected_trace():
    assert get_case("case3").expected["MMRR"].quantum_trace == Expected((140, 25), PAPER)


def test_every_expectation_has_provenance():
    for case in builtin_cases():
        for exp in case.expected.values():
            for f in ("att", "awt", "cs", "quantum_trace"):
                assert getattr(exp, f).source in (PAPER, ORACLE)


def test_unknown_provenance_rejected():
    with pytest.raises(ValueError):
        Expected(1, "folklore")


@pytest.mark.parametrize("case", builtin_cases(), ids=lambda c: c.name)
def test_derived_expectations_match_tick_oracle(case):
    """Oracle-tagged values are checked against the tick simulator, not the engine."""
    configs = case.configs()
    for algorithm, exp in case.expected.items():
        report = aggregate(tick_oracle_simulate(case.workload, configs[algorithm]))
        got = {"att": report.att, "awt": report.awt, "cs": report.cs, "quantum_trace": report.quantum_trace}
        for f in ("att", "awt", "cs", "quantum_trace"):
            e = getattr(exp, f)
            if e.source == ORACLE:
                assert got[f] == e.value, (case.name, algorithm, f)
            elif e.oracle_value is not None:
                assert got[f] == e.oracle_value


@pytest.mark.parametrize("case", builtin_cases(), ids=lambda c: c.name)
def test_no_failures(case):
    assert all(r.status in ("PASS", "NOTE") for r in check_case(case))


def test_case3_cs_is_a_note():
    [cs] = [r for r in check_case(get_case("case3")) if r.algorithm == "RR" and r.metric == "CS"]
    assert (cs.expected, cs.computed, cs.status) == (13, 14, "NOTE")
    assert "13" in cs.note


def test_case5_reports_both_rr_modes():
    results = check_case(get_case("case5"))
    att = {r.algorithm: r for r in results if r.metric == "ATT"}
    assert str(att["RR"].computed) == "533/4" and att["RR"].status == "PASS"
    assert att["RR (standard)"].expected * 4 == 473 and att["RR (standard)"].status == "NOTE"
    assert get_case("case5").rr_config == SimConfig("rr", 20, 25, "paper_faithful")


def test_mutated_expectation_fails():
    case = get_case("case4")
    exp = case.expected["MMRR"]
    bad = type(exp)(**{f.name: getattr(exp, f.name) for f in fields(exp)} | {"cs": Expected(6, PAPER)})
    broken = type(case)(**{f.name: getattr(case, f.name) for f in fields(case)}
                        | {"expected": {"MMRR": bad}})
    statuses = {r.metric: r.status for r in check_case(broken)}
    assert statuses["CS"] == "FAIL"
    assert statuses["ATT"] == "PASS"
