import pytest
from hypothesis import strategies as st

from mmrr.workload import Process, ProcessSet, generate_random_workload

ILLUSTRATION = [("P1", 0, 90), ("P2", 0, 96), ("P3", 0, 9), ("P4", 0, 37)]
TABLE1 = [("P1", 0, 12), ("P2", 0, 45), ("P3", 0, 78), ("P4", 0, 90)]
TABLE5 = [("P1", 0, 20), ("P2", 0, 40), ("P3", 0, 80), ("P4", 0, 160)]
TABLE7 = [("P1", 0, 5), ("P2", 2, 25), ("P3", 15, 55), ("P4", 23, 75)]
TABLE9 = [("P1", 0, 22), ("P2", 17, 47), ("P3", 35, 66), ("P4", 50, 74)]


def pset(rows):
    return ProcessSet.from_tuples(rows)


def random_corpus(count=1000, max_n=8, burst_max=60, arrival_max=30):
    """The seeded corpus shared by the oracle-equivalence and conservation checks."""
    return [
        generate_random_workload(1 + seed % max_n, seed, (1, burst_max), (0, arrival_max))
        for seed in range(count)
    ]


@pytest.fixture(scope="session")
def corpus():
    return random_corpus()


@st.composite
def process_sets(draw, max_n=8, max_burst=60, max_arrival=30, min_n=1):
    n = draw(st.integers(min_n, max_n))
    procs = [
        Process(
            f"P{i + 1}",
            draw(st.integers(0, max_arrival)),
            draw(st.integers(1, max_burst)),
        )
        for i in range(n)
    ]
    return ProcessSet(procs)


def acceptance_line(number, text, ok):
    """Called by tests/test_acceptance.py; collected and echoed in the terminal summary."""
    ACCEPTANCE_RESULTS.append((number, text, ok))


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, ok in sorted(ACCEPTANCE_RESULTS, key=lambda r: r[0]):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {text}")
