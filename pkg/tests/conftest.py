import random

import pytest

from ribbonpoly import random_ribbon_graph

_ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Record one pass/fail line per acceptance criterion."""

    def record(label, ok, detail=""):
        _ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" ({detail})" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_corpus(seed, count, max_edges, max_vertices=4):
    rng = random.Random(seed)
    return [random_ribbon_graph(rng, rng.randint(1, max_vertices), rng.randint(0, max_edges))
            for _ in range(count)]


@pytest.fixture(scope="session")
def small_corpus():
    return random_corpus(2024, 60, 6)
