import random

import pytest


@pytest.fixture
def rnd():
    return random.Random(12345)


def random_multigraph(rnd, n, m, parallel_burst=0.0):
    """Random edge stream without self-loops; optionally repeats the last edge."""
    edges = []
    while len(edges) < m:
        if edges and rnd.random() < parallel_burst:
            edges.append(edges[-1])
        else:
            u, v = rnd.sample(range(n), 2)
            edges.append((u, v))
    return edges


ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
