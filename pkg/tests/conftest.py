import pytest

from condcolor import graph as G

ACCEPTANCE_LINES: list[str] = []


def small_family_instances(max_vertices=20):
    """Every family instance up to ``max_vertices`` vertices, keyed by a readable id."""
    out = {}
    for n in range(1, max_vertices + 1):
        out[f"path{n}"] = G.path(n)
        out[f"complete{n}"] = G.complete(n) if n <= 8 else None
    for n in range(3, max_vertices + 1):
        out[f"cycle{n}"] = G.cycle(n)
        out[f"csq{n}"] = G.cycle_square(n)
    for n in range(3, max_vertices):
        out[f"wheel{n}"] = G.wheel(n)
    for n in range(1, max_vertices // 2 + 1):
        out[f"grid2n_{n}"] = G.grid2n(n)
    for n in range(2, 5):
        for m in range(n, 8):
            if n * m <= max_vertices:
                out[f"strong{n}x{m}"] = G.strong_grid(n, m)
    for t in range(1, 4):
        for n in range(3, 8):
            if 1 + t * n <= max_vertices:
                out[f"web{t}_{n}"] = G.web(t, n)
    return {k: v for k, v in out.items() if v is not None}


def oracle_instance_set():
    """The instance set for solver-vs-oracle equivalence (all have <= 9 vertices)."""
    inst = {}
    for n in range(1, 10):
        inst[f"path{n}"] = G.path(n)
    for n in range(3, 10):
        inst[f"cycle{n}"] = G.cycle(n)
        inst[f"csq{n}"] = G.cycle_square(n)
    for n in range(2, 5):
        inst[f"ladder{n}"] = G.grid2n(n)
        inst[f"strong2x{n}"] = G.strong_grid(2, n)
    for n in range(3, 9):
        inst[f"web1_{n}"] = G.web(1, n)
    inst["web2_3"] = G.web(2, 3)
    inst["web2_4"] = G.web(2, 4)
    return inst


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
