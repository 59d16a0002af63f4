import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from rainbowdc.corpus import connected_upto
from rainbowdc.graph import Graph

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def connected_graphs(draw, min_n=2, max_n=7, extra_max=8):
    """Random connected simple graph: a random tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=extra_max, unique=True))
        edges.update(extra)
    return Graph(n, tuple(sorted(edges)))


@st.composite
def connected_multigraphs(draw, max_n=8, max_degree=6):
    """Random connected loopless multigraph with maximum degree at most ``max_degree``."""
    n = draw(st.integers(2, max_n))
    deg = [0] * n
    edges = []
    for v in range(1, n):
        choices = [u for u in range(v) if deg[u] < max_degree]
        u = draw(st.sampled_from(choices))
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    for _ in range(draw(st.integers(0, 3 * n))):
        a = draw(st.integers(0, n - 1))
        b = draw(st.integers(0, n - 1))
        if a != b and deg[a] < max_degree and deg[b] < max_degree:
            edges.append((a, b))
            deg[a] += 1
            deg[b] += 1
    return Graph(n, tuple(edges))


def random_multigraph(rng: random.Random, max_n=8, max_degree=6) -> Graph:
    """Same distribution shape as ``connected_multigraphs`` but from a seeded RNG."""
    n = rng.randint(2, max_n)
    deg = [0] * n
    edges = []
    for v in range(1, n):
        u = rng.choice([u for u in range(v) if deg[u] < max_degree])
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    for _ in range(rng.randint(0, 3 * n)):
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b and deg[a] < max_degree and deg[b] < max_degree:
            edges.append((a, b))
            deg[a] += 1
            deg[b] += 1
    return Graph(n, tuple(edges))


@pytest.fixture(scope="session")
def corpus6():
    return connected_upto(6)


@pytest.fixture(scope="session")
def corpus7():
    return connected_upto(7)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
