import itertools

import networkx as nx
import pytest

from colorcomplex.enumeration import enumerate_triangulations
from colorcomplex.surface import Triangulation


@pytest.fixture(scope="session")
def small_triangulations():
    """All planar triangulations with 4 <= n <= 10, keyed by n."""
    return {n: enumerate_triangulations(n) for n in range(4, 11)}


@pytest.fixture(scope="session")
def k7_torus():
    # the classical embedding of K7 in the torus; not 4-colorable
    return Triangulation([[(i + d) % 7 for d in (1, 3, 2, 6, 4, 5)] for i in range(7)])


def to_nx(T):
    G = nx.Graph()
    G.add_nodes_from(range(T.n))
    G.add_edges_from(T.edges())
    return G


def brute_force_partitions(T):
    """Every proper 4-coloring using all colours, as a set of frozenset partitions."""
    edges = T.edges()
    out = set()
    for labels in itertools.product(range(4), repeat=T.n):
        if len(set(labels)) < 4:
            continue
        if any(labels[u] == labels[v] for u, v in edges):
            continue
        out.add(frozenset(frozenset(v for v in range(T.n) if labels[v] == c) for c in range(4)))
    return out


def as_partition(f):
    return frozenset(frozenset(c) for c in f.classes)


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(line)
