import networkx as nx
import numpy as np
import pytest

from powerline.classify import default_catalog
from powerline.graphs import SimpleGraph, make_graph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_catalog():
    """(entry, group) for every default catalog group of order <= 64."""
    return [(e, e.build()) for e in default_catalog() if e.order <= 64]


def to_nx(g: SimpleGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> SimpleGraph:
    nodes = sorted(h.nodes)
    pos = {v: i for i, v in enumerate(nodes)}
    return make_graph(len(nodes), [(pos[u], pos[v]) for u, v in h.edges])


def nx_is_line_graph(g: SimpleGraph) -> bool:
    """Third decider: networkx's inverse_line_graph, one component at a time."""
    h = to_nx(g)
    for comp in nx.connected_components(h):
        sub = h.subgraph(comp).copy()
        if sub.number_of_edges() == 0:
            continue
        try:
            nx.inverse_line_graph(sub)
        except nx.NetworkXError:
            return False
    return True


def nx_has_induced(g: SimpleGraph, pattern: SimpleGraph) -> bool:
    matcher = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(pattern))
    return matcher.subgraph_is_isomorphic()


def random_graph(rng: np.random.Generator, n_max: int, n_min: int = 0) -> SimpleGraph:
    n = int(rng.integers(n_min, n_max + 1))
    p = rng.uniform(0.1, 0.9)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return make_graph(n, edges)
