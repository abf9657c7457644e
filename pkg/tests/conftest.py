import random

import networkx as nx
import pytest

from bipzagreb.graph import Graph, from_edge_list

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: k for k, v in enumerate(sorted(h.nodes()))}
    return from_edge_list(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
