import itertools

import networkx as nx
import numpy as np
import pytest

from metricdim import Base, Graph, cartesian_product, complete_graph, corona_k1, cycle_graph, path_graph

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, str]] = {}


def from_nx(G: nx.Graph) -> Graph:
    nodes = sorted(G.nodes())
    idx = {v: k for k, v in enumerate(nodes)}
    return Graph([Base(k + 1) for k in range(len(nodes))], [(idx[a], idx[b]) for a, b in G.edges()])


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges())
    return G


def oracle_distances(g: Graph) -> list[list[int]]:
    """Independent distance table from networkx BFS."""
    lengths = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    return [[lengths[u][v] for v in range(g.order)] for u in range(g.order)]


def oracle_resolves(d: list[list[int]], s) -> bool:
    reps = {tuple(d[v][t] for t in s) for v in range(len(d))}
    return len(reps) == len(d)


def oracle_dim(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Unpruned enumeration: sizes 1..n-1, all C(n, k) subsets, first lexicographic hit."""
    d = oracle_distances(g)
    n = g.order
    if n == 1:
        return 0, ()
    for k in range(1, n + 1):
        for s in itertools.combinations(range(n), k):
            if oracle_resolves(d, s):
                return k, s
    raise AssertionError


def random_connected(rng: np.random.Generator, n: int) -> Graph:
    """Random spanning tree plus random extra edges."""
    edges = set()
    for v in range(1, n):
        u = int(rng.integers(0, v))
        edges.add((u, v))
    p = rng.uniform(0.0, 0.6)
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return Graph([Base(k + 1) for k in range(n)], sorted(edges))


def random_corpus(count: int = 200, seed: int = 20081231) -> list[Graph]:
    rng = np.random.default_rng(seed)
    return [random_connected(rng, int(rng.integers(1, 8))) for _ in range(count)]


def named_corpus(max_order: int = 7) -> list[tuple[str, Graph]]:
    out = []
    for k in range(1, 8):
        out.append((f"P{k}", path_graph(k)))
        out.append((f"K{k}", complete_graph(k)))
        if k >= 3:
            out.append((f"C{k}", cycle_graph(k)))
    for a in range(1, 4):
        for b in range(a, 4):
            out.append((f"P{a}xP{b}", cartesian_product(path_graph(a), path_graph(b))))
    out.append(("K3xP2", cartesian_product(complete_graph(3), path_graph(2))))
    for k in range(1, 4):
        out.append((f"P{k}oK1", corona_k1(path_graph(k))))
    out.append(("K3oK1", corona_k1(complete_graph(3))))
    return [(name, g) for name, g in out if g.order <= max_order]


def atlas_connected(max_order: int = 7) -> list[Graph]:
    """Every connected graph on 1..max_order vertices (up to isomorphism)."""
    return [from_nx(G) for G in nx.graph_atlas_g()[1:] if G.number_of_nodes() <= max_order and nx.is_connected(G)]


@pytest.fixture
def record_acceptance():
    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_RESULTS[number] = (title, ok, detail)
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, ok, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {number}. {title}  {detail}".rstrip())
