"""Immutable labeled graphs, family builders, products and hop distances.

Vertices are dense integer ids ``0..n-1``; every vertex also carries a
structured label (:class:`Base`, :class:`Pair` or :class:`Pendant`) so that
product and pendant provenance survives composition and reports can print
names like ``v(2,3)`` or ``u(2,3)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path


class GraphError(ValueError):
    """Invalid graph construction or query."""


class DisconnectedGraphError(GraphError):
    """Raised when distances are requested on a disconnected graph."""


@dataclass(frozen=True, order=True)
class Base:
    i: int

    def __str__(self) -> str:
        return f"b({self.i})"


@dataclass(frozen=True, order=True)
class Pair:
    i: int
    j: int

    def __str__(self) -> str:
        return f"v({self.i},{self.j})"


@dataclass(frozen=True)
class Pendant:
    """Vertex hung off ``inner``; ``index`` numbers several attachments (corona with |H|>1)."""

    inner: "VertexLabel"
    index: int = 1

    def __str__(self) -> str:
        inner = self.inner
        if isinstance(inner, Pair):
            s = f"u({inner.i},{inner.j})"
        elif isinstance(inner, Base):
            s = f"u({inner.i})"
        else:
            s = f"u[{inner}]"
        return s if self.index == 1 else f"{s}#{self.index}"


VertexLabel = Union[Base, Pair, Pendant]


class Graph:
    """Undirected simple graph with sorted adjacency and injective labels.

    Instances are read-only after construction; every operation in this
    package returns a new graph.
    """

    __slots__ = ("_adj", "_labels", "_index")

    def __init__(self, labels: Sequence[VertexLabel], edges: Iterable[tuple[int, int]]):
        n = len(labels)
        if n < 1:
            raise GraphError("graph must have at least one vertex")
        index = {}
        for vid, lab in enumerate(labels):
            if lab in index:
                raise GraphError(f"duplicate label {lab}")
            index[lab] = vid
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._labels = tuple(labels)
        self._index = index

    def __setattr__(self, name, value):
        if hasattr(self, "_index"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    @property
    def order(self) -> int:
        return len(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    @property
    def labels(self) -> tuple[VertexLabel, ...]:
        return self._labels

    def label(self, v: int) -> VertexLabel:
        self._check(v)
        return self._labels[v]

    def vertex(self, label: VertexLabel) -> int:
        """Return the id carrying ``label``."""
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"no vertex labeled {label}") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self._adj[v]

    def edges(self) -> list[tuple[int, int]]:
        """Sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u, row in enumerate(self._adj) for v in row if u < v]

    def num_edges(self) -> int:
        return sum(len(row) for row in self._adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self._adj):
            raise GraphError(f"vertex id {v} out of range [0, {len(self._adj)})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._labels, self._adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.num_edges()})"


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path_graph needs n >= 1")
    return Graph([Base(i) for i in range(1, n + 1)], [(k, k + 1) for k in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle_graph needs n >= 3")
    return Graph([Base(i) for i in range(1, n + 1)], [(k, (k + 1) % n) for k in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete_graph needs n >= 1")
    return Graph(
        [Base(i) for i in range(1, n + 1)],
        [(a, b) for a in range(n) for b in range(a + 1, n)],
    )


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G x H with vertex ``Pair(i, j)`` at row-major id ``(i-1)*|H| + (j-1)``.

    Both factors must carry ``Base`` labels; only one product level is supported.
    """
    for factor in (g, h):
        if not all(isinstance(lab, Base) for lab in factor.labels):
            raise GraphError("cartesian_product factors must have Base labels")
    n, m = g.order, h.order
    labels = [Pair(a.i, b.i) for a in g.labels for b in h.labels]
    edges = []
    for a in range(n):
        for b1, b2 in h.edges():
            edges.append((a * m + b1, a * m + b2))
    for a1, a2 in g.edges():
        for b in range(m):
            edges.append((a1 * m + b, a2 * m + b))
    return Graph(labels, edges)


def corona(g: Graph, h: Graph) -> Graph:
    """General corona G (.) H: every vertex of the k-th copy of H is joined to vertex k of G.

    Copy ``k`` occupies ids ``n + k*|H| ... n + (k+1)*|H| - 1`` and its
    vertices are labeled ``Pendant(label_k, t)`` for ``t = 1..|H|``.
    """
    n, p = g.order, h.order
    labels = list(g.labels)
    edges = g.edges()
    for k in range(n):
        off = n + k * p
        labels.extend(Pendant(g.labels[k], t) for t in range(1, p + 1))
        edges.extend((k, off + t) for t in range(p))
        edges.extend((off + a, off + b) for a, b in h.edges())
    return Graph(labels, edges)


def corona_k1(g: Graph) -> Graph:
    """G (.) K1: one pendant per vertex; pendant of id ``k`` gets id ``n + k``."""
    return corona(g, path_graph(1))


def add_pendant(g: Graph, v: int) -> Graph:
    """Attach one new degree-1 vertex to ``v`` (appended as the last id)."""
    hub = g.label(v)
    t = 1
    while Pendant(hub, t) in g._index:
        t += 1
    return Graph(list(g.labels) + [Pendant(hub, t)], g.edges() + [(v, g.order)])


def adjacency_matrix(g: Graph) -> csr_matrix:
    rows = [u for u, row in enumerate(g._adj) for _ in row]
    cols = [v for row in g._adj for v in row]
    data = np.ones(len(rows), dtype=np.int8)
    return csr_matrix((data, (rows, cols)), shape=(g.order, g.order))


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Dense read-only ``int64`` hop-count matrix.

    Raises :class:`DisconnectedGraphError` if some pair is unreachable.
    """
    d = shortest_path(adjacency_matrix(g), method="D", directed=False, unweighted=True)
    if not np.isfinite(d).all():
        raise DisconnectedGraphError("graph is disconnected; metric dimension needs a connected graph")
    dm = d.astype(np.int64)
    dm.setflags(write=False)
    return dm


def is_connected(g: Graph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g._adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.order
