"""Edge-list and label files.

Edge list: first line ``n m_edges``, then one sorted ``u v`` pair (0-based,
``u < v``) per line.  Labels live in a companion file (same stem, suffix
``.labels``) with one ``id label`` line per vertex, e.g. ``0 v(1,1)``.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Optional, Union

from .graph import Base, Graph, GraphError, Pair, Pendant, VertexLabel

PathLike = Union[str, Path]

_INDEX = re.compile(r"#(\d+)$")


def parse_label(text: str) -> VertexLabel:
    """Inverse of ``str(label)``: ``b(i)``, ``v(i,j)``, ``u(i,j)``, ``u(i)``, ``u[...]``, optional ``#k``."""
    s = text.strip().replace(" ", "")
    index = 1
    m = _INDEX.search(s)
    if m and s.startswith("u"):
        index = int(m.group(1))
        s = s[: m.start()]
    if s.startswith("u[") and s.endswith("]"):
        return Pendant(parse_label(s[2:-1]), index)
    m = re.fullmatch(r"([bvu])\((\d+)(?:,(\d+))?\)", s)
    if not m:
        raise GraphError(f"cannot parse vertex label {text!r}")
    kind, i, j = m.group(1), int(m.group(2)), m.group(3)
    if kind == "b":
        if j is not None:
            raise GraphError(f"b(...) takes one index: {text!r}")
        return Base(i)
    if kind == "v":
        if j is None:
            raise GraphError(f"v(...) takes two indices: {text!r}")
        return Pair(i, int(j))
    inner = Pair(i, int(j)) if j is not None else Base(i)
    return Pendant(inner, index)


def parse_label_list(text: str) -> list[VertexLabel]:
    """Split ``"v(1,1),v(1,2), u(3,2)"`` on the commas between labels."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [parse_label(p) for p in parts if p.strip()]


def labels_path(edges_path: PathLike) -> Path:
    return Path(edges_path).with_suffix(".labels")


def format_edgelist(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.order} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def format_labels(g: Graph) -> str:
    return "".join(f"{v} {lab}\n" for v, lab in enumerate(g.labels))


def write_graph(g: Graph, path: PathLike, label_path: Optional[PathLike] = None) -> Path:
    """Write the edge list and its label companion; returns the label file path."""
    path = Path(path)
    label_path = labels_path(path) if label_path is None else Path(label_path)
    path.write_text(format_edgelist(g))
    label_path.write_text(format_labels(g))
    return label_path


def read_graph(path: PathLike, label_path: Optional[PathLike] = None) -> Graph:
    """Read an edge list; without a label file vertices become ``b(1..n)``."""
    lines = [ln.strip() for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise GraphError(f"{path}: empty edge list")
    try:
        n, m = (int(x) for x in lines[0].split())
        edges = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"{path}: malformed edge list ({exc})") from None
    if len(edges) != m or any(len(e) != 2 for e in edges):
        raise GraphError(f"{path}: header promises {m} edges, found {len(edges)} lines")
    label_path = labels_path(path) if label_path is None else Path(label_path)
    if label_path.exists():
        labels: list[Optional[VertexLabel]] = [None] * n
        for ln in label_path.read_text().splitlines():
            if not ln.strip():
                continue
            vid, text = ln.split(None, 1)
            labels[int(vid)] = parse_label(text)
        if any(lab is None for lab in labels):
            raise GraphError(f"{label_path}: missing labels")
    else:
        labels = [Base(i) for i in range(1, n + 1)]
    return Graph(labels, edges)
