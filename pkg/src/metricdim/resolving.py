"""Metric representations, resolving-set checks and exact metric dimension.

The exact solver walks subset sizes upward and, within a size, the
lexicographic combinations of vertex ids.  A subset resolves iff the
``n`` rows of the distance matrix restricted to its columns are pairwise
distinct; batches of subsets are tested at once by packing each row into a
single integer key and sorting.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .graph import Graph, GraphError, add_pendant, all_pairs_distances

CHUNK = 4096

FailureCallback = Callable[[tuple[int, ...], tuple[int, int]], None]


def _check_ids(dm: np.ndarray, ids) -> None:
    n = dm.shape[0]
    for v in ids:
        if not 0 <= int(v) < n:
            raise GraphError(f"vertex id {v} out of range [0, {n})")


def _check_landmarks(dm: np.ndarray, s: Sequence[int]) -> None:
    _check_ids(dm, s)
    if len(set(s)) != len(s):
        raise GraphError(f"landmark set {tuple(s)} has duplicates")


def metric_representation(dm: np.ndarray, v: int, s: Sequence[int]) -> tuple[int, ...]:
    """``r(v|S)``: distances from ``v`` to each landmark, in landmark order."""
    _check_ids(dm, [v])
    _check_landmarks(dm, s)
    return tuple(int(dm[v, t]) for t in s)


def _row_keys(dm: np.ndarray, s: Sequence[int]) -> list[tuple[int, ...]]:
    cols = dm[:, list(s)]
    return [tuple(row) for row in cols.tolist()]


def witness_pair(dm: np.ndarray, s: Sequence[int]) -> Optional[tuple[int, int]]:
    """Lexicographically least pair ``u < v`` with ``r(u|S) == r(v|S)``, or ``None``."""
    _check_landmarks(dm, s)
    first: dict[tuple[int, ...], int] = {}
    best = None
    for v, key in enumerate(_row_keys(dm, s)):
        u = first.setdefault(key, v)
        if u != v and (best is None or (u, v) < best):
            best = (u, v)
    return best


def is_resolving_set(dm: np.ndarray, s: Sequence[int]) -> bool:
    _check_landmarks(dm, s)
    return len(set(_row_keys(dm, s))) == dm.shape[0]


@dataclass(frozen=True)
class TwinPartition:
    """Classes of mutually twin vertices (equal distance to every third vertex)."""

    classes: tuple[tuple[int, ...], ...]
    lower_bound: int

    def class_of(self, v: int) -> tuple[int, ...]:
        for c in self.classes:
            if v in c:
                return c
        raise GraphError(f"vertex id {v} not in partition")


def are_twins(dm: np.ndarray, u: int, v: int) -> bool:
    if u == v:
        return True
    differ = dm[u] != dm[v]
    differ[[u, v]] = False
    return not differ.any()


def twin_classes(dm: np.ndarray) -> TwinPartition:
    """Partition vertices into twin classes.

    Every resolving set contains all but at most one vertex of each class, so
    ``sum(|class| - 1)`` (and at least 1 once ``n >= 2``) bounds the
    dimension from below.
    """
    n = dm.shape[0]
    reps: list[int] = []
    members: list[list[int]] = []
    for v in range(n):
        for k, r in enumerate(reps):
            if are_twins(dm, r, v):
                members[k].append(v)
                break
        else:
            reps.append(v)
            members.append([v])
    bound = sum(len(c) - 1 for c in members)
    if n >= 2:
        bound = max(bound, 1)
    return TwinPartition(tuple(tuple(c) for c in members), bound)


@dataclass
class DimensionCertificate:
    """Exact metric dimension with one minimum resolving set and exhaustion counts.

    ``checked`` maps each searched size to the number of subsets examined
    (all of them for sizes below ``dim``).  Sizes in ``skipped_sizes`` were
    ruled out by the twin lower bound rather than by enumeration.
    """

    dim: int
    witness: tuple[int, ...]
    witness_labels: tuple[str, ...]
    exhausted_size: int
    subsets_checked: int
    checked: dict[int, int]
    skipped_sizes: tuple[int, ...]
    twins: TwinPartition
    order: int
    wall_time: float = field(default=0.0, compare=False)

    @property
    def exhaustive(self) -> bool:
        """True when size ``dim - 1`` was fully enumerated (not skipped)."""
        if self.dim == 0:
            return True
        return self.exhausted_size not in self.skipped_sizes and self.subsets_checked == math.comb(
            self.order, self.exhausted_size
        )

    def to_dict(self, labels: Optional[Sequence[str]] = None, timing: bool = False) -> dict:
        def name(v):
            return labels[v] if labels is not None else v

        d = {
            "dim": self.dim,
            "witness": list(self.witness_labels),
            "witness_ids": list(self.witness),
            "exhausted_size": self.exhausted_size,
            "subsets_checked": self.subsets_checked,
            "checked_by_size": {str(k): c for k, c in sorted(self.checked.items())},
            "skipped_sizes": list(self.skipped_sizes),
            "twin_lower_bound": self.twins.lower_bound,
            "twin_classes": [[name(v) for v in c] for c in self.twins.classes if len(c) > 1],
        }
        if timing:
            d["wall_time_s"] = round(self.wall_time, 6)
        return d

    def to_text(self, labels: Optional[Sequence[str]] = None, timing: bool = False) -> str:
        d = self.to_dict(labels, timing)
        lines = [
            f"dim = {d['dim']}",
            f"witness = {{{', '.join(d['witness'])}}}",
            f"exhausted size = {d['exhausted_size']}",
            f"subsets checked = {d['subsets_checked']}",
            f"skipped sizes (twin bound {d['twin_lower_bound']}) = {d['skipped_sizes']}",
            "nontrivial twin classes = "
            + ("none" if not d["twin_classes"] else "; ".join("{" + ", ".join(map(str, c)) + "}" for c in d["twin_classes"])),
        ]
        if timing:
            lines.append(f"wall time = {d['wall_time_s']:.3f} s")
        return "\n".join(lines)


def _resolving_mask(dm: np.ndarray, combos: np.ndarray, base: int) -> np.ndarray:
    """Boolean mask over the rows of ``combos`` (shape ``(B, k)``): does each subset resolve?"""
    n = dm.shape[0]
    k = combos.shape[1]
    if k == 0:
        return np.full(len(combos), n <= 1)
    if base ** k < 2**62:
        keys = np.zeros((n, len(combos)), dtype=np.int64)
        for t in range(k):
            keys = keys * base + dm[:, combos[:, t]]
        keys.sort(axis=0)
        return ~(np.diff(keys, axis=0) == 0).any(axis=0)
    return np.array([np.unique(dm[:, c], axis=0).shape[0] == n for c in combos], dtype=bool)


def _chunks(n: int, k: int):
    it = itertools.combinations(range(n), k)
    while True:
        block = list(itertools.islice(it, CHUNK))
        if not block:
            return
        yield np.array(block, dtype=np.int64).reshape(len(block), k)


def _search_size(
    dm: np.ndarray,
    k: int,
    threads: int,
    on_fail: Optional[FailureCallback],
) -> tuple[Optional[tuple[int, ...]], int]:
    """First resolving k-subset in lexicographic order and the count examined up to it."""
    n = dm.shape[0]
    base = int(dm.max()) + 1
    examined = 0
    gen = _chunks(n, k)
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        while True:
            batch = list(itertools.islice(gen, max(threads, 1)))
            if not batch:
                return None, examined
            if pool is None:
                masks = [_resolving_mask(dm, c, base) for c in batch]
            else:
                masks = list(pool.map(lambda c: _resolving_mask(dm, c, base), batch))
            for combos, mask in zip(batch, masks):
                hits = np.flatnonzero(mask)
                stop = int(hits[0]) if len(hits) else len(combos)
                if on_fail is not None:
                    for c in combos[:stop]:
                        s = tuple(int(x) for x in c)
                        on_fail(s, witness_pair(dm, s))
                if len(hits):
                    return tuple(int(x) for x in combos[stop]), examined + stop + 1
                examined += len(combos)
    finally:
        if pool is not None:
            pool.shutdown()


def default_threads() -> int:
    return os.cpu_count() or 1


def metric_dimension_exact(
    g: Graph,
    *,
    threads: int = 1,
    use_twins: bool = True,
    on_fail: Optional[FailureCallback] = None,
    dm: Optional[np.ndarray] = None,
) -> DimensionCertificate:
    """Exact metric dimension of a connected graph by ascending exhaustive search.

    The returned witness is the lexicographically least minimum resolving
    set.  With ``use_twins`` the sizes below the twin lower bound are skipped
    (and recorded as such).  ``on_fail`` receives every non-resolving subset
    examined together with its witness pair.
    """
    t0 = time.perf_counter()
    if dm is None:
        dm = all_pairs_distances(g)
    n = dm.shape[0]
    twins = twin_classes(dm)
    start = max(twins.lower_bound, 1) if use_twins else 1
    checked: dict[int, int] = {}
    for k in itertools.chain([0], range(start, n + 1)):
        found, count = _search_size(dm, k, threads, on_fail)
        checked[k] = count
        if found is not None:
            break
    else:  # pragma: no cover - V always resolves
        raise AssertionError("no resolving set found")
    skipped = tuple(range(1, start)) if k >= start else ()
    exhausted = max(k - 1, 0)
    return DimensionCertificate(
        dim=k,
        witness=found,
        witness_labels=tuple(str(g.label(v)) for v in found),
        exhausted_size=exhausted,
        subsets_checked=checked.get(exhausted, 0),
        checked=checked,
        skipped_sizes=skipped,
        twins=twins,
        order=n,
        wall_time=time.perf_counter() - t0,
    )


def pendant_bound_dims(g: Graph, v: int, **kw) -> tuple[int, int]:
    """``(dim(G), dim(G + pendant at v))``."""
    return metric_dimension_exact(g, **kw).dim, metric_dimension_exact(add_pendant(g, v), **kw).dim


def pendant_bound_check(g: Graph, v: int, **kw) -> bool:
    """Does ``dim(G) <= dim(G1) <= dim(G) + 1`` hold when a pendant is added at ``v``?"""
    if g.order < 2:
        raise GraphError("pendant_bound_check needs at least 2 vertices")
    d, d1 = pendant_bound_dims(g, v, **kw)
    return d <= d1 <= d + 1
