"""Corona-of-product families, their landmark constructions and verification reports.

Two families are covered, both with one pendant vertex hung on every vertex
of a two-factor Cartesian product:

* ``grid``: ``(P_n x P_m) (.) K1``
* ``complete``: ``(K_n x P_m) (.) K1``

Vertex ``Pair(i, j)`` is written ``v(i,j)`` and its pendant ``u(i,j)``.
Exact dimensions are established by :func:`metricdim.resolving.metric_dimension_exact`.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Optional

from .graph import (
    Graph,
    Pair,
    Pendant,
    all_pairs_distances,
    cartesian_product,
    complete_graph,
    corona_k1,
    path_graph,
)
from .resolving import (
    DimensionCertificate,
    is_resolving_set,
    metric_dimension_exact,
    metric_representation,
)

GRID = "grid"
COMPLETE = "complete"
FAMILIES = (GRID, COMPLETE)

DEFAULT_SIZE_CAP = 60
LEMMA4_SIZE_CAP = 30

# Values asserted by the earlier paper for m = 2 (grid: any n; complete: n >= 3).
OLD_GRID_CLAIM = 2


class TheoremRangeError(ValueError):
    """Parameters outside the range in which a theorem is stated."""


class SizeCapExceeded(ValueError):
    """Instance too large for desk-scale exhaustive verification."""


def size_cap() -> int:
    """Vertex cap for exhaustive checks; ``METRICDIM_SIZE_CAP`` overrides the default 60."""
    raw = os.environ.get("METRICDIM_SIZE_CAP")
    return int(raw) if raw else DEFAULT_SIZE_CAP


def _guard(order: int, cap: Optional[int]) -> None:
    cap = size_cap() if cap is None else cap
    if order > cap:
        raise SizeCapExceeded(f"instance has {order} vertices, cap is {cap}")


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    n: int
    m: int
    graph: Graph

    @property
    def name(self) -> str:
        factor = "P" if self.family == GRID else "K"
        return f"({factor}{self.n} x P{self.m}) o K1"

    def v(self, i: int, j: int) -> int:
        return self.graph.vertex(Pair(i, j))

    def u(self, i: int, j: int) -> int:
        return self.graph.vertex(Pendant(Pair(i, j)))


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _check_positive(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be >= 1, got n={n}, m={m}")


def grid_corona(n: int, m: int) -> FamilyInstance:
    _check_positive(n, m)
    return FamilyInstance(GRID, n, m, corona_k1(cartesian_product(path_graph(n), path_graph(m))))


def kn_pm_corona(n: int, m: int) -> FamilyInstance:
    _check_positive(n, m)
    return FamilyInstance(COMPLETE, n, m, corona_k1(cartesian_product(complete_graph(n), path_graph(m))))


def family_instance(family: str, n: int, m: int) -> FamilyInstance:
    _check_family(family)
    return grid_corona(n, m) if family == GRID else kn_pm_corona(n, m)


def in_theorem_range(family: str, n: int, m: int) -> bool:
    _check_family(family)
    return n >= 3 and m >= 2


def _require_range(family: str, n: int, m: int) -> None:
    if not in_theorem_range(family, n, m):
        thm = 3 if family == GRID else 4
        raise TheoremRangeError(
            f"Theorem {thm} does not apply to {family} family with n={n}, m={m} (needs n >= 3, m >= 2)"
        )


def theorem3_set(n: int, m: int) -> tuple[Pair, ...]:
    """Landmarks ``v(1,1), v(1,m), v(n,m)`` for the grid corona."""
    _require_range(GRID, n, m)
    return (Pair(1, 1), Pair(1, m), Pair(n, m))


def theorem3_formula(n: int, m: int, i: int, j: int, pendant: bool) -> tuple[int, int, int]:
    """Closed-form representation of ``v(i,j)`` (or ``u(i,j)``) against :func:`theorem3_set`."""
    if not (1 <= i <= n and 1 <= j <= m):
        raise ValueError(f"index ({i},{j}) outside 1..{n} x 1..{m}")
    r = (i + j - 2, m + i - j - 1, m + n - i - j)
    if pendant:
        r = tuple(x + 1 for x in r)
    return r


def theorem4_set(n: int, m: int) -> tuple[Pair, ...]:
    """``v(1,1), v(2,1), v(3,m)`` for n = 3; ``v(1,m), v(3,1), ..., v(n,1)`` for n >= 4."""
    _require_range(COMPLETE, n, m)
    if n == 3:
        return (Pair(1, 1), Pair(2, 1), Pair(3, m))
    return (Pair(1, m),) + tuple(Pair(i, 1) for i in range(3, n + 1))


def constructed_set(family: str, n: int, m: int) -> tuple[Pair, ...]:
    _check_family(family)
    return theorem3_set(n, m) if family == GRID else theorem4_set(n, m)


def claimed_dim(family: str, n: int, m: int) -> int:
    _check_family(family)
    _require_range(family, n, m)
    if family == GRID:
        return 3
    return 3 if n == 3 else n - 1


@dataclass
class TheoremReport:
    instance: FamilyInstance
    claimed_dim: int
    constructed_set: tuple[str, ...]
    construction_resolves: bool
    exact: DimensionCertificate
    formula_matches_bfs: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return (
            self.construction_resolves
            and self.exact.dim == self.claimed_dim
            and len(self.constructed_set) == self.claimed_dim
            and self.formula_matches_bfs is not False
        )

    def to_dict(self) -> dict:
        inst = self.instance
        return {
            "family": inst.family,
            "n": inst.n,
            "m": inst.m,
            "order": inst.graph.order,
            "claimed": self.claimed_dim,
            "exact": self.exact.dim,
            "constructed_set": list(self.constructed_set),
            "construction_ok": self.construction_resolves,
            "formula_ok": self.formula_matches_bfs,
            "witness": list(self.exact.witness_labels),
            "exhausted_size": self.exact.exhausted_size,
            "subsets_checked": self.exact.subsets_checked,
            "passed": self.passed,
        }


def formula_matches_bfs(inst: FamilyInstance) -> bool:
    """Compare the closed-form triples with BFS representations on all 2nm vertices."""
    g, n, m = inst.graph, inst.n, inst.m
    dm = all_pairs_distances(g)
    s = [g.vertex(lab) for lab in theorem3_set(n, m)]
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            for pendant in (False, True):
                v = inst.u(i, j) if pendant else inst.v(i, j)
                if metric_representation(dm, v, s) != theorem3_formula(n, m, i, j, pendant):
                    return False
    return True


def verify_theorem(family: str, n: int, m: int, *, cap: Optional[int] = None, threads: int = 1) -> TheoremReport:
    """Construction check, exact solve and (grid family) formula check for one instance."""
    claimed = claimed_dim(family, n, m)
    _guard(2 * n * m, cap)
    inst = family_instance(family, n, m)
    g = inst.graph
    dm = all_pairs_distances(g)
    labels = constructed_set(family, n, m)
    s = [g.vertex(lab) for lab in labels]
    return TheoremReport(
        instance=inst,
        claimed_dim=claimed,
        constructed_set=tuple(str(lab) for lab in labels),
        construction_resolves=is_resolving_set(dm, s),
        exact=metric_dimension_exact(g, dm=dm, threads=threads),
        formula_matches_bfs=formula_matches_bfs(inst) if family == GRID else None,
    )


def verify_lemma4(n: int, m: int, *, cap: int = LEMMA4_SIZE_CAP, threads: int = 1) -> bool:
    """Exact dim of ``K_n x P_m`` (no pendants) equals ``n - 1``."""
    if n < 3 or m < 1:
        raise TheoremRangeError(f"Lemma 4 needs n >= 3, m >= 1; got n={n}, m={m}")
    _guard(n * m, cap)
    g = cartesian_product(complete_graph(n), path_graph(m))
    return metric_dimension_exact(g, threads=threads).dim == n - 1


@dataclass
class RefutationReport:
    """Old claimed value against the exact one for an m = 2 instance.

    ``expect_discrepancy`` is False only for the complete family at n = 3,
    where the old and corrected values coincide.
    """

    instance: FamilyInstance
    old_claim: int
    true_dim: int
    exact: DimensionCertificate
    expect_discrepancy: bool = True

    @property
    def discrepancy(self) -> bool:
        return self.true_dim != self.old_claim

    @property
    def evidence_covers_old_claim(self) -> bool:
        """An old claim above the truth is refuted by the witness; one below needs exhaustion."""
        if self.old_claim > self.true_dim:
            return len(self.exact.witness) == self.true_dim
        if self.old_claim < self.true_dim:
            size = self.old_claim
            return size not in self.exact.skipped_sizes and self.exact.checked.get(size) == math.comb(
                self.exact.order, size
            )
        return False

    @property
    def status(self) -> str:
        if self.discrepancy and self.evidence_covers_old_claim:
            return "discrepancy confirmed"
        if not self.discrepancy:
            return "no discrepancy"
        return "inconclusive"

    @property
    def passed(self) -> bool:
        if self.expect_discrepancy:
            return self.status == "discrepancy confirmed"
        return self.status == "no discrepancy"

    def to_dict(self) -> dict:
        inst = self.instance
        size = min(self.old_claim, self.true_dim - 1)
        return {
            "family": inst.family,
            "n": inst.n,
            "m": inst.m,
            "old_claim": self.old_claim,
            "true_dim": self.true_dim,
            "witness": list(self.exact.witness_labels),
            "exhausted_size": size,
            "failing_subsets": self.exact.checked.get(size, 0),
            "status": self.status,
            "passed": self.passed,
        }


def _refutation(inst: FamilyInstance, old: int, expect: bool, threads: int) -> RefutationReport:
    cert = metric_dimension_exact(inst.graph, threads=threads)
    return RefutationReport(inst, old, cert.dim, cert, expect)


def refute_old_theorems(n: int, *, cap: Optional[int] = None, threads: int = 1) -> tuple[RefutationReport, RefutationReport]:
    """Check the earlier m = 2 claims (grid: 2, complete: n) against exact dimensions."""
    if n < 3:
        raise TheoremRangeError(f"refutation is stated for n >= 3, got n={n}")
    _guard(4 * n, cap)
    grid = _refutation(grid_corona(n, 2), OLD_GRID_CLAIM, True, threads)
    complete = _refutation(kn_pm_corona(n, 2), n, n >= 4, threads)
    return grid, complete
