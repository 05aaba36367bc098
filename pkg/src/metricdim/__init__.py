"""Exact metric dimension for corona products of Cartesian product graphs."""

from .graph import (
    Base,
    DisconnectedGraphError,
    Graph,
    GraphError,
    Pair,
    Pendant,
    add_pendant,
    all_pairs_distances,
    cartesian_product,
    complete_graph,
    corona,
    corona_k1,
    cycle_graph,
    degree,
    path_graph,
)
from .resolving import (
    DimensionCertificate,
    TwinPartition,
    is_resolving_set,
    metric_dimension_exact,
    metric_representation,
    pendant_bound_check,
    twin_classes,
    witness_pair,
)
from .families import (
    FamilyInstance,
    RefutationReport,
    SizeCapExceeded,
    TheoremRangeError,
    TheoremReport,
    claimed_dim,
    grid_corona,
    kn_pm_corona,
    refute_old_theorems,
    theorem3_formula,
    theorem3_set,
    theorem4_set,
    verify_lemma4,
    verify_theorem,
)

__version__ = "0.1.0"
