"""Bicircular lift matroids and the class "graphic or bicircular lift".

The core objects are :class:`Multigraph` (edge sets are int bitmasks)
and :class:`Matroid` (explicit circuits, at most 32 elements).
"""

from __future__ import annotations

__version__ = "0.1.0"

from .catalog import builtin_catalog, catalog_entry, catalog_get, uniform, whirl, wheel
from .enumeration import Constraints, canonical_form, canonicalize, enumerate_multigraphs
from .errors import CapacityError, InconsistencyError, MatroidAxiomError, ParseError, ResourceError
from .exminor import (
    ExclusionCertificate,
    is_excluded_minor,
    recheck_certificate,
    scan_catalog_stream,
    verify_named_excluded,
)
from .lemmas import LEMMA_IDS, LemmaBudget, LemmaReport, replay, run_all, verify_lemma
from .lift import lift_matroid, lift_rank
from .matroid import (
    Matroid,
    are_clones,
    connectivity_order,
    cosimplify_matroid,
    direct_sum,
    dual,
    element_classes,
    find_isomorphism,
    from_circuits,
    has_minor_isomorphic,
    has_U25_restriction,
    matroid_minor,
    rank_of,
    two_sum,
)
from .membership import (
    ClassVerdict,
    Witness,
    all_lift_representations,
    biclift_witness,
    is_graphic,
    membership_BL_bar,
)
from .multigraph import (
    Multigraph,
    are_2_isomorphic,
    cosimplify_graph,
    cut_edges,
    cycle_matroid,
    cyclomatic,
    edge_classes,
    enumerate_cycles,
    graph_minor,
    one_sum,
    simplify_graph,
    subdivision_profile,
    whitney_switch,
)
from .realize import Caps, DEFAULT_CAPS

__all__ = [
    "__version__",
    "builtin_catalog",
    "catalog_entry",
    "catalog_get",
    "uniform",
    "whirl",
    "wheel",
    "Constraints",
    "canonical_form",
    "canonicalize",
    "enumerate_multigraphs",
    "CapacityError",
    "InconsistencyError",
    "MatroidAxiomError",
    "ParseError",
    "ResourceError",
    "ExclusionCertificate",
    "is_excluded_minor",
    "recheck_certificate",
    "scan_catalog_stream",
    "verify_named_excluded",
    "LEMMA_IDS",
    "LemmaBudget",
    "LemmaReport",
    "replay",
    "run_all",
    "verify_lemma",
    "lift_matroid",
    "lift_rank",
    "Matroid",
    "are_clones",
    "connectivity_order",
    "cosimplify_matroid",
    "direct_sum",
    "dual",
    "element_classes",
    "find_isomorphism",
    "from_circuits",
    "has_minor_isomorphic",
    "has_U25_restriction",
    "matroid_minor",
    "rank_of",
    "two_sum",
    "ClassVerdict",
    "Witness",
    "all_lift_representations",
    "biclift_witness",
    "is_graphic",
    "membership_BL_bar",
    "Multigraph",
    "are_2_isomorphic",
    "cosimplify_graph",
    "cut_edges",
    "cycle_matroid",
    "cyclomatic",
    "edge_classes",
    "enumerate_cycles",
    "graph_minor",
    "one_sum",
    "simplify_graph",
    "subdivision_profile",
    "whitney_switch",
    "Caps",
    "DEFAULT_CAPS",
]
