"""Exact-arithmetic toolkit for mass-action reaction networks."""

from .arrangement import SignCell, enumerate_sign_cells
from .classify import (
    ClassificationReport,
    check_violation,
    classify,
    endotactic_2d_sweep_oracle,
    extremal_subnetwork,
    is_consistent,
    is_endotactic,
    is_extremally_weakly_reversible,
    is_strongly_endotactic,
)
from .cones import (
    ConeWitness,
    cone_member,
    on_relative_hull_boundary,
    relint_contained,
    relint_intersect,
    relint_member,
)
from .egraph import (
    EGraph,
    Edge,
    RateAssignment,
    is_reversible,
    is_source_only,
    is_weakly_reversible,
    split_edge,
    validate,
)
from .equivalence import InclusionReport, capacity_for_equivalence, dynamics_included, find_rate_witness
from .massaction import VectorField, evaluate_field, fields_equal, generate_field, stoichiometric_subspace
from .parser import NetworkDocument, parse, serialize, serialize_egraph, to_egraph
from .realize import RealizationResult, eliminate_zero_sources, ewr_realize_2d, make_source_only

__all__ = [
    "ClassificationReport", "ConeWitness", "EGraph", "Edge", "InclusionReport", "NetworkDocument",
    "RateAssignment", "RealizationResult", "SignCell", "VectorField",
    "capacity_for_equivalence", "check_violation", "classify", "cone_member", "dynamics_included",
    "eliminate_zero_sources", "endotactic_2d_sweep_oracle", "enumerate_sign_cells", "evaluate_field",
    "ewr_realize_2d", "extremal_subnetwork", "fields_equal", "find_rate_witness", "generate_field",
    "is_consistent", "is_endotactic", "is_extremally_weakly_reversible", "is_reversible",
    "is_source_only", "is_strongly_endotactic", "is_weakly_reversible", "make_source_only",
    "on_relative_hull_boundary", "parse", "relint_contained", "relint_intersect", "relint_member",
    "serialize", "serialize_egraph", "split_edge", "stoichiometric_subspace", "to_egraph", "validate",
]
