"""Certifying recognition of bend-free grid-path graphs within block graphs.

A graph is representable when each vertex can be drawn as a horizontal or
vertical grid path so that two vertices are adjacent exactly when their
paths share a grid point. Within block graphs this package decides
membership, constructs a representation on acceptance, and extracts a
minimal forbidden induced subgraph on rejection.
"""

from .blocks import (
    BlockClass,
    BlockDecomposition,
    NotBlockGraphWitness,
    bc_canonical_form,
    classify_block,
    cutpoint_multiplicity,
    decompose,
    validate_block_graph,
)
from .build import build_representation
from .certify import Certificate, extract_certificate, verify_certificate
from .family import (
    ProcedureStep,
    apply_procedure,
    check_minimality,
    check_proposition,
    enumerate_family,
    thin_spider,
)
from .graphs import (
    Graph,
    GraphInputError,
    connected_components,
    find_induced_copy,
    induced_subgraph,
)
from .grid import GridPath, GridRepresentation, compact, paths_intersect
from .ordering import (
    BlockOrder,
    ClaimViolation,
    bfs_block_order,
    check_claim_conditions,
    label_cutpoints,
)
from .recognize import Accept, NotBlockGraph, Reject, decide, recognize
from .verify import (
    VerificationReport,
    brute_force_b0vpg,
    check_cardinal_lemmas,
    classify_clique_rep,
    find_induced_f_member,
    verify_representation,
)

__all__ = [
    "Accept",
    "BlockClass",
    "BlockDecomposition",
    "BlockOrder",
    "Certificate",
    "ClaimViolation",
    "Graph",
    "GraphInputError",
    "GridPath",
    "GridRepresentation",
    "NotBlockGraph",
    "NotBlockGraphWitness",
    "ProcedureStep",
    "VerificationReport",
    "apply_procedure",
    "bc_canonical_form",
    "bfs_block_order",
    "brute_force_b0vpg",
    "build_representation",
    "check_cardinal_lemmas",
    "check_claim_conditions",
    "check_minimality",
    "check_proposition",
    "classify_block",
    "classify_clique_rep",
    "compact",
    "connected_components",
    "cutpoint_multiplicity",
    "decide",
    "decompose",
    "enumerate_family",
    "extract_certificate",
    "find_induced_copy",
    "find_induced_f_member",
    "induced_subgraph",
    "label_cutpoints",
    "paths_intersect",
    "recognize",
    "thin_spider",
    "validate_block_graph",
    "verify_certificate",
    "verify_representation",
]

__version__ = "0.1.0"
