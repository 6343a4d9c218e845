"""Graph reconstruction workbench: pair parameters, deck solvers, recognition."""

from .canon import (
    CanonicalCode,
    Graph6ParseError,
    are_isomorphic,
    canonical_form,
    enumerate_graphs,
    graph6_decode,
    graph6_encode,
)
from .deck import Deck, IllegitimateDeckError, build_deck
from .graph import (
    DisconnectedGraphError,
    Graph,
    InvalidPairError,
    NotDominatingPairError,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    random_graph,
)
from .params import (
    ClassMembership,
    ParamTable,
    SSet,
    class_membership,
    dav_table,
    dv_table,
    pav,
    pav_vector,
    pv,
    pv_vector,
    s_set,
)
from .recognize import (
    ComplementDiamCategory,
    HSubclass,
    RecognitionReport,
    Refusal,
    certify_gamma_at_least_3,
    complement_diam_category,
    recognize_H,
)
from .reconstruct import (
    HypothesisViolatedError,
    NotInScopeError,
    ReconstructionOutcome,
    reconstruct_C1,
    reconstruct_C2,
)
from .solver import (
    CertificateError,
    GammaCertificate,
    IdentityReport,
    check_identity,
    identity_reports,
    solve_dav_from_deck,
    solve_dv_from_deck,
    solve_pav_from_deck,
    solve_pv_from_deck,
)
from .sweeps import SweepResult, run_suite

__all__ = [
    "CanonicalCode",
    "CertificateError",
    "ClassMembership",
    "ComplementDiamCategory",
    "Deck",
    "DisconnectedGraphError",
    "GammaCertificate",
    "Graph",
    "Graph6ParseError",
    "HSubclass",
    "HypothesisViolatedError",
    "IdentityReport",
    "IllegitimateDeckError",
    "InvalidPairError",
    "NotDominatingPairError",
    "NotInScopeError",
    "ParamTable",
    "RecognitionReport",
    "ReconstructionOutcome",
    "Refusal",
    "SSet",
    "SweepResult",
    "are_isomorphic",
    "build_deck",
    "canonical_form",
    "certify_gamma_at_least_3",
    "check_identity",
    "class_membership",
    "complement_diam_category",
    "complete_graph",
    "cycle_graph",
    "dav_table",
    "dv_table",
    "enumerate_graphs",
    "graph6_decode",
    "graph6_encode",
    "identity_reports",
    "path_graph",
    "pav",
    "pav_vector",
    "petersen_graph",
    "pv",
    "pv_vector",
    "random_graph",
    "recognize_H",
    "reconstruct_C1",
    "reconstruct_C2",
    "run_suite",
    "s_set",
    "solve_dav_from_deck",
    "solve_dv_from_deck",
    "solve_pav_from_deck",
    "solve_pv_from_deck",
]

__version__ = "0.1.0"
