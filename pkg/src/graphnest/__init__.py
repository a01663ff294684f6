"""Finite-dimensional nest representations of directed-graph path algebras.

The package builds the explicit representation families attached to cycles,
paths, and loop-avoiding walks of a finite directed multigraph, decides the
structural graph conditions under which each family exists or separates, and
recovers Fourier coefficients of finitely supported elements exactly by
sampling on roots of unity.
"""

from .classify import (
    ClassificationReport,
    FaithfulNestConditions,
    NNestResult,
    check_faithful_nest_conditions,
    check_n_nest_case,
    classify,
    is_strongly_transitive,
    ut_separating_condition,
)
from .elements import (
    FormalElement,
    TruncatedFockBasis,
    cesaro_mean,
    degree,
    element_from_json,
    element_to_json,
    fourier_coefficient,
    multiply,
    truncated_fock_basis,
    truncated_left_regular,
)
from .errors import (
    EmptyInputError,
    GraphNestError,
    GraphParseError,
    LimitError,
    PathError,
    PreconditionError,
)
from .graphs import (
    Component,
    ComponentClass,
    Condensation,
    DirectedGraph,
    Edge,
    Path,
    PathDecomposition,
    all_cycles,
    complete_to_cycle,
    compose,
    condensation,
    decompose_path,
    enumerate_cycles_through,
    enumerate_paths,
    format_graph,
    graph_from_json,
    graph_to_json,
    is_transitive_in_components,
    parse_graph,
    power,
    primitive_root,
    reaches,
)
from .linalg import (
    DEFAULT_TOLERANCES,
    ToleranceConfig,
    is_orthogonal_projection,
    matrices_equal,
    matrix_from_json,
    matrix_to_json,
    operator_norm,
    row_operator_norm,
    span_closure_dim,
)
from .recovery import (
    QuadratureGrid,
    SeparationWitness,
    is_in_radical,
    radical_edge_generators,
    recover_irreducible,
    recover_nest,
    recover_upper,
    separate,
)
from .reps import (
    FiniteRepresentation,
    NestStructure,
    RelationReport,
    check_relations,
    designated_loops,
    evaluate,
    is_coisometric,
    n_nest_truncation,
    nest_plan,
    phi_cycle,
    psi_upper,
    purity_defect,
    rep_from_json,
    rep_to_json,
    reverse_basis,
    rho_nest,
    upper_plan,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "Component",
    "ComponentClass",
    "Condensation",
    "DEFAULT_TOLERANCES",
    "DirectedGraph",
    "Edge",
    "EmptyInputError",
    "FaithfulNestConditions",
    "FiniteRepresentation",
    "FormalElement",
    "GraphNestError",
    "GraphParseError",
    "LimitError",
    "NNestResult",
    "NestStructure",
    "Path",
    "PathDecomposition",
    "PathError",
    "PreconditionError",
    "QuadratureGrid",
    "RelationReport",
    "SeparationWitness",
    "ToleranceConfig",
    "TruncatedFockBasis",
    "all_cycles",
    "cesaro_mean",
    "check_faithful_nest_conditions",
    "check_n_nest_case",
    "check_relations",
    "classify",
    "complete_to_cycle",
    "compose",
    "condensation",
    "decompose_path",
    "degree",
    "designated_loops",
    "element_from_json",
    "element_to_json",
    "enumerate_cycles_through",
    "enumerate_paths",
    "evaluate",
    "format_graph",
    "fourier_coefficient",
    "graph_from_json",
    "graph_to_json",
    "is_coisometric",
    "is_in_radical",
    "is_orthogonal_projection",
    "is_strongly_transitive",
    "is_transitive_in_components",
    "matrices_equal",
    "matrix_from_json",
    "matrix_to_json",
    "multiply",
    "n_nest_truncation",
    "nest_plan",
    "operator_norm",
    "parse_graph",
    "phi_cycle",
    "power",
    "primitive_root",
    "psi_upper",
    "purity_defect",
    "radical_edge_generators",
    "reaches",
    "recover_irreducible",
    "recover_nest",
    "recover_upper",
    "rep_from_json",
    "rep_to_json",
    "reverse_basis",
    "rho_nest",
    "row_operator_norm",
    "separate",
    "span_closure_dim",
    "truncated_fock_basis",
    "truncated_left_regular",
    "upper_plan",
    "ut_separating_condition",
]
