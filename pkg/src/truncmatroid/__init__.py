"""Cycle matroids, truncation, and graphs sharing a truncated cycle matroid."""

__version__ = "0.1.0"

from .cycle_matroid import (
    TruncatedCircuitDecomposition,
    cycle_matroid,
    decompose_truncated_circuits,
    gf2_combination,
    in_gf2_span,
    truncated_cycle_matroid,
)
from .errors import ConfigurationError, DomainError, Graph6Error, PreconditionError, TheoremViolation
from .generate import enumerate_graphs
from .graph import (
    LabeledGraph,
    connectivity_at_least,
    cycles,
    induced_subgraph,
    is_even,
    isomorphic,
    quasi_hamiltonian_cycles,
    small_cycles,
    spanning_forests,
    strongly_isomorphic,
)
from .graph6 import parse_graph6, write_graph6
from .matroid import (
    Matroid,
    circuits,
    equals,
    hamiltonian_circuits,
    is_uniform,
    isomorphism,
    truncate,
    truncation_circuits,
    uniform,
    verify_axioms,
)
from .pairs import (
    check_condition_K,
    classify_pair,
    edge_exchange,
    find_witness,
    identify_components,
    rim_structure,
    verify_structural_claims,
    whitney_twist,
)
