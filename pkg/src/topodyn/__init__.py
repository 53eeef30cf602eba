"""Exact deciders and exhaustive search for the dynamics of self-maps on
finite topological spaces."""
from .deciders import (
    LatticeViolation,
    PROPERTY_NAMES,
    PropertyProfile,
    classify,
    has_closed_invariant_subset,
    hypercyclic_points,
    is_hypercyclic,
    is_hypermixing,
    is_hypertransitive,
    is_mixing,
    is_strongly_topologically_transitive,
    is_strongly_transitive_finite,
    is_supermixing,
    is_topologically_transitive,
    jmix,
    jmix_of_set,
)
from .dynamics import (
    DynSystem,
    SelfMap,
    SetTrajectory,
    forward_union,
    image_set,
    is_continuous,
    is_injective,
    is_open_map,
    is_surjective,
    liminf_set,
    orbit,
    power_map,
    trajectory,
)
from .io import dumps_system, load_system, loads_system, parse_document, to_document
from .topology import (
    FiniteTopology,
    NotIntersectionClosed,
    NotUnionClosed,
    TopologyError,
    ZeroPoints,
    closure,
    interior,
    is_dense,
    is_hausdorff,
    isolated_points,
    minimal_neighborhood,
    validate_topology,
)

__version__ = "0.1.0"
