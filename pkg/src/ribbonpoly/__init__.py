"""Exact Bollobás–Riordan polynomials of ribbon graphs and flower rosettes."""

from .brpoly import DEFAULT_CAP, reduce, state_sum, tutte_specialize
from .compositions import (
    CapExceeded,
    count_by_enumeration,
    count_odd,
    count_residue,
    enumerate_compositions,
    indicator,
)
from .flowers import (
    FaceClass,
    FlowerSpec,
    PeriodicSpec,
    TerminalProfile,
    build_flower,
    build_terminal,
    closed_form,
    closed_form_twisted,
    closed_form_untwisted,
    face_class,
    face_class_closed,
    face_count,
    parse_spec,
    periodic_face_class,
    placement_count,
    recurrence_family,
    terminal_form_value,
)
from .poly import BasisError, Poly3, poly_add, poly_mul, poly_scale
from .ribbon import (
    End,
    EdgeKind,
    GraphParseError,
    RibbonGraph,
    StructuralError,
    SubgraphStats,
    boundary_components,
    classify_edge,
    contract_edge,
    delete_edge,
    disjoint_union,
    format_graph,
    parse_graph,
    random_ribbon_graph,
    stats,
    validate,
    vertex_flip,
    vertex_join,
)

__version__ = "0.1.0"
