"""Outermost boundary contours of 4- and 8-connected clusters on the unit-square lattice."""

from .boundary import (
    BoundaryDecomposition,
    CycleTree,
    boundary_edges,
    cycle_tree,
    decompose_into_cycles,
    euler_circuit,
    outermost_boundary,
    outermost_cycle_for_cell,
    plus_outermost,
    verify_decomposition,
)
from .cornergraph import (
    Circuit,
    CornerGraph,
    Cycle,
    build_corner_graph,
    edge_position,
    interior_cells,
    validate_circuit,
    validate_cycle,
)
from .cyclemerge import MergeTrace, merge, merge_invariants_check
from .lattice import Cell, Component, Grid, component, neighbors, parse_grid_text
from .oracle import (
    ExhaustiveWindowOracle,
    ExteriorMap,
    enumerate_cycles,
    exterior_vacant,
    outermost_edges_by_definition,
    union_contour,
)

__all__ = [
    "BoundaryDecomposition",
    "Cell",
    "Circuit",
    "Component",
    "CornerGraph",
    "Cycle",
    "CycleTree",
    "ExhaustiveWindowOracle",
    "ExteriorMap",
    "Grid",
    "MergeTrace",
    "boundary_edges",
    "build_corner_graph",
    "component",
    "cycle_tree",
    "decompose_into_cycles",
    "edge_position",
    "enumerate_cycles",
    "euler_circuit",
    "exterior_vacant",
    "interior_cells",
    "merge",
    "merge_invariants_check",
    "neighbors",
    "outermost_boundary",
    "outermost_cycle_for_cell",
    "outermost_edges_by_definition",
    "parse_grid_text",
    "plus_outermost",
    "union_contour",
    "validate_circuit",
    "validate_cycle",
    "verify_decomposition",
]
