"""Outermost boundary of a component: cycles, cycle tree, covering circuit.

The outermost boundary edge set is computed directly: an edge qualifies when
one side is a component cell and the other side is vacant and plus-reachable
from outside the window.  The edge set decomposes into vertex-simple cycles by
a forced pairing at every corner; at a pinch corner (degree 4) the two
occupied cells are diagonal and each edge pairs with the other edge bounding
the same occupied cell, which keeps traced loops from crossing.  The cycles
meet pairwise in at most one corner, their meeting graph is a tree, and
peeling tree leaves splices the cycles into a single closed circuit covering
every boundary edge exactly once.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Optional

from .cornergraph import (
    Circuit,
    Corner,
    Cycle,
    GridEdge,
    cell_edges_with_neighbor,
    corner_cells,
    edge_cells,
    interior_cells,
    validate_circuit,
    validate_cycle,
)
from .errors import DomainError, InvariantViolation
from .lattice import Cell, Component, Grid, cell_key
from .oracle import exterior_vacant


def boundary_edges(comp: Component) -> frozenset[GridEdge]:
    """Edges with a component cell on one side and exterior-reachable vacancy on the other.

    Reachability is judged against the component alone (window = its bounding
    box), so surrounding unrelated occupancy cannot mask a boundary.
    """
    g = Grid.from_cells(comp.cells)
    ext = exterior_vacant(g)
    cells = comp.cells
    out: set[GridEdge] = set()
    for cell in cells:
        for e, other in cell_edges_with_neighbor(cell):
            if other not in cells and ext.is_exterior(other):
                out.add(e)
    return frozenset(out)


def decompose_into_cycles(edges: frozenset[GridEdge], comp: Component) -> list[Cycle]:
    """Partition an outermost edge set into its cycles via forced corner pairing."""
    if not edges:
        return []
    incident: dict[Corner, list[GridEdge]] = defaultdict(list)
    for e in edges:
        incident[e[0]].append(e)
        incident[e[1]].append(e)

    partner: dict[tuple[Corner, GridEdge], GridEdge] = {}
    cells = comp.cells
    for corner, inc in incident.items():
        if len(inc) == 2:
            a, b = inc
            partner[(corner, a)] = b
            partner[(corner, b)] = a
        elif len(inc) == 4:
            occ = {c for c in corner_cells(corner) if c in cells}
            sw, se, nw, ne = corner_cells(corner)
            if occ != {sw, ne} and occ != {se, nw}:
                raise InvariantViolation(f"pinch corner {corner}: occupied cells {occ} not diagonal")
            for cell in occ:
                pair = [e for e in inc if cell in edge_cells(e)]
                if len(pair) != 2:
                    raise InvariantViolation(f"pinch corner {corner}: bad pairing")
                a, b = pair
                partner[(corner, a)] = b
                partner[(corner, b)] = a
        else:
            raise InvariantViolation(f"corner {corner} has degree {len(inc)} in the boundary")

    cycles: list[Cycle] = []
    unused = set(edges)
    for start in sorted(edges):
        if start not in unused:
            continue
        seq: list[Corner] = []
        corner, e = start[0], start
        while True:
            seq.append(corner)
            unused.discard(e)
            corner = e[1] if e[0] == corner else e[0]
            e = partner[(corner, e)]
            if corner == start[0] and e == start:
                break
        cycles.append(validate_cycle(seq))
    cycles.sort(key=lambda c: c.corners)
    return cycles


@dataclass(frozen=True)
class CycleTree:
    """Cycle-meeting graph: one node per cycle, an edge where two cycles share a corner."""

    n_nodes: int
    edges: tuple[tuple[int, int, Corner], ...]

    def adjacency(self) -> dict[int, dict[int, Corner]]:
        adj: dict[int, dict[int, Corner]] = {i: {} for i in range(self.n_nodes)}
        for i, j, v in self.edges:
            adj[i][j] = v
            adj[j][i] = v
        return adj


def cycle_tree(cycles: list[Cycle]) -> CycleTree:
    """Build the meeting graph and assert it is a tree with <= 2 cycles per corner."""
    by_corner: dict[Corner, list[int]] = defaultdict(list)
    for i, c in enumerate(cycles):
        for v in c.corners:
            by_corner[v].append(i)
    shared: dict[tuple[int, int], Corner] = {}
    for v, idxs in by_corner.items():
        if len(idxs) > 2:
            raise InvariantViolation(f"{len(idxs)} cycles meet at corner {v}")
        if len(idxs) == 2:
            key = (min(idxs), max(idxs))
            if key in shared:
                raise InvariantViolation(f"cycles {key} share more than one corner")
            shared[key] = v
    edges = tuple(sorted((i, j, v) for (i, j), v in shared.items()))
    tree = CycleTree(len(cycles), edges)
    if len(cycles) > 0:
        if len(edges) != len(cycles) - 1 or not _connected(tree):
            raise InvariantViolation("cycle meeting graph is not a tree")
    return tree


def _connected(tree: CycleTree) -> bool:
    if tree.n_nodes == 0:
        return True
    adj = tree.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == tree.n_nodes


def euler_circuit(
    tree: CycleTree,
    cycles: list[Cycle],
    interiors: Optional[list[frozenset[Cell]]] = None,
) -> Circuit:
    """Splice all cycles into one closed circuit by peeling tree leaves.

    At each step the removed leaf is the one whose cycle encloses the
    smallest cell in (y, x) order; the remaining circuit is inserted into the
    leaf's cycle at their shared corner.  The result traverses every cycle
    edge exactly once.
    """
    if tree.n_nodes == 0:
        return Circuit(())
    if interiors is None:
        interiors = [interior_cells(c) for c in cycles]
    min_key = [min(cell_key(c) for c in inner) for inner in interiors]
    adj = tree.adjacency()
    remaining = set(range(tree.n_nodes))
    peel: list[tuple[int, Corner]] = []
    while len(remaining) > 1:
        leaves = [i for i in remaining if len(adj[i]) == 1]
        q = min(leaves, key=lambda i: min_key[i])
        ((parent, z),) = adj[q].items()
        del adj[parent][q]
        del adj[q][parent]
        remaining.remove(q)
        peel.append((q, z))

    walk = list(cycles[remaining.pop()].corners)
    for q, z in reversed(peel):
        frame = list(cycles[q].corners)
        t = frame.index(z)
        i = walk.index(z)
        rotated = walk[i:] + walk[:i]
        walk = frame[: t + 1] + rotated[1:] + [z] + frame[t + 1 :]
    return validate_circuit(walk)


@dataclass(frozen=True)
class BoundaryDecomposition:
    """Outermost boundary cycles plus the derived tree, circuit, and cell assignment."""

    cycles: tuple[Cycle, ...]
    interiors: tuple[frozenset[Cell], ...]
    cell_to_cycle: dict
    tree: CycleTree
    circuit: Circuit

    @property
    def edge_union(self) -> frozenset[GridEdge]:
        out: set[GridEdge] = set()
        for c in self.cycles:
            out |= c.edges
        return frozenset(out)


EMPTY_DECOMPOSITION = BoundaryDecomposition((), (), {}, CycleTree(0, ()), Circuit(()))


def outermost_boundary(comp: Optional[Component]) -> BoundaryDecomposition:
    """Full outermost-boundary decomposition of a component (empty input allowed)."""
    if comp is None:
        return EMPTY_DECOMPOSITION
    edges = boundary_edges(comp)
    cycles = decompose_into_cycles(edges, comp)
    interiors = [interior_cells(c) for c in cycles]

    assignment: dict[Cell, int] = {}
    for i, inner in enumerate(interiors):
        for cell in inner:
            if cell in assignment:
                raise InvariantViolation(f"cell {cell} interior to cycles {assignment[cell]} and {i}")
            assignment[cell] = i
    cell_to_cycle: dict[Cell, int] = {}
    for cell in comp.cells:
        if cell not in assignment:
            raise InvariantViolation(f"component cell {cell} interior to no boundary cycle")
        cell_to_cycle[cell] = assignment[cell]

    tree = cycle_tree(cycles)
    circuit = euler_circuit(tree, cycles, interiors)
    return BoundaryDecomposition(tuple(cycles), tuple(interiors), cell_to_cycle, tree, circuit)


def outermost_cycle_for_cell(comp: Component, k: Cell) -> Cycle:
    """The unique boundary cycle whose interior contains component cell ``k``."""
    if k not in comp.cells:
        raise DomainError(f"cell {k} not in the component")
    d = outermost_boundary(comp)
    return d.cycles[d.cell_to_cycle[k]]


def plus_outermost(comp: Component) -> Cycle:
    """The single outer cycle of a plus-connected component."""
    if comp.kind != "plus":
        raise DomainError("plus_outermost requires a plus component")
    d = outermost_boundary(comp)
    if len(d.cycles) != 1:
        raise InvariantViolation(f"plus component decomposed into {len(d.cycles)} cycles")
    return d.cycles[0]


# --- structural verification -------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def verify_decomposition(grid: Grid, comp: Optional[Component], d: BoundaryDecomposition) -> list[CheckResult]:
    """Re-check every structural property of a decomposition against the grid.

    Used by the CLI ``check`` command and the acceptance suite; each returned
    entry is independent so a single failure pinpoints the broken property.
    """
    results: list[CheckResult] = []
    if comp is None:
        results.append(CheckResult("empty_component_empty_boundary", len(d.cycles) == 0))
        return results

    results.append(CheckResult("cycle_union_connected", _edge_union_connected(d)))

    pairwise_ok, pairwise_msg = _pairwise_cycles_ok(d)
    results.append(CheckResult("pairwise_disjoint_interiors_one_shared_corner", pairwise_ok, pairwise_msg))

    covered = all(
        sum(1 for inner in d.interiors if cell in inner) == 1 for cell in comp.cells
    )
    results.append(CheckResult("each_component_cell_in_exactly_one_interior", covered))

    results.append(CheckResult("cycle_edges_are_boundary_edges", *_edge_sides_ok(grid, comp, d)))

    results.append(
        CheckResult(
            "boundary_edges_equal_cycle_union",
            boundary_edges(comp) == d.edge_union,
        )
    )

    n = len(d.cycles)
    tree_ok = d.tree.n_nodes == n and len(d.tree.edges) == max(n - 1, 0) and _connected(d.tree)
    results.append(CheckResult("meeting_graph_is_tree", tree_ok))

    corner_count: dict[Corner, int] = defaultdict(int)
    for c in d.cycles:
        for v in c.corners:
            corner_count[v] += 1
    results.append(
        CheckResult("at_most_two_cycles_per_corner", all(k <= 2 for k in corner_count.values()))
    )

    circ_edges = d.circuit.edge_list
    circuit_ok = len(circ_edges) == len(set(circ_edges)) == sum(len(c) for c in d.cycles) and set(
        circ_edges
    ) == set(d.edge_union)
    results.append(CheckResult("circuit_covers_each_edge_once", circuit_ok))
    return results


def _edge_union_connected(d: BoundaryDecomposition) -> bool:
    adj: dict[Corner, list[Corner]] = defaultdict(list)
    for e in d.edge_union:
        adj[e[0]].append(e[1])
        adj[e[1]].append(e[0])
    if not adj:
        return len(d.cycles) == 0
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def _pairwise_cycles_ok(d: BoundaryDecomposition) -> tuple[bool, str]:
    for i in range(len(d.cycles)):
        for j in range(i + 1, len(d.cycles)):
            if len(d.cycles[i].corner_set & d.cycles[j].corner_set) > 1:
                return False, f"cycles {i},{j} share more than one corner"
            if d.interiors[i] & d.interiors[j]:
                return False, f"cycles {i},{j} have overlapping interiors"
    return True, ""


def _edge_sides_ok(grid: Grid, comp: Component, d: BoundaryDecomposition) -> tuple[bool, str]:
    for i, c in enumerate(d.cycles):
        inner = d.interiors[i]
        for e in c.edge_list:
            a, b = edge_cells(e)
            inside, outside = (a, b) if a in inner else (b, a)
            if inside not in inner or outside in inner:
                return False, f"edge {e} of cycle {i} lacks an interior/exterior split"
            if inside not in comp.cells:
                return False, f"edge {e} of cycle {i}: interior side not a component cell"
            if grid.is_occupied(outside):
                return False, f"edge {e} of cycle {i}: exterior side occupied"
    return True, ""


# --- JSON shape --------------------------------------------------------------


def decomposition_to_json(d: BoundaryDecomposition) -> dict:
    return {
        "cycles": [{"corners": [list(v) for v in c.corners]} for c in d.cycles],
        "tree": {"edges": [[i, j, list(v)] for i, j, v in d.tree.edges]},
        "circuit": {"corners": [list(v) for v in d.circuit.corners], "circuit": True},
        "cell_to_cycle": sorted(
            ([x, y, i] for (x, y), i in d.cell_to_cycle.items()),
            key=lambda row: (row[1], row[0]),
        ),
    }


def decomposition_from_json(obj: dict) -> BoundaryDecomposition:
    cycles = tuple(validate_cycle(c["corners"]) for c in obj["cycles"])
    interiors = tuple(interior_cells(c) for c in cycles)
    tree = CycleTree(
        len(cycles), tuple(sorted((i, j, (v[0], v[1])) for i, j, v in obj["tree"]["edges"]))
    )
    circ_corners = obj["circuit"]["corners"]
    circuit = validate_circuit(circ_corners) if circ_corners else Circuit(())
    cell_to_cycle = {(x, y): i for x, y, i in obj["cell_to_cycle"]}
    return BoundaryDecomposition(cycles, interiors, cell_to_cycle, tree, circuit)
