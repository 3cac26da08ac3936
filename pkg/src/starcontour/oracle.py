"""Independent brute-force validators.

Everything here is deliberately simple and exhaustive: plus-adjacency flood
fill to operationalize "exterior", backtracking enumeration of all simple
cycles of a corner graph, edge classification against every enumerated cycle,
and a rasterize-and-trace contour oracle for cycle merging.  These operations
may be exponential and are size-guarded; they are verification paths, not
production paths.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cornergraph import (
    CornerGraph,
    Corner,
    Cycle,
    GridEdge,
    build_corner_graph,
    cell_edges,
    cell_edges_with_neighbor,
    interior_cells,
)
from .errors import OracleSizeError, UnionContourRefusal
from .lattice import Cell, Component, Grid

MAX_ORACLE_CORNERS = 30


@dataclass(frozen=True)
class ExteriorMap:
    """Which vacant in-window cells can reach the outside by plus-steps."""

    grid: Grid
    reachable: frozenset[Cell]

    def is_exterior(self, c: Cell) -> bool:
        """True for cells outside the window (vacant by fiat) and reachable vacant cells."""
        return not self.grid.in_window(c) or c in self.reachable


def exterior_vacant(g: Grid) -> ExteriorMap:
    """Flood fill over vacant cells, seeded from just outside the window."""
    occ = g.occupied
    stack: list[Cell] = []
    for x in range(g.x_min, g.x_max + 1):
        for y in (g.y_min, g.y_max):
            if (x, y) not in occ:
                stack.append((x, y))
    for y in range(g.y_min + 1, g.y_max):
        for x in (g.x_min, g.x_max):
            if (x, y) not in occ:
                stack.append((x, y))
    reached = set(stack)
    while stack:
        x, y = stack.pop()
        for n in ((x, y - 1), (x - 1, y), (x + 1, y), (x, y + 1)):
            if n not in reached and n not in occ and g.in_window(n):
                reached.add(n)
                stack.append(n)
    return ExteriorMap(g, frozenset(reached))


def interior_cells_flood(c: Cycle) -> frozenset[Cell]:
    """Flood-fill interior oracle: complement of outside-reachability, blocked by cycle edges.

    Independent of the crossing-number implementation in cornergraph.
    """
    xs = [a for a, _ in c.corners]
    ys = [b for _, b in c.corners]
    x_lo, x_hi = min(xs) - 1, max(xs)
    y_lo, y_hi = min(ys) - 1, max(ys)
    blocked = c.edges
    stack = [
        (x, y)
        for x in range(x_lo, x_hi + 1)
        for y in (y_lo, y_hi)
    ] + [
        (x, y)
        for y in range(y_lo + 1, y_hi)
        for x in (x_lo, x_hi)
    ]
    reached = set(stack)
    while stack:
        cell = stack.pop()
        for e, n in cell_edges_with_neighbor(cell):
            if n in reached or e in blocked:
                continue
            if x_lo <= n[0] <= x_hi and y_lo <= n[1] <= y_hi:
                reached.add(n)
                stack.append(n)
    return frozenset(
        (x, y)
        for x in range(x_lo, x_hi + 1)
        for y in range(y_lo, y_hi + 1)
        if (x, y) not in reached
    )


def enumerate_cycles(gc: CornerGraph, cap: int = 10000) -> list[Cycle]:
    """All vertex-simple cycles of ``gc`` by rooted backtracking.

    Each cycle is found once: the root is its smallest corner and the two
    traversal directions are deduplicated by requiring second < last corner.
    """
    if len(gc.corners) > MAX_ORACLE_CORNERS:
        raise OracleSizeError(f"{len(gc.corners)} corners exceeds guard of {MAX_ORACLE_CORNERS}")
    adj: dict[Corner, list[Corner]] = {v: [] for v in gc.corners}
    for (u, v) in gc.edges:
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj.values():
        nbrs.sort()

    cycles: list[Cycle] = []
    for root in sorted(gc.corners):
        path = [root]
        on_path = {root}
        # stack of iterators mirrors the recursion
        iters = [iter(adj[root])]
        while iters:
            try:
                w = next(iters[-1])
            except StopIteration:
                iters.pop()
                on_path.discard(path.pop())
                continue
            if w == root and len(path) >= 3 and path[1] < path[-1]:
                if len(cycles) >= cap:
                    raise OracleSizeError(f"more than {cap} cycles")
                cycles.append(Cycle(tuple(path) if _ccw(path) else _flip(path)))
            elif w > root and w not in on_path:
                path.append(w)
                on_path.add(w)
                iters.append(iter(adj[w]))
    cycles.sort(key=lambda c: c.corners)
    return cycles


def _ccw(path: list[Corner]) -> bool:
    total = 0
    n = len(path)
    for i in range(n):
        x1, y1 = path[i]
        x2, y2 = path[(i + 1) % n]
        total += x1 * y2 - x2 * y1
    return total > 0


def _flip(path: list[Corner]) -> tuple[Corner, ...]:
    return (path[0],) + tuple(path[:0:-1])


def outermost_edges_by_definition(gc: CornerGraph, cap: int = 10000) -> frozenset[GridEdge]:
    """Edges of ``gc`` lying in the interior of no cycle of ``gc``.

    An edge is interior to a cycle exactly when both of its adjacent cells
    are interior cells, so one membership pattern per cycle suffices.
    """
    non_outermost: set[GridEdge] = set()
    for cyc in enumerate_cycles(gc, cap=cap):
        inner = interior_cells(cyc)
        for cell in inner:
            for e, other in cell_edges_with_neighbor(cell):
                if other in inner and e in gc.edges:
                    non_outermost.add(e)
    return frozenset(gc.edges - non_outermost)


def _plus_connected(cells: frozenset[Cell]) -> bool:
    if not cells:
        return False
    seed = next(iter(cells))
    seen = {seed}
    stack = [seed]
    while stack:
        x, y = stack.pop()
        for n in ((x, y - 1), (x - 1, y), (x + 1, y), (x, y + 1)):
            if n in cells and n not in seen:
                seen.add(n)
                stack.append(n)
    return len(seen) == len(cells)


def union_contour(c1: Cycle, c2: Cycle) -> Cycle:
    """Outer contour of the rasterized union of two cycle interiors.

    Refuses (raises UnionContourRefusal) when the union cell set is not
    plus-connected or does not trace to a single cycle; callers fall back to
    property checks in that case.
    """
    from .boundary import boundary_edges, decompose_into_cycles

    union = interior_cells(c1) | interior_cells(c2)
    if not _plus_connected(union):
        raise UnionContourRefusal("union of interiors is not plus-connected")
    comp = Component(union, "star", next(iter(union)))
    cycles = decompose_into_cycles(boundary_edges(comp), comp)
    if len(cycles) != 1:
        raise UnionContourRefusal(f"union contour traced to {len(cycles)} cycles")
    return cycles[0]


class ExhaustiveWindowOracle:
    """Definition-based outermost-edge classifier, batched over one window.

    Enumerates every simple cycle of the window's full corner grid once, then
    answers per-component queries by bitmask filtering: the cycles of a
    component's corner graph are exactly the enumerated cycles whose edges all
    belong to it.  Intended for exhaustive sweeps of small windows.
    """

    def __init__(self, width: int, height: int, cap: int = 200000):
        self.width = width
        self.height = height
        cells = [(x, y) for y in range(height) for x in range(width)]
        edge_ids: dict[GridEdge, int] = {}
        for cell in cells:
            for e in cell_edges(cell):
                if e not in edge_ids:
                    edge_ids[e] = len(edge_ids)
        if len(edge_ids) > 63:
            raise OracleSizeError(f"{len(edge_ids)} edges exceed the 63-bit mask limit")
        self.edge_ids = edge_ids
        self.edges_by_id = sorted(edge_ids, key=edge_ids.get)
        self.full_mask = (1 << len(edge_ids)) - 1
        self.cell_mask = {
            cell: sum(1 << edge_ids[e] for e in cell_edges(cell)) for cell in cells
        }
        full = Component(frozenset(cells), "star", cells[0])
        cyc_masks = []
        eint_masks = []
        for cyc in enumerate_cycles(build_corner_graph(full), cap=cap):
            mask = 0
            for e in cyc.edge_list:
                mask |= 1 << edge_ids[e]
            inner = interior_cells(cyc)
            eint = 0
            for cell in inner:
                for e, other in cell_edges_with_neighbor(cell):
                    if other in inner:
                        eint |= 1 << edge_ids[e]
            cyc_masks.append(mask)
            eint_masks.append(eint)
        self.n_cycles = len(cyc_masks)
        self._cyc = np.array(cyc_masks, dtype=np.uint64)
        self._eint = np.array(eint_masks, dtype=np.uint64)

    def edge_mask(self, cells) -> int:
        m = 0
        for c in cells:
            m |= self.cell_mask[c]
        return m

    def outermost_mask(self, cells) -> int:
        """Bitmask of outermost edges for the corner graph of ``cells``."""
        m = self.edge_mask(cells)
        inv = np.uint64(self.full_mask ^ m)
        sel = (self._cyc & inv) == 0
        if not sel.any():
            return m
        non = int(np.bitwise_or.reduce(self._eint[sel]))
        return m & ~non

    def edges_from_mask(self, mask: int) -> frozenset[GridEdge]:
        out = set()
        i = 0
        while mask:
            if mask & 1:
                out.add(self.edges_by_id[i])
            mask >>= 1
            i += 1
        return frozenset(out)

    def outermost_edges(self, cells) -> frozenset[GridEdge]:
        return self.edges_from_mask(self.outermost_mask(cells))
