"""Corner graph of a component, cycles/circuits over it, and interior geometry.

Corner ``(a, b)`` names the geometric point ``(a - 1/2, b - 1/2)``, so cell
``(x, y)`` has corners ``(x, y)``, ``(x+1, y)``, ``(x, y+1)``, ``(x+1, y+1)``.
Cell centres sit at integers and edges at half-integers, so every interior
test below reduces to exact integer arithmetic.

The bridge between geometry and occupancy is the edge/cell separation rule:

* horizontal edge ``{(a,b),(a+1,b)}`` separates cells ``(a, b-1)`` and ``(a, b)``
* vertical   edge ``{(a,b),(a,b+1)}`` separates cells ``(a-1, b)`` and ``(a, b)``
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal, Optional, Sequence

from .errors import CycleValidationError, DomainError
from .lattice import Cell, Component

Corner = tuple[int, int]
GridEdge = tuple[Corner, Corner]  # canonical: lexicographically smaller endpoint first


def make_edge(u: Corner, v: Corner) -> GridEdge:
    return (u, v) if u <= v else (v, u)


def cell_corners(c: Cell) -> tuple[Corner, Corner, Corner, Corner]:
    x, y = c
    return ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))


def cell_edges(c: Cell) -> tuple[GridEdge, GridEdge, GridEdge, GridEdge]:
    """Bottom, top, left, right edge of cell ``c`` in canonical form."""
    x, y = c
    return (
        ((x, y), (x + 1, y)),
        ((x, y + 1), (x + 1, y + 1)),
        ((x, y), (x, y + 1)),
        ((x + 1, y), (x + 1, y + 1)),
    )


def cell_edges_with_neighbor(c: Cell) -> tuple[tuple[GridEdge, Cell], ...]:
    """Each edge of ``c`` paired with the cell on its other side."""
    x, y = c
    return (
        (((x, y), (x + 1, y)), (x, y - 1)),
        (((x, y + 1), (x + 1, y + 1)), (x, y + 1)),
        (((x, y), (x, y + 1)), (x - 1, y)),
        (((x + 1, y), (x + 1, y + 1)), (x + 1, y)),
    )


def edge_cells(e: GridEdge) -> tuple[Cell, Cell]:
    """The two cells separated by ``e`` (separation rule in the module docstring)."""
    (a, b), (a2, b2) = e
    if b == b2:  # horizontal
        return ((a, b - 1), (a, b))
    return ((a - 1, b), (a, b))


def corner_cells(v: Corner) -> tuple[Cell, Cell, Cell, Cell]:
    """The four cells meeting at corner ``v``: SW, SE, NW, NE."""
    a, b = v
    return ((a - 1, b - 1), (a, b - 1), (a - 1, b), (a, b))


@dataclass(frozen=True)
class CornerGraph:
    """Corners and unit edges of a component's squares (deduplicated)."""

    corners: frozenset[Corner]
    edges: frozenset[GridEdge]
    source: Optional[Component] = None


def build_corner_graph(comp: Optional[Component]) -> CornerGraph:
    """Union of the 4 corners and 4 edges of every component cell."""
    if comp is None:
        return CornerGraph(frozenset(), frozenset(), None)
    corners: set[Corner] = set()
    edges: set[GridEdge] = set()
    for cell in comp.cells:
        corners.update(cell_corners(cell))
        edges.update(cell_edges(cell))
    return CornerGraph(frozenset(corners), frozenset(edges), comp)


def signed_area2(corners: Sequence[Corner]) -> int:
    """Twice the shoelace area of the closed corner sequence (positive = counterclockwise)."""
    total = 0
    n = len(corners)
    for i in range(n):
        x1, y1 = corners[i]
        x2, y2 = corners[(i + 1) % n]
        total += x1 * y2 - x2 * y1
    return total


def _canonical_cycle_order(corners: list[Corner]) -> tuple[Corner, ...]:
    if signed_area2(corners) < 0:
        corners = corners[::-1]
    i = corners.index(min(corners))
    return tuple(corners[i:] + corners[:i])


@dataclass(frozen=True)
class Cycle:
    """A vertex-simple closed corner sequence, stored in canonical form.

    Canonical form starts at the lexicographically smallest corner and runs
    counterclockwise; equality of cycles is equality of canonical forms.
    """

    corners: tuple[Corner, ...]

    @cached_property
    def edge_list(self) -> tuple[GridEdge, ...]:
        cs = self.corners
        n = len(cs)
        return tuple(make_edge(cs[i], cs[(i + 1) % n]) for i in range(n))

    @cached_property
    def edges(self) -> frozenset[GridEdge]:
        return frozenset(self.edge_list)

    @cached_property
    def corner_set(self) -> frozenset[Corner]:
        return frozenset(self.corners)

    @property
    def area(self) -> int:
        return signed_area2(self.corners) // 2

    def __len__(self) -> int:
        return len(self.corners)


@dataclass(frozen=True)
class Circuit:
    """A closed corner sequence that repeats no edge; corners may repeat."""

    corners: tuple[Corner, ...]

    @cached_property
    def edge_list(self) -> tuple[GridEdge, ...]:
        cs = self.corners
        n = len(cs)
        return tuple(make_edge(cs[i], cs[(i + 1) % n]) for i in range(n))

    @cached_property
    def edges(self) -> frozenset[GridEdge]:
        return frozenset(self.edge_list)

    def __len__(self) -> int:
        return len(self.corners)


def _normalize_closed(seq: Iterable[Sequence[int]], what: str) -> list[Corner]:
    corners = [(int(c[0]), int(c[1])) for c in seq]
    if len(corners) >= 2 and corners[0] == corners[-1]:
        corners.pop()
    if len(corners) < 4:
        raise CycleValidationError(f"{what} needs at least 4 corners, got {len(corners)}")
    return corners


def _check_steps(corners: list[Corner], what: str) -> None:
    n = len(corners)
    for i in range(n):
        (x1, y1), (x2, y2) = corners[i], corners[(i + 1) % n]
        if abs(x1 - x2) + abs(y1 - y2) != 1:
            raise CycleValidationError(f"{what}: non-adjacent step {corners[i]} -> {corners[(i + 1) % n]}")


def validate_cycle(seq: Iterable[Sequence[int]]) -> Cycle:
    """Check and canonicalize a closed corner sequence as a vertex-simple cycle."""
    corners = _normalize_closed(seq, "cycle")
    seen: set[Corner] = set()
    for c in corners:
        if c in seen:
            raise CycleValidationError(f"cycle: repeated vertex {c}")
        seen.add(c)
    _check_steps(corners, "cycle")
    return Cycle(_canonical_cycle_order(corners))


def validate_circuit(seq: Iterable[Sequence[int]]) -> Circuit:
    """Check a closed corner sequence as an edge-simple circuit (vertices may repeat)."""
    corners = _normalize_closed(seq, "circuit")
    _check_steps(corners, "circuit")
    n = len(corners)
    seen: set[GridEdge] = set()
    for i in range(n):
        e = make_edge(corners[i], corners[(i + 1) % n])
        if e in seen:
            raise CycleValidationError(f"circuit: repeated edge {e}")
        seen.add(e)
    return Circuit(tuple(corners))


def interior_cells(c: Cycle) -> frozenset[Cell]:
    """Cells whose centre lies in the bounded region enclosed by ``c``.

    Crossing-number sweep: cell (x, y) is interior iff the cycle has an odd
    number of vertical edges {(a, y), (a, y+1)} with a >= x+1.
    """
    by_row: dict[int, list[int]] = defaultdict(list)
    for (u, v) in c.edge_list:
        if u[0] == v[0]:  # vertical edge; spans row b = min(y)
            by_row[min(u[1], v[1])].append(u[0])
    cells: set[Cell] = set()
    for y, xs in by_row.items():
        xs.sort()
        if len(xs) % 2 != 0:
            raise DomainError("open curve: odd number of vertical crossings in a row")
        for i in range(0, len(xs), 2):
            for x in range(xs[i], xs[i + 1]):
                cells.add((x, y))
    return frozenset(cells)


EdgePosition = Literal["on", "interior", "exterior"]


def edge_position(e: GridEdge, c: Cycle, interior: Optional[frozenset[Cell]] = None) -> EdgePosition:
    """Classify ``e`` against ``c``: on the cycle, inside it, or outside it.

    When ``e`` is not on ``c`` its two adjacent cells lie on the same side,
    so one membership test decides.  Pass a precomputed ``interior`` set to
    avoid recomputation in loops.
    """
    if e in c.edges:
        return "on"
    if interior is None:
        interior = interior_cells(c)
    return "interior" if edge_cells(e)[0] in interior else "exterior"
