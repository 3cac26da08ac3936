"""Unit-square lattice: occupancy grids, adjacency relations, connected components.

Cells are integer pairs ``(x, y)`` naming the closed unit square centred on the
point ``(x, y)``.  Two cells are *star*-adjacent when their squares share at
least a corner (8-connectivity) and *plus*-adjacent when they share an edge
(4-connectivity).  All orderings in this package are "(y, x)" lexicographic so
results are byte-reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Literal, Optional

from .errors import DomainError, GridParseError

Cell = tuple[int, int]
AdjacencyKind = Literal["star", "plus"]

# Offsets (dx, dy) listed so that neighbor lists come out sorted by (y, x).
PLUS_OFFSETS: tuple[tuple[int, int], ...] = ((0, -1), (-1, 0), (1, 0), (0, 1))
STAR_OFFSETS: tuple[tuple[int, int], ...] = (
    (-1, -1), (0, -1), (1, -1),
    (-1, 0), (1, 0),
    (-1, 1), (0, 1), (1, 1),
)


def cell_key(c: Cell) -> tuple[int, int]:
    """Sort key realizing the total order on cells: lexicographic by (y, x)."""
    return (c[1], c[0])


def neighbors(c: Cell, kind: AdjacencyKind) -> list[Cell]:
    """The 4 plus- or 8 star-adjacent cells of ``c``, sorted by (y, x)."""
    x, y = c
    offsets = STAR_OFFSETS if kind == "star" else PLUS_OFFSETS
    return [(x + dx, y + dy) for dx, dy in offsets]


@dataclass(frozen=True)
class Grid:
    """A finite occupancy window; every cell outside it is vacant by fiat."""

    x_min: int
    x_max: int
    y_min: int
    y_max: int
    occupied: frozenset[Cell]

    def __post_init__(self):
        if self.x_min > self.x_max or self.y_min > self.y_max:
            raise DomainError(f"empty window [{self.x_min}..{self.x_max}]x[{self.y_min}..{self.y_max}]")
        for c in self.occupied:
            if not self.in_window(c):
                raise DomainError(f"occupied cell {c} outside window")

    @classmethod
    def from_cells(cls, cells, window: Optional[tuple[int, int, int, int]] = None, pad: int = 0) -> "Grid":
        """Grid over ``window`` (default: bounding box of ``cells``, padded by ``pad``)."""
        cells = frozenset(cells)
        if window is None:
            if not cells:
                raise DomainError("cannot infer a window from an empty cell set")
            xs = [x for x, _ in cells]
            ys = [y for _, y in cells]
            window = (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
        x_min, y_min, x_max, y_max = window
        return cls(x_min, x_max, y_min, y_max, cells)

    def in_window(self, c: Cell) -> bool:
        return self.x_min <= c[0] <= self.x_max and self.y_min <= c[1] <= self.y_max

    def is_occupied(self, c: Cell) -> bool:
        return c in self.occupied

    def cells(self) -> Iterator[Cell]:
        """All in-window cells in (y, x) order."""
        for y in range(self.y_min, self.y_max + 1):
            for x in range(self.x_min, self.x_max + 1):
                yield (x, y)

    @property
    def width(self) -> int:
        return self.x_max - self.x_min + 1

    @property
    def height(self) -> int:
        return self.y_max - self.y_min + 1


@dataclass(frozen=True)
class Component:
    """A maximal kind-connected set of occupied cells containing ``seed``."""

    cells: frozenset[Cell]
    kind: AdjacencyKind
    seed: Cell

    def __post_init__(self):
        if not self.cells:
            raise DomainError("a component must be nonempty; use None for the empty case")
        if self.seed not in self.cells:
            raise DomainError(f"seed {self.seed} not among component cells")

    def min_cell(self) -> Cell:
        return min(self.cells, key=cell_key)


def component(g: Grid, seed: Cell, kind: AdjacencyKind) -> Optional[Component]:
    """The maximal ``kind``-connected occupied component of ``seed``, or None if the seed is vacant.

    Breadth-first search in the deterministic (y, x) neighbor order.
    """
    if not g.in_window(seed):
        raise DomainError(f"seed {seed} outside window")
    if not g.is_occupied(seed):
        return None
    offsets = STAR_OFFSETS if kind == "star" else PLUS_OFFSETS
    occ = g.occupied
    seen = {seed}
    queue = deque((seed,))
    while queue:
        x, y = queue.popleft()
        for dx, dy in offsets:
            n = (x + dx, y + dy)
            if n not in seen and n in occ:
                seen.add(n)
                queue.append(n)
    return Component(frozenset(seen), kind, seed)


# --- text grid format ------------------------------------------------------
#
# A grid file is a header line "origin: X Y" followed by rows of '#'
# (occupied) and '.' (vacant).  The top text row is the highest y; the
# bottom-left grid cell is (0, 0).  The header names the seed cell.


def parse_grid_text(text: str) -> tuple[Grid, Cell]:
    lines = text.splitlines()
    if not lines:
        raise GridParseError("empty grid file", 1)
    header = lines[0].strip()
    parts = header.split()
    if len(parts) != 3 or parts[0] != "origin:":
        raise GridParseError("expected header 'origin: X Y'", 1)
    try:
        seed = (int(parts[1]), int(parts[2]))
    except ValueError:
        raise GridParseError("origin coordinates must be integers", 1) from None
    rows = [ln for ln in lines[1:] if ln.strip() != ""]
    if not rows:
        raise GridParseError("no grid rows after header", 2)
    width = len(rows[0])
    height = len(rows)
    occupied = set()
    for i, row in enumerate(rows):
        if len(row) != width:
            raise GridParseError(f"row has {len(row)} columns, expected {width}", i + 2, len(row) + 1)
        y = height - 1 - i
        for j, ch in enumerate(row):
            if ch == "#":
                occupied.add((j, y))
            elif ch != ".":
                raise GridParseError(f"unexpected character {ch!r}", i + 2, j + 1)
    return Grid(0, width - 1, 0, height - 1, frozenset(occupied)), seed


def format_grid_text(g: Grid, seed: Cell) -> str:
    """Inverse of :func:`parse_grid_text`; the grid is shifted to a zero-based frame."""
    dx, dy = g.x_min, g.y_min
    lines = [f"origin: {seed[0] - dx} {seed[1] - dy}"]
    for y in range(g.y_max, g.y_min - 1, -1):
        lines.append("".join("#" if (x, y) in g.occupied else "." for x in range(g.x_min, g.x_max + 1)))
    return "\n".join(lines) + "\n"
