"""Shared fixtures and generators for the test suite."""

from __future__ import annotations

import random

import hypothesis.strategies as st

from starcontour.boundary import outermost_boundary
from starcontour.cornergraph import Cycle
from starcontour.lattice import Cell, Component, Grid, component


def grid_from_art(rows: list[str], pad: int = 0) -> Grid:
    """Build a grid from '#'/'.' art; top row is the highest y, bottom-left cell is (0, 0)."""
    h = len(rows)
    w = len(rows[0])
    cells = {
        (x, h - 1 - i)
        for i, row in enumerate(rows)
        for x, ch in enumerate(row)
        if ch == "#"
    }
    return Grid(-pad, w - 1 + pad, -pad, h - 1 + pad, frozenset(cells))


def grow_polyomino(rng: random.Random, n_cells: int) -> frozenset[Cell]:
    """Random plus-connected cell set containing (0, 0)."""
    cells = {(0, 0)}
    while len(cells) < n_cells:
        frontier = sorted(
            {
                (x + dx, y + dy)
                for x, y in cells
                for dx, dy in ((0, -1), (-1, 0), (1, 0), (0, 1))
            }
            - cells
        )
        cells.add(frontier[rng.randrange(len(frontier))])
    return frozenset(cells)


def perimeter_cycle(cells) -> Cycle:
    """Outer contour of a cell set whose boundary is a single cycle."""
    cells = frozenset(cells)
    comp = Component(cells, "star", min(cells))
    d = outermost_boundary(comp)
    assert len(d.cycles) == 1, "perimeter_cycle needs a single-cycle cell set"
    return d.cycles[0]


def translated(cells, dx: int, dy: int) -> frozenset[Cell]:
    return frozenset((x + dx, y + dy) for x, y in cells)


@st.composite
def occupancy_grids(draw, max_side: int = 6):
    """A grid plus an in-window seed cell (seed occupancy not forced)."""
    w = draw(st.integers(1, max_side))
    h = draw(st.integers(1, max_side))
    cells = draw(
        st.frozensets(
            st.tuples(st.integers(0, w - 1), st.integers(0, h - 1)), max_size=w * h
        )
    )
    seed = (draw(st.integers(0, w - 1)), draw(st.integers(0, h - 1)))
    return Grid(0, w - 1, 0, h - 1, cells), seed


@st.composite
def occupied_components(draw, max_side: int = 6, kind: str = "star"):
    """A nonempty component: grids are drawn until the seed is occupied."""
    w = draw(st.integers(1, max_side))
    h = draw(st.integers(1, max_side))
    cells = draw(
        st.frozensets(
            st.tuples(st.integers(0, w - 1), st.integers(0, h - 1)),
            min_size=1,
            max_size=w * h,
        )
    )
    seed = draw(st.sampled_from(sorted(cells)))
    grid = Grid(0, w - 1, 0, h - 1, cells)
    return grid, component(grid, seed, kind)


@st.composite
def polyomino_seeds(draw, min_cells: int = 2, max_cells: int = 14):
    """(rng seed, size) pairs for deterministic polyomino growth."""
    return draw(st.integers(0, 2**32 - 1)), draw(st.integers(min_cells, max_cells))
