import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from starcontour.cornergraph import build_corner_graph
from starcontour.errors import OracleSizeError, UnionContourRefusal
from starcontour.lattice import Component, Grid
from starcontour.oracle import (
    ExhaustiveWindowOracle,
    enumerate_cycles,
    exterior_vacant,
    outermost_edges_by_definition,
    union_contour,
)
from starcontour.boundary import boundary_edges
from starcontour.lattice import component

from conftest import grid_from_art, grow_polyomino, perimeter_cycle


def _comp(cells):
    return Component(frozenset(cells), "star", min(cells))


def test_exterior_all_vacant():
    g = Grid(0, 2, 0, 2, frozenset())
    ext = exterior_vacant(g)
    assert ext.reachable == set(g.cells())


def test_exterior_all_occupied():
    g = Grid(0, 2, 0, 2, frozenset((x, y) for x in range(3) for y in range(3)))
    assert exterior_vacant(g).reachable == frozenset()


def test_exterior_ring_encloses_centre():
    g = grid_from_art(["###", "#.#", "###"])
    ext = exterior_vacant(g)
    assert (1, 1) not in ext.reachable
    assert not ext.is_exterior((1, 1))
    assert ext.is_exterior((5, 5))  # outside the window


@given(
    st.frozensets(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=25),
    st.frozensets(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=8),
)
def test_exterior_monotone_under_occupation(cells, extra):
    g1 = Grid(0, 4, 0, 4, cells)
    g2 = Grid(0, 4, 0, 4, cells | extra)
    assert exterior_vacant(g2).reachable <= exterior_vacant(g1).reachable


def test_enumerate_cycles_counts():
    assert len(enumerate_cycles(build_corner_graph(_comp({(0, 0)})))) == 1
    assert len(enumerate_cycles(build_corner_graph(_comp({(0, 0), (1, 0)})))) == 3
    assert len(enumerate_cycles(build_corner_graph(_comp({(0, 0), (1, 1)})))) == 2


def test_enumerate_cycles_size_guard():
    big = _comp({(x, y) for x in range(6) for y in range(6)})
    with pytest.raises(OracleSizeError):
        enumerate_cycles(build_corner_graph(big))


def test_enumerate_cycles_cap():
    block = _comp({(x, y) for x in range(3) for y in range(3)})
    with pytest.raises(OracleSizeError):
        enumerate_cycles(build_corner_graph(block), cap=10)


def test_outermost_by_definition_fixtures():
    one = _comp({(0, 0)})
    assert outermost_edges_by_definition(build_corner_graph(one)) == build_corner_graph(one).edges

    domino = _comp({(0, 0), (1, 0)})
    edges = outermost_edges_by_definition(build_corner_graph(domino))
    assert len(edges) == 6 and ((1, 0), (1, 1)) not in edges

    diag = _comp({(0, 0), (1, 1)})
    assert outermost_edges_by_definition(build_corner_graph(diag)) == build_corner_graph(diag).edges


def test_union_contour_plus_adjacent_units():
    c1 = perimeter_cycle({(0, 0)})
    c2 = perimeter_cycle({(1, 0)})
    assert union_contour(c1, c2) == perimeter_cycle({(0, 0), (1, 0)})


def test_union_contour_staircase():
    c1 = perimeter_cycle({(0, 0), (1, 0), (0, 1), (1, 1)})
    c2 = perimeter_cycle({(1, 1), (2, 1), (1, 2), (2, 2)})
    contour = union_contour(c1, c2)
    assert len(contour) == 12
    from starcontour.cornergraph import interior_cells

    assert interior_cells(contour) == {(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)}


def test_union_contour_refuses_diagonal_touch():
    c1 = perimeter_cycle({(0, 0)})
    c2 = perimeter_cycle({(1, 1)})
    with pytest.raises(UnionContourRefusal):
        union_contour(c1, c2)


@given(st.integers(0, 2**32 - 1), st.integers(1, 10))
def test_union_contour_idempotent(seed, n):
    cyc = perimeter_cycle(grow_polyomino(random.Random(seed), n))
    assert union_contour(cyc, cyc) == cyc


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_window_oracle_matches_direct_enumeration(seed):
    """The batched window oracle and the per-component enumeration must agree."""
    oracle = _shared_oracle()
    rng = random.Random(seed)
    cells = grow_polyomino(rng, rng.randint(1, 8))
    # clamp into the 4x4 window
    cells = frozenset(((x % 4, y % 4)) for x, y in cells)
    comp = component(Grid(0, 3, 0, 3, cells), min(cells), "star")
    direct = outermost_edges_by_definition(build_corner_graph(comp))
    assert oracle.outermost_edges(comp.cells) == direct
    assert boundary_edges(comp) == direct


_ORACLE_CACHE = {}


def _shared_oracle() -> ExhaustiveWindowOracle:
    if "o" not in _ORACLE_CACHE:
        _ORACLE_CACHE["o"] = ExhaustiveWindowOracle(4, 4)
    return _ORACLE_CACHE["o"]
