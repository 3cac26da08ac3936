"""Merging two lattice cycles into the innermost cycle enclosing both.

Given cycles that share more than one corner, repeatedly splice exterior
detours of the second cycle onto the current cycle:

1. scan the current cycle's corners in canonical order for the first corner
   incident to an edge of the second cycle lying in the exterior;
2. follow the second cycle along that exterior edge until it next touches a
   corner of the current cycle, giving a detour path;
3. the two attachment corners split the current cycle into two arcs; each arc
   closed with the detour is a candidate cycle, and exactly one candidate's
   interior contains the other's -- keep it.

The enclosed cell set grows strictly each round, so the loop terminates; the
result is independent of the argument order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .cornergraph import (
    Corner,
    Cycle,
    GridEdge,
    edge_cells,
    edge_position,
    interior_cells,
    make_edge,
    validate_cycle,
)
from .errors import DomainError, InvariantViolation

ChosenSide = Literal["first_segment", "second_segment"]


@dataclass(frozen=True)
class MergeIteration:
    attachment_vertex: Corner
    exterior_path: tuple[Corner, ...]
    chosen_side: ChosenSide
    cycle_after: Cycle


@dataclass(frozen=True)
class MergeTrace:
    iterations: tuple[MergeIteration, ...]

    def __len__(self) -> int:
        return len(self.iterations)


def _covers(small: Cycle, big: Cycle, big_interior: frozenset) -> bool:
    """True when every edge of ``small`` is on ``big`` or interior to it."""
    big_edges = big.edges
    return all(
        e in big_edges or edge_cells(e)[0] in big_interior for e in small.edge_list
    )


def _cyclic_segment(corners: tuple[Corner, ...], start: int, stop: int, step: int) -> list[Corner]:
    n = len(corners)
    seg = [corners[start]]
    j = start
    while j != stop:
        j = (j + step) % n
        seg.append(corners[j])
    return seg


def merge(c1: Cycle, c2: Cycle) -> tuple[Cycle, MergeTrace]:
    """The unique innermost cycle enclosing both inputs, built from their edges only.

    Nested inputs short-circuit to the enclosing cycle; otherwise the inputs
    must share at least two corners.  Returns the merged cycle together with
    the full iteration trace for invariant checking.
    """
    int2 = interior_cells(c2)
    if _covers(c1, c2, int2):
        return c2, MergeTrace(())
    int1 = interior_cells(c1)
    if _covers(c2, c1, int1):
        return c1, MergeTrace(())

    shared = c1.corner_set & c2.corner_set
    if len(shared) < 2:
        raise DomainError(f"cycles share {len(shared)} corner(s); merging requires more than one")

    pos2 = {v: i for i, v in enumerate(c2.corners)}
    n2 = len(c2.corners)
    max_rounds = _joint_bbox_area(c1, c2) + 1

    current = c1
    iterations: list[MergeIteration] = []
    for _ in range(max_rounds):
        cur_interior = interior_cells(current)
        found = _find_attachment(current, c2, pos2, cur_interior)
        if found is None:
            return current, MergeTrace(tuple(iterations))
        u, direction = found

        # Detour along c2 until it next touches the current cycle.
        cur_corners = current.corner_set
        path = [u]
        j = pos2[u]
        while True:
            j = (j + direction) % n2
            w = c2.corners[j]
            path.append(w)
            if w in cur_corners:
                break
        if path[-1] == path[0]:
            raise InvariantViolation("detour wrapped around without touching the cycle again")

        ks = current.corners
        ia = ks.index(u)
        ib = ks.index(path[-1])
        tail = path[-2:0:-1]  # detour interior, reversed, to close each arc
        cand_a = validate_cycle(_cyclic_segment(ks, ia, ib, +1) + tail)
        cand_b = validate_cycle(_cyclic_segment(ks, ia, ib, -1) + tail)
        int_a = interior_cells(cand_a)
        int_b = interior_cells(cand_b)
        if int_b <= int_a:
            chosen, side, new_interior = cand_a, "first_segment", int_a
        elif int_a < int_b:
            chosen, side, new_interior = cand_b, "second_segment", int_b
        else:
            raise InvariantViolation("neither splice side encloses the other")
        if not len(new_interior) > len(cur_interior):
            raise InvariantViolation("merge iteration did not grow the interior")
        current = chosen
        iterations.append(MergeIteration(u, tuple(path), side, chosen))
    raise InvariantViolation("merge failed to terminate within the area bound")


def _find_attachment(
    current: Cycle, c2: Cycle, pos2: dict[Corner, int], cur_interior: frozenset
) -> Optional[tuple[Corner, int]]:
    """First corner of ``current`` (canonical order) with an exterior c2-edge, plus walk direction."""
    n2 = len(c2.corners)
    for u in current.corners:
        i = pos2.get(u)
        if i is None:
            continue
        for direction in (1, -1):
            v = c2.corners[(i + direction) % n2]
            e = make_edge(u, v)
            if edge_position(e, current, cur_interior) == "exterior":
                return u, direction
    return None


def _joint_bbox_area(c1: Cycle, c2: Cycle) -> int:
    xs = [a for a, _ in c1.corners] + [a for a, _ in c2.corners]
    ys = [b for _, b in c1.corners] + [b for _, b in c2.corners]
    return (max(xs) - min(xs)) * (max(ys) - min(ys))


@dataclass(frozen=True)
class MergeReport:
    """Pass/fail per structural property of a merge run.

    Properties checked on every intermediate cycle and the result:
      * edges_only_from_inputs -- uses no edge outside the two inputs;
      * first_cycle_covered    -- every first-input edge on or inside;
      * first_interior_contained;
      * exterior_edge_of_second_present (when the second input has an edge
        outside the first; vacuously true otherwise).
    Properties of the result only: second_cycle_covered,
    second_interior_contained, exterior_edge_of_first_present (conditional,
    symmetric).
    """

    results: tuple[tuple[str, bool], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.results)

    def failures(self) -> list[str]:
        return [name for name, passed in self.results if not passed]


def merge_invariants_check(c1: Cycle, c2: Cycle, result: Cycle, trace: MergeTrace) -> MergeReport:
    int1 = interior_cells(c1)
    int2 = interior_cells(c2)
    ext_of_2 = _exterior_edges(c2, c1, int1)  # edges of c2 exterior to c1
    ext_of_1 = _exterior_edges(c1, c2, int2)
    allowed = c1.edges | c2.edges

    stages = [it.cycle_after for it in trace.iterations]
    if not stages or stages[-1] != result:
        stages.append(result)

    only_from_inputs = True
    first_covered = True
    first_contained = True
    ext2_present = True
    for k in stages:
        k_interior = interior_cells(k)
        only_from_inputs &= k.edges <= allowed
        first_covered &= _covers(c1, k, k_interior)
        first_contained &= int1 <= k_interior
        if ext_of_2:
            ext2_present &= bool(k.edges & ext_of_2)

    result_interior = interior_cells(result)
    checks = (
        ("edges_only_from_inputs", only_from_inputs),
        ("first_cycle_covered", first_covered),
        ("first_interior_contained", first_contained),
        ("exterior_edge_of_second_present", ext2_present),
        ("second_cycle_covered", _covers(c2, result, result_interior)),
        ("second_interior_contained", int2 <= result_interior),
        (
            "exterior_edge_of_first_present",
            bool(result.edges & ext_of_1) if ext_of_1 else True,
        ),
    )
    return MergeReport(checks)


def _exterior_edges(of: Cycle, against: Cycle, against_interior: frozenset) -> frozenset[GridEdge]:
    return frozenset(
        e for e in of.edge_list if edge_position(e, against, against_interior) == "exterior"
    )
