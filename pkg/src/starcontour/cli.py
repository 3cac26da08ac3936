"""Command-line front end.

Subcommands:
  boundary       outermost boundary decomposition of a grid's star component
  plus-boundary  single outer cycle of a grid's plus component
  merge          merge two cycles given as JSON files
  check          structural and oracle validation of a grid; exit 3 on mismatch
  simulate       Monte Carlo occupancy trials, one CSV row of stats per trial

Grids come from text files (see lattice.parse_grid_text) or, for exhaustive
sweeps, from ``--config-index I`` which decodes I as a row-major occupancy
bitmask over an N x N window (bit k = cell (k % N, k // N), seed defaults to
(0, 0)).

Exit codes: 0 ok, 1 usage, 2 parse/domain error, 3 invariant or oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Optional

import numpy as np

from .boundary import (
    BoundaryDecomposition,
    decomposition_to_json,
    outermost_boundary,
    plus_outermost,
    verify_decomposition,
)
from .cornergraph import Circuit, Cycle, build_corner_graph, edge_cells, interior_cells, validate_cycle
from .cyclemerge import merge, merge_invariants_check
from .errors import (
    CycleValidationError,
    DomainError,
    GridParseError,
    InvariantViolation,
    OracleSizeError,
)
from .lattice import Cell, Grid, component, parse_grid_text
from .oracle import outermost_edges_by_definition

CSV_HEADER = "trial,component_size,n_cycles,boundary_length,circuit_length,tree_depth"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Validated arguments of one CLI invocation."""

    command: str
    grid_path: Optional[str] = None
    config_index: Optional[int] = None
    window: int = 4
    seed_cell: Optional[Cell] = None
    out: Optional[str] = None
    fmt: str = "json"
    scale: int = 20
    show_circuit: bool = False
    exhaustive_oracle: bool = False
    c1_path: Optional[str] = None
    c2_path: Optional[str] = None
    p: float = 0.5
    trials: int = 1
    rng_seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise UsageError(f"occupation probability {self.p} outside [0, 1]")
        if self.trials < 1:
            raise UsageError("trials must be >= 1")
        if self.window < 1:
            raise UsageError("window must be >= 1")
        if self.workers < 1:
            raise UsageError("workers must be >= 1")


# --- input loading -----------------------------------------------------------


def _load_grid(cfg: RunConfig) -> tuple[Grid, Cell]:
    if cfg.config_index is not None:
        n = cfg.window
        if not 0 <= cfg.config_index < (1 << (n * n)):
            raise UsageError(f"config index {cfg.config_index} out of range for a {n}x{n} window")
        occupied = frozenset(
            (k % n, k // n) for k in range(n * n) if cfg.config_index >> k & 1
        )
        return Grid(0, n - 1, 0, n - 1, occupied), cfg.seed_cell or (0, 0)
    if cfg.grid_path is None:
        raise UsageError("either a grid file or --config-index is required")
    with open(cfg.grid_path, encoding="utf-8") as f:
        grid, seed = parse_grid_text(f.read())
    if cfg.seed_cell is not None:
        seed = cfg.seed_cell
    return grid, seed


def _load_cycle(path: str) -> Cycle:
    with open(path, encoding="utf-8") as f:
        obj = json.load(f)
    if not isinstance(obj, dict) or "corners" not in obj:
        raise CycleValidationError(f"{path}: expected a JSON object with a 'corners' list")
    return validate_cycle(obj["corners"])


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


# --- svg / ascii rendering ---------------------------------------------------

_STROKES = ("#c0392b", "#2471a3", "#1e8449", "#b7950b", "#7d3c98", "#ca6f1e", "#148f77")


def render_svg(
    grid: Grid,
    cycles: tuple[Cycle, ...],
    circuit: Optional[Circuit] = None,
    scale: int = 20,
) -> str:
    s = scale
    # corner (a, b) sits at geometric (a - 1/2, b - 1/2); y is flipped for screen
    def pt(a: int, b: int) -> tuple[float, float]:
        return (
            (a - grid.x_min + 0.5) * s,
            (grid.y_max + 1.5 - b) * s,
        )

    width = (grid.width + 1) * s
    height = (grid.height + 1) * s
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<defs><marker id="arrow" markerWidth="6" markerHeight="6" refX="5" refY="3" '
        'orient="auto"><path d="M0,0 L6,3 L0,6 z" fill="#555"/></marker></defs>',
    ]
    for (x, y) in sorted(grid.occupied, key=lambda c: (c[1], c[0])):
        px, py = pt(x, y + 1)
        parts.append(
            f'<rect x="{px:g}" y="{py:g}" width="{s}" height="{s}" fill="#d5d8dc"/>'
        )
    for i, c in enumerate(cycles):
        coords = " ".join("L{:g},{:g}".format(*pt(a, b)) for a, b in c.corners)
        d = "M" + coords[1:] + " Z"
        stroke = _STROKES[i % len(_STROKES)]
        parts.append(f'<path class="cycle" d="{d}" fill="none" stroke="{stroke}" stroke-width="2"/>')
    if circuit is not None and circuit.corners:
        coords = " ".join("L{:g},{:g}".format(*pt(a, b)) for a, b in circuit.corners)
        d = "M" + coords[1:] + " Z"
        parts.append(
            f'<path class="circuit" d="{d}" fill="none" stroke="#555" '
            'stroke-width="1" stroke-dasharray="4 3" marker-end="url(#arrow)"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_ascii(grid: Grid, cycles: tuple[Cycle, ...]) -> str:
    w, h = grid.width, grid.height
    canvas = [[" "] * (2 * w + 1) for _ in range(2 * h + 1)]
    for y in range(grid.y_min, grid.y_max + 1):
        for x in range(grid.x_min, grid.x_max + 1):
            canvas[2 * (grid.y_max - y) + 1][2 * (x - grid.x_min) + 1] = (
                "#" if (x, y) in grid.occupied else "."
            )
    for c in cycles:
        for (u, v) in c.edge_list:
            (a, b), (a2, b2) = u, v
            if b == b2:  # horizontal
                row, col = 2 * (grid.y_max + 1 - b), 2 * (a - grid.x_min) + 1
                canvas[row][col] = "-"
            else:
                row, col = 2 * (grid.y_max + 1 - b) - 1, 2 * (a - grid.x_min)
                canvas[row][col] = "|"
            for (ca, cb) in (u, v):
                canvas[2 * (grid.y_max + 1 - cb)][2 * (ca - grid.x_min)] = "+"
    return "\n".join("".join(row) for row in canvas) + "\n"


# --- subcommands -------------------------------------------------------------


def run_boundary(cfg: RunConfig) -> int:
    grid, seed = _load_grid(cfg)
    comp = component(grid, seed, "star")
    d = outermost_boundary(comp)
    if cfg.fmt == "json":
        _emit(cfg, json.dumps(decomposition_to_json(d), indent=2) + "\n")
    elif cfg.fmt == "svg":
        _emit(cfg, render_svg(grid, d.cycles, d.circuit if cfg.show_circuit else None, cfg.scale))
    else:
        _emit(cfg, render_ascii(grid, d.cycles))
    return 0


def run_plus_boundary(cfg: RunConfig) -> int:
    grid, seed = _load_grid(cfg)
    comp = component(grid, seed, "plus")
    if comp is None:
        cycles: tuple[Cycle, ...] = ()
        payload: dict = {"cycle": None}
    else:
        cyc = plus_outermost(comp)
        cycles = (cyc,)
        payload = {"cycle": {"corners": [list(v) for v in cyc.corners]}}
    if cfg.fmt == "json":
        _emit(cfg, json.dumps(payload, indent=2) + "\n")
    elif cfg.fmt == "svg":
        _emit(cfg, render_svg(grid, cycles, None, cfg.scale))
    else:
        _emit(cfg, render_ascii(grid, cycles))
    return 0


def run_merge(cfg: RunConfig) -> int:
    c1 = _load_cycle(cfg.c1_path)
    c2 = _load_cycle(cfg.c2_path)
    result, trace = merge(c1, c2)
    report = merge_invariants_check(c1, c2, result, trace)
    payload = {
        "result": {"corners": [list(v) for v in result.corners]},
        "trace": {
            "iterations": [
                {
                    "attachment": list(it.attachment_vertex),
                    "path": [list(v) for v in it.exterior_path],
                    "chosen_side": it.chosen_side,
                    "cycle_after": {"corners": [list(v) for v in it.cycle_after.corners]},
                }
                for it in trace.iterations
            ]
        },
        "checks": {name: ok for name, ok in report.results},
    }
    _emit(cfg, json.dumps(payload, indent=2) + "\n")
    return 0 if report.ok else 3


def run_check(cfg: RunConfig) -> int:
    grid, seed = _load_grid(cfg)
    comp = component(grid, seed, "star")
    d = outermost_boundary(comp)
    lines: list[str] = []
    failed = False

    for res in verify_decomposition(grid, comp, d):
        lines.append(f"{'ok  ' if res.ok else 'FAIL'} {res.name}" + (f" ({res.detail})" if res.detail else ""))
        failed |= not res.ok

    plus_comp = component(grid, seed, "plus")
    if plus_comp is None:
        lines.append("ok   plus_component_empty")
    else:
        cyc = plus_outermost(plus_comp)
        inner = interior_cells(cyc)
        ok = plus_comp.cells <= inner and all(
            _is_boundary_edge(grid, plus_comp, inner, e) for e in cyc.edge_list
        )
        lines.append(("ok  " if ok else "FAIL") + " plus_outermost_single_cycle")
        failed |= not ok
        if comp is not None and comp.cells == plus_comp.cells:
            ok = len(d.cycles) == 1 and d.cycles[0] == cyc
            lines.append(("ok  " if ok else "FAIL") + " plus_cycle_matches_star_boundary")
            failed |= not ok

    if cfg.exhaustive_oracle:
        if comp is None:
            lines.append("ok   definition_oracle (empty component)")
        else:
            try:
                oracle_edges = outermost_edges_by_definition(build_corner_graph(comp))
            except OracleSizeError as e:
                lines.append(f"skip definition_oracle ({e})")
            else:
                ok = oracle_edges == d.edge_union
                lines.append(("ok  " if ok else "FAIL") + " definition_oracle")
                failed |= not ok

    _emit(cfg, "\n".join(lines) + "\n")
    return 3 if failed else 0


def _is_boundary_edge(grid: Grid, comp, inner, e) -> bool:
    a, b = edge_cells(e)
    inside, outside = (a, b) if a in inner else (b, a)
    return inside in comp.cells and not grid.is_occupied(outside) and outside not in inner


# --- simulation --------------------------------------------------------------


def _trial_row(args: tuple[int, int, int, float]) -> str:
    rng_seed, trial, n, p = args
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence((rng_seed, trial))))
    vals = rng.random(n * n)
    occupied = frozenset((k % n, k // n) for k in range(n * n) if vals[k] < p)
    grid = Grid(0, n - 1, 0, n - 1, occupied)
    seed_cell = (n // 2, n // 2)
    comp = component(grid, seed_cell, "star")
    if comp is None:
        return f"{trial},0,0,0,0,0"
    d = outermost_boundary(comp)
    boundary_len = sum(len(c) for c in d.cycles)
    circuit_len = len(d.circuit.corners)
    if circuit_len != boundary_len:
        raise InvariantViolation("circuit length differs from boundary length")
    depth = _tree_depth(d, d.cell_to_cycle[seed_cell])
    return f"{trial},{len(comp.cells)},{len(d.cycles)},{boundary_len},{circuit_len},{depth}"


def _tree_depth(d: BoundaryDecomposition, root: int) -> int:
    adj = d.tree.adjacency()
    depth = {root: 0}
    queue = [root]
    while queue:
        i = queue.pop()
        for j in adj[i]:
            if j not in depth:
                depth[j] = depth[i] + 1
                queue.append(j)
    return max(depth.values())


def run_simulate(cfg: RunConfig) -> int:
    jobs = [(cfg.rng_seed, t, cfg.window, cfg.p) for t in range(cfg.trials)]
    if cfg.workers > 1:
        with get_context("fork").Pool(cfg.workers) as pool:
            rows = pool.map(_trial_row, jobs, chunksize=max(1, cfg.trials // (4 * cfg.workers)))
    else:
        rows = [_trial_row(j) for j in jobs]
    _emit(cfg, CSV_HEADER + "\n" + "\n".join(rows) + "\n")
    return 0


# --- argument parsing --------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="starcontour", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_grid_opts(p):
        p.add_argument("--grid", help="grid text file (header 'origin: X Y', rows of '#'/'.')")
        p.add_argument("--config-index", type=int, default=None, help="row-major occupancy bitmask")
        p.add_argument("--window", type=int, default=4, help="window side for --config-index")
        p.add_argument("--seed", type=int, nargs=2, metavar=("X", "Y"), default=None)
        p.add_argument("--out", default=None, help="output file (default stdout)")

    p = sub.add_parser("boundary", help="star-component boundary decomposition")
    add_grid_opts(p)
    p.add_argument("--format", choices=("json", "svg", "ascii"), default="json")
    p.add_argument("--scale", type=int, default=20, help="svg pixels per cell")
    p.add_argument("--circuit", action="store_true", help="draw the covering circuit in svg")

    p = sub.add_parser("plus-boundary", help="plus-component outer cycle")
    add_grid_opts(p)
    p.add_argument("--format", choices=("json", "svg", "ascii"), default="json")
    p.add_argument("--scale", type=int, default=20)

    p = sub.add_parser("merge", help="merge two cycles")
    p.add_argument("--c1", required=True, help="JSON file with {'corners': [[a,b],...]}")
    p.add_argument("--c2", required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("check", help="structural + oracle validation")
    add_grid_opts(p)
    p.add_argument("--exhaustive-oracle", action="store_true", help="compare against full cycle enumeration")

    p = sub.add_parser("simulate", help="Monte Carlo trials to CSV")
    p.add_argument("--p", type=float, required=True, help="occupation probability")
    p.add_argument("--window", type=int, required=True, help="window side length")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--rng-seed", type=int, required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--workers", type=int, default=1)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    common = dict(command=args.command, out=getattr(args, "out", None))
    if args.command == "merge":
        return RunConfig(c1_path=args.c1, c2_path=args.c2, **common)
    if args.command == "simulate":
        return RunConfig(
            p=args.p, window=args.window, trials=args.trials,
            rng_seed=args.rng_seed, workers=args.workers, **common,
        )
    cfg = RunConfig(
        grid_path=args.grid,
        config_index=args.config_index,
        window=args.window,
        seed_cell=tuple(args.seed) if args.seed else None,
        fmt=getattr(args, "format", "json"),
        scale=getattr(args, "scale", 20),
        show_circuit=getattr(args, "circuit", False),
        exhaustive_oracle=getattr(args, "exhaustive_oracle", False),
        **common,
    )
    return cfg


_DISPATCH = {
    "boundary": run_boundary,
    "plus-boundary": run_plus_boundary,
    "merge": run_merge,
    "check": run_check,
    "simulate": run_simulate,
}


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        cfg = _config_from_args(args)
        return _DISPATCH[cfg.command](cfg)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except FileNotFoundError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except (GridParseError, CycleValidationError, DomainError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except (InvariantViolation, OracleSizeError) as e:
        print(f"invariant error: {e}", file=sys.stderr)
        return 3
    except SystemExit as e:  # argparse -h
        return int(e.code or 0)


def cli_main() -> None:
    sys.exit(main())
