#!/usr/bin/env python3
"""Render a small gallery of boundary decompositions to SVG files.

Usage: python scripts/render_gallery.py [--out-dir out] [--rng-seed 7]
"""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np

from starcontour.boundary import outermost_boundary
from starcontour.cli import render_svg
from starcontour.lattice import Grid, component

FIXTURES = {
    "diagonal_pair": {(0, 0), (1, 1)},
    "diagonal_chain": {(0, 0), (1, 1), (2, 2)},
    "u_pentomino": {(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)},
    "pinched_ring": {(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2), (0, 2), (0, 1), (3, 3)},
}


def render(cells, name: str, out_dir: Path) -> None:
    grid = Grid.from_cells(cells, pad=1)
    comp = component(grid, min(cells), "star")
    d = outermost_boundary(comp)
    path = out_dir / f"{name}.svg"
    path.write_text(render_svg(grid, d.cycles, d.circuit, scale=28))
    print(f"{path}: {len(d.cycles)} cycle(s), circuit of {len(d.circuit.corners)} edges")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="out", type=Path)
    ap.add_argument("--rng-seed", default=7, type=int)
    ap.add_argument("--side", default=14, type=int, help="side of the random grid")
    ap.add_argument("--p", default=0.55, type=float)
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    for name, cells in FIXTURES.items():
        render(cells, name, args.out_dir)

    rng = np.random.Generator(np.random.PCG64(args.rng_seed))
    n = args.side
    occupied = {(k % n, k // n) for k in range(n * n) if rng.random() < args.p}
    occupied.add((n // 2, n // 2))
    render(
        component(Grid(0, n - 1, 0, n - 1, frozenset(occupied)), (n // 2, n // 2), "star").cells,
        f"random_p{args.p:g}",
        args.out_dir,
    )


if __name__ == "__main__":
    main()
