#!/usr/bin/env python3
"""Boundary statistics of the centre star cluster across occupation probabilities.

For each p, samples Bernoulli(p) windows and reports mean component size,
boundary length, and cycle count over the nonempty trials.  A quick desk
experiment, not a substitute for the simulate CLI.

Usage: python scripts/boundary_scaling.py [--side 20] [--trials 500]
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

import numpy as np

from starcontour.boundary import outermost_boundary
from starcontour.lattice import Grid, component


@dataclass(frozen=True)
class SweepConfig:
    side: int
    trials: int
    rng_seed: int
    ps: tuple[float, ...]


def run_point(cfg: SweepConfig, p_index: int, p: float) -> tuple[float, float, float, int]:
    n = cfg.side
    seed_cell = (n // 2, n // 2)
    sizes, lengths, cycles = [], [], []
    for trial in range(cfg.trials):
        rng = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence((cfg.rng_seed, p_index, trial)))
        )
        hits = (rng.random(n * n) < p).nonzero()[0].tolist()
        grid = Grid(0, n - 1, 0, n - 1, frozenset((k % n, k // n) for k in hits))
        comp = component(grid, seed_cell, "star")
        if comp is None:
            continue
        d = outermost_boundary(comp)
        sizes.append(len(comp.cells))
        lengths.append(sum(len(c) for c in d.cycles))
        cycles.append(len(d.cycles))
    if not sizes:
        return 0.0, 0.0, 0.0, 0
    return float(np.mean(sizes)), float(np.mean(lengths)), float(np.mean(cycles)), len(sizes)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--side", default=20, type=int)
    ap.add_argument("--trials", default=500, type=int)
    ap.add_argument("--rng-seed", default=20260809, type=int)
    ap.add_argument("--ps", default="0.3,0.4,0.5,0.6,0.7", help="comma-separated probabilities")
    args = ap.parse_args()
    cfg = SweepConfig(args.side, args.trials, args.rng_seed, tuple(float(x) for x in args.ps.split(",")))

    print(f"window {cfg.side}x{cfg.side}, {cfg.trials} trials per p, centre seed")
    print(f"{'p':>5}  {'nonempty':>8}  {'mean size':>10}  {'mean boundary':>13}  {'mean cycles':>11}")
    for i, p in enumerate(cfg.ps):
        size, length, ncyc, kept = run_point(cfg, i, p)
        print(f"{p:5.2f}  {kept:8d}  {size:10.1f}  {length:13.1f}  {ncyc:11.2f}")


if __name__ == "__main__":
    main()
