#!/usr/bin/env python3
"""Reproduce the reference plots: orbit heatmaps and the error-decay line.

Writes CSV + SVG into the output directory (default: results/).

Usage: python scripts/reproduce_figures.py [outdir]
"""
import math
import pathlib
import sys

from pbklab.harness import ExperimentConfig, run_experiment


def main() -> int:
    outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "results")
    outdir.mkdir(parents=True, exist_ok=True)
    jobs = [
        ExperimentConfig(
            experiment="heatmap", kind="equivariant", k=80, e=0.5,
            grid_n=121, out=str(outdir / "heatmap_equivariant_k80.csv"),
            svg=str(outdir / "heatmap_equivariant_k80.svg"), seed=1),
        ExperimentConfig(
            experiment="heatmap", kind="partial", k=80, e=0.5,
            grid_n=121, out=str(outdir / "heatmap_partial_k80.csv"),
            svg=str(outdir / "heatmap_partial_k80.svg"), seed=1),
        ExperimentConfig(
            experiment="error-scaling", k_min=10, k_max=1000, k_ratio=1.25,
            e=0.5, t0=math.pi / 2,
            out=str(outdir / "error_scaling.csv"),
            svg=str(outdir / "error_scaling.svg"), seed=1),
    ]
    worst = 0
    for cfg in jobs:
        rpt = run_experiment(cfg)
        print(f"{cfg.experiment} ({cfg.kind}): {rpt.message}")
        worst = max(worst, rpt.exit_code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
