#!/usr/bin/env python3
"""Render the CSVs emitted by `levycredit figures`.

Usage: plot_figures.py [figures_dir]

Reads figure1_path.csv, figure1_intensity.csv and figure2_spread.csv from
the given directory (default: .) and writes figure1.png / figure2.png
next to them.
"""
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def main() -> None:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
    path = pd.read_csv(out / "figure1_path.csv")
    intensity = pd.read_csv(out / "figure1_intensity.csv")
    spread = pd.read_csv(out / "figure2_spread.csv")

    fig, axes = plt.subplots(3, 1, figsize=(9, 9), sharex=True)
    axes[0].plot(path["t"], path["x"], lw=0.7, label="X")
    axes[0].plot(path["t"], path["xmin"], lw=0.9, label="running min")
    axes[0].legend(loc="best")
    axes[0].set_ylabel("log asset value")
    axes[1].plot(path["t"], path["gap"], lw=0.7, color="tab:green")
    axes[1].set_ylabel("X - min X")
    axes[2].plot(intensity["t"], intensity["lambda"], lw=0.7, color="tab:red",
                 label="lambda")
    axes[2].plot(intensity["t"], intensity["pi_of_gap"], lw=0.7,
                 color="tab:purple", alpha=0.6, label="Pi(gap)")
    axes[2].legend(loc="best")
    axes[2].set_ylabel("intensity")
    axes[2].set_xlabel("t (years)")
    fig.tight_layout()
    fig.savefig(out / "figure1.png", dpi=150)

    fig2, ax = plt.subplots(figsize=(7, 4.5))
    ax.errorbar(spread["h"], spread["spread"], yerr=spread["std_error"],
                fmt="o-", ms=3, lw=0.9, capsize=2)
    ax.set_xlabel("horizon h (years)")
    ax.set_ylabel("credit spread S(t, h)")
    fig2.tight_layout()
    fig2.savefig(out / "figure2.png", dpi=150)
    print(f"wrote {out/'figure1.png'} and {out/'figure2.png'}")


if __name__ == "__main__":
    main()
