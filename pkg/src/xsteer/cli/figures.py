"""Datasets behind the published figures, written as CSV files.

fig1b            alpha sweep of the noiseless pure family
fig2_{ad,bf}_*   (alpha, strength) grids of S and B for the pure family
fig3_i..iii      alpha = pi/4 against strength under AD, PD, PF
fig3_iv, v       alpha = pi/8 against p under BF, PF
fig3_vi          alpha sweep at d = 0.3 under AD and PD
fig4_*           (v, strength) grids of C, S, B for the mixed family
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from ..channels import ChannelKind
from .grid import Axis, GridSpec, evaluate, grid_rows, to_csv

LINE_POINTS = 101
CONTOUR_POINTS = 201
FIGURES = ("fig1b", "fig2", "fig3", "fig4")

AD, PD, PF, BF = ChannelKind.AD, ChannelKind.PD, ChannelKind.PF, ChannelKind.BF
_STRENGTH_NAME = {AD: "d", PD: "d", PF: "p", BF: "p"}


def _alpha_axis(n):
    return Axis("alpha", 0.0, np.pi / 2, n)


def _strength_axis(kind, n):
    return Axis(_STRENGTH_NAME[kind], 0.0, 1.0, n)


def fig1b(n=LINE_POINTS):
    spec = GridSpec("pure", None, (_alpha_axis(n),), {})
    return {"fig1b.csv": grid_rows(spec, ["C", "B", "S"])}


def fig2(n=CONTOUR_POINTS):
    out = {}
    for kind in (AD, BF):
        spec = GridSpec("pure", kind, (_alpha_axis(n), _strength_axis(kind, n)), {})
        for m in ("S", "B"):
            out[f"fig2_{kind.value}_{m}.csv"] = grid_rows(spec, [m])
    return out


def fig3(n=LINE_POINTS):
    out = {}
    slices = [
        ("i", AD, np.pi / 4),
        ("ii", PD, np.pi / 4),
        ("iii", PF, np.pi / 4),
        ("iv", BF, np.pi / 8),
        ("v", PF, np.pi / 8),
    ]
    for tag, kind, alpha in slices:
        spec = GridSpec("pure", kind, (_strength_axis(kind, n),), {"alpha": alpha})
        out[f"fig3_{tag}.csv"] = grid_rows(spec, ["C", "B", "S"])

    alphas = _alpha_axis(n).values()
    header = ["alpha"]
    cols = [alphas]
    for kind in (AD, PD):
        vals = evaluate("pure", kind, alphas, np.full_like(alphas, 0.3), ["C", "B", "S"])
        for m in ("C", "B", "S"):
            header.append(f"{m}_{kind.value}")
            cols.append(vals[m])
    out["fig3_vi.csv"] = (header, np.column_stack(cols))
    return out


def fig4(n=CONTOUR_POINTS):
    out = {}
    for kind in (AD, PD, BF):
        spec = GridSpec("mixed", kind, (Axis("v", 0.0, 1.0, n), _strength_axis(kind, n)), {})
        for m in ("C", "S", "B"):
            out[f"fig4_{kind.value}_{m}.csv"] = grid_rows(spec, [m])
    return out


BUILDERS = {"fig1b": fig1b, "fig2": fig2, "fig3": fig3, "fig4": fig4}


def build(figure_id: str) -> dict:
    """Map of file name -> (header, rows) for one figure."""
    return BUILDERS[figure_id]()


def write(figure_id: str, out_dir) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, (header, rows) in build(figure_id).items():
        path = out_dir / name
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(to_csv(header, rows))
        written.append(path)
    return written
