"""Output writers: CSV, JSON, and figure rendering.

All numeric CSV fields use 17 significant digits so rerunning a command
reproduces byte-identical files; rows are emitted in a deterministic
order with line-feed newlines and dot decimal separators regardless of
locale.  PNG rendering goes through a Figure object directly (no pyplot
state) so library import order cannot perturb the output.
"""

from __future__ import annotations

import json
from typing import IO, Sequence

from .oracle import SpectralSumReport
from .solver import EnergyRoot, SweepResult

__all__ = [
    "format_float",
    "render_sweep_png",
    "roots_to_json",
    "sweep_to_json",
    "write_roots_csv",
    "write_sweep_csv",
    "write_oracle_json",
]

ROOTS_HEADER = "index,re_energy,im_energy,residual,kind"
SWEEP_HEADER = "param,branch,re_energy,im_energy"


def format_float(x: float) -> str:
    return f"{x:.17g}"


def write_roots_csv(fh: IO[str], roots: Sequence[EnergyRoot]) -> None:
    fh.write(ROOTS_HEADER + "\n")
    for i, r in enumerate(roots):
        fh.write(
            f"{i},{format_float(r.energy.real)},{format_float(r.energy.imag)},"
            f"{format_float(r.residual)},{r.kind.value}\n"
        )


def roots_to_json(roots: Sequence[EnergyRoot]) -> str:
    rows = [
        {
            "index": i,
            "re_energy": r.energy.real,
            "im_energy": r.energy.imag,
            "residual": r.residual,
            "kind": r.kind.value,
        }
        for i, r in enumerate(roots)
    ]
    return json.dumps(rows, indent=2) + "\n"


def write_sweep_csv(fh: IO[str], result: SweepResult) -> None:
    fh.write(SWEEP_HEADER + "\n")
    for branch_id, branch in enumerate(result.branches):
        for point in branch:
            fh.write(
                f"{format_float(point.param)},{branch_id},"
                f"{format_float(point.energy.real)},{format_float(point.energy.imag)}\n"
            )


def sweep_to_json(result: SweepResult) -> str:
    obj = {
        "parameter": result.parameter,
        "branches": [
            [
                {"param": p.param, "re_energy": p.energy.real, "im_energy": p.energy.imag}
                for p in branch
            ]
            for branch in result.branches
        ],
    }
    return json.dumps(obj, indent=2) + "\n"


def write_oracle_json(fh: IO[str], reports: Sequence[SpectralSumReport]) -> None:
    fh.write(json.dumps([r.as_dict() for r in reports], indent=2) + "\n")


def render_sweep_png(
    path: str,
    labeled: Sequence[tuple[str, SweepResult]],
    title: str,
    xlabel: str,
) -> None:
    """Overlay the branches of several sweeps in one PNG."""
    from matplotlib.figure import Figure
    from matplotlib.backends.backend_agg import FigureCanvasAgg

    fig = Figure(figsize=(6.4, 4.8))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    colors = ["C0", "C1", "C2", "C3", "C4", "C5"]
    for fam, (label, result) in enumerate(labeled):
        color = colors[fam % len(colors)]
        for j, branch in enumerate(result.branches):
            xs = [p.param for p in branch]
            ys = [p.energy.real for p in branch]
            ax.plot(xs, ys, color=color, lw=1.2, label=label if j == 0 else None)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("E")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    fig.savefig(path, dpi=120)
