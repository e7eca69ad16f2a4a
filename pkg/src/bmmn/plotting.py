"""Matplotlib figures of solved instances, written straight to a file."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .norm import UnitBall, as_point  # noqa: E402


def plot_solution(ball: UnitBall, terminals, net, path, title: str | None = None, report=None):
    """Draw the network (one colour per direction) and the unit ball; save to ``path``.

    The format follows the file suffix (png, pdf, svg, ...).
    """
    ts = [as_point(t) for t in terminals]
    fig, (ax, axb) = plt.subplots(1, 2, figsize=(9, 5), gridspec_kw={"width_ratios": [4, 1]})
    cmap = plt.get_cmap("tab10")
    seen = set()
    for a, b, j in net.merged_segments():
        label = f"dir {j}" if j not in seen else None
        seen.add(j)
        ax.plot([float(a.x), float(b.x)], [float(a.y), float(b.y)], color=cmap(j % 10), lw=1.8,
                label=label, solid_capstyle="round")
    ax.scatter([float(t.x) for t in ts], [float(t.y) for t in ts], s=22, color="black", zorder=3)
    ax.set_aspect("equal", adjustable="datalim")
    ax.grid(alpha=0.3)
    if seen:
        ax.legend(loc="best", fontsize=8)
    if title is None and report is not None:
        title = (f"n={report.n_terminals}  length={float(report.total_length):.4g}  "
                 f"LB={float(report.lower_bound):.4g}")
    if title:
        ax.set_title(title, fontsize=10)

    vs = list(ball.vertices) + [ball.vertices[0]]
    axb.plot([float(v.x) for v in vs], [float(v.y) for v in vs], color="black", lw=1)
    for j, v in enumerate(ball.vertices[:ball.m]):
        axb.plot([-float(v.x), float(v.x)], [-float(v.y), float(v.y)], color=cmap(j % 10), lw=0.8)
    axb.set_aspect("equal")
    axb.set_title("unit ball", fontsize=9)
    axb.axis("off")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
