"""Rendering of grid representations: ASCII to text, figures via matplotlib."""

from __future__ import annotations

from .grid import HORIZONTAL, GridRepresentation


def ascii_render(rep: GridRepresentation) -> str:
    """Character grid (north up) plus a per-vertex legend.

    Cells covered by one path show its orientation (`-` or `|`), shared
    cells show `+`; vertex identity lives in the legend only, since line
    cliques routinely stack several paths on the same cells.
    """
    cols = max(rep.cols, 1)
    rows = max(rep.rows, 1)
    cover: dict[tuple[int, int], list[str]] = {}
    for p in rep.paths:
        for x, y in p.points():
            cover.setdefault((x, y), []).append(p.orient)
    lines = []
    for y in range(rows - 1, -1, -1):
        row_chars = []
        for x in range(cols):
            owners = cover.get((x, y))
            if not owners:
                row_chars.append(".")
            elif len(owners) > 1:
                row_chars.append("+")
            else:
                row_chars.append("-" if owners[0] == HORIZONTAL else "|")
        lines.append("".join(row_chars))
    lines.append("")
    for p in sorted(rep.paths, key=lambda p: p.v):
        axis = "row" if p.orient == HORIZONTAL else "col"
        lines.append(f"v{p.v + 1}: {p.orient} {axis} {p.line} span [{p.lo}, {p.hi}]")
    return "\n".join(lines) + "\n"


def render_figure(rep: GridRepresentation, out_path: str, title: str | None = None) -> None:
    """Draw each path as a segment (points as markers) and save the figure."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(max(4, rep.cols * 0.5), max(3, rep.rows * 0.5)))
    cmap = plt.get_cmap("tab20")
    for p in sorted(rep.paths, key=lambda q: q.v):
        color = cmap(p.v % 20)
        if p.orient == HORIZONTAL:
            xs, ys = [p.lo, p.hi], [p.line, p.line]
        else:
            xs, ys = [p.line, p.line], [p.lo, p.hi]
        if p.lo == p.hi:
            ax.plot(xs[:1], ys[:1], marker="s", markersize=6, color=color)
        else:
            ax.plot(xs, ys, linewidth=2.5, color=color, solid_capstyle="round")
        ax.annotate(
            str(p.v + 1),
            ((xs[0] + xs[1]) / 2, (ys[0] + ys[1]) / 2),
            textcoords="offset points",
            xytext=(4, 4),
            fontsize=8,
            color=color,
        )
    ax.set_xticks(range(rep.cols))
    ax.set_yticks(range(rep.rows))
    ax.set_xlim(-0.5, rep.cols - 0.5)
    ax.set_ylim(-0.5, rep.rows - 0.5)
    ax.grid(True, linestyle=":", linewidth=0.5, alpha=0.6)
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
