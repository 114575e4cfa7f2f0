"""Rendering of zero-locus figures and the minimal SVG scatter.

The PNG path uses matplotlib (Agg backend, file output only); the SVG path is
a small hand-written scatter so that plot data can be produced without any
plotting dependency in the loop.  Both show the certified real zeros on the
real axis of the complex plane, marked with '+'.
"""
from __future__ import annotations

from pathlib import Path


def render_zero_locus_png(title: str, xs: list[float], path: str | Path, certificate: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.4, 2.4))
    ax.axhline(0.0, color="0.8", lw=0.8, zorder=1)
    ax.axvline(0.0, color="0.8", lw=0.8, zorder=1)
    ax.plot(xs, [0.0] * len(xs), linestyle="", marker="+", color="tab:blue", markersize=9, zorder=2)
    ax.set_xlim(-0.05, 1.05)
    ax.set_ylim(-1.0, 1.0)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(f"zeros of the face polynomial, type {title}")
    ax.text(0.99, 0.04, certificate, transform=ax.transAxes, ha="right", va="bottom", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_zero_locus_svg(title: str, xs: list[float], certificate: str) -> str:
    """Minimal standalone SVG scatter of the zeros on [0, 1]."""
    width, height = 640, 120
    margin, y_mid = 40, 70
    span = width - 2 * margin

    def sx(x: float) -> float:
        return margin + x * span

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<text x="{margin}" y="20" font-size="13" font-family="sans-serif">'
        f"zeros of the face polynomial, type {title}</text>",
        f'<text x="{margin}" y="36" font-size="10" font-family="sans-serif">{certificate}</text>',
        f'<line x1="{sx(0.0)}" y1="{y_mid}" x2="{sx(1.0)}" y2="{y_mid}" '
        'stroke="#999" stroke-width="1"/>',
    ]
    for tick in (0.0, 0.5, 1.0):
        parts.append(
            f'<line x1="{sx(tick)}" y1="{y_mid - 4}" x2="{sx(tick)}" y2="{y_mid + 4}" '
            'stroke="#999" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{sx(tick)}" y="{y_mid + 18}" font-size="10" text-anchor="middle" '
            f'font-family="sans-serif">{tick:g}</text>'
        )
    for x in xs:
        cx = sx(x)
        parts.append(
            f'<path d="M {cx - 5} {y_mid} H {cx + 5} M {cx} {y_mid - 5} V {y_mid + 5}" '
            'stroke="#1f77b4" stroke-width="1.6" fill="none"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
