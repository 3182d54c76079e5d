"""Matplotlib renderings: automaton diagrams and benchmark plots.

Figures are rendered straight to files (Agg backend), so everything
works headless.
"""

from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Circle, FancyArrowPatch  # noqa: E402

from .generator import Generator


def draw_generator(g: Generator, path: str, title: str | None = None) -> None:
    """State diagram: circular layout, double circles for marked states,
    an entry arrow into the initial state, curved labeled edges."""
    n = g.n_states
    radius = 0.32
    spread = max(2.2, 0.75 * n)
    pos = {}
    for i in range(n):
        ang = math.pi / 2 - 2 * math.pi * i / max(n, 1)
        pos[i] = (spread * math.cos(ang), spread * math.sin(ang))

    fig, ax = plt.subplots(figsize=(max(4.0, 1.6 * math.sqrt(n) + 2), max(4.0, 1.6 * math.sqrt(n) + 2)))
    ax.set_aspect("equal")
    ax.axis("off")

    for i in range(n):
        x, y = pos[i]
        ax.add_patch(Circle((x, y), radius, fill=True, facecolor="white", edgecolor="black", zorder=3))
        if i in g.marked:
            ax.add_patch(Circle((x, y), radius * 0.8, fill=False, edgecolor="black", zorder=4))
        ax.text(x, y, g.state_names[i], ha="center", va="center", fontsize=8, zorder=5)

    # entry arrow
    ix, iy = pos[g.initial]
    ax.add_patch(
        FancyArrowPatch(
            (ix - 2.6 * radius, iy + 2.6 * radius),
            (ix - 0.75 * radius, iy + 0.75 * radius),
            arrowstyle="-|>",
            mutation_scale=12,
            color="black",
            zorder=2,
        )
    )

    # group parallel edges so labels stack
    grouped: dict[tuple[int, int], list[str]] = {}
    for (q, e), t in sorted(g.delta.items(), key=lambda kv: (kv[0][0], kv[0][1].key)):
        grouped.setdefault((q, t), []).append(e.render())
    for (q, t), labels in grouped.items():
        label = ",".join(labels)
        x1, y1 = pos[q]
        x2, y2 = pos[t]
        if q == t:
            lx, ly = x1, y1 + 2.1 * radius
            ax.add_patch(
                FancyArrowPatch(
                    (x1 - 0.5 * radius, y1 + 0.85 * radius),
                    (x1 + 0.5 * radius, y1 + 0.85 * radius),
                    connectionstyle="arc3,rad=2.4",
                    arrowstyle="-|>",
                    mutation_scale=10,
                    color="black",
                    zorder=2,
                )
            )
            ax.text(lx, ly + 0.35 * radius, label, ha="center", va="bottom", fontsize=7)
            continue
        rad = 0.18 if (t, q) in grouped else 0.08
        ax.add_patch(
            FancyArrowPatch(
                (x1, y1),
                (x2, y2),
                connectionstyle=f"arc3,rad={rad}",
                arrowstyle="-|>",
                mutation_scale=11,
                color="black",
                shrinkA=radius * 42,
                shrinkB=radius * 42,
                zorder=1,
            )
        )
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        # nudge the label off the chord, on the bend side
        dx, dy = x2 - x1, y2 - y1
        norm = math.hypot(dx, dy) or 1.0
        off = 0.45 * radius + rad * norm * 0.5
        ax.text(mx - dy / norm * off, my + dx / norm * off, label, ha="center", va="center", fontsize=7)

    ax.relim()
    ax.autoscale_view()
    ax.set_title(title or g.name)
    fig.savefig(path, bbox_inches="tight", dpi=160)
    plt.close(fig)


def save_scaling_figure(rows: Sequence[tuple[int, float, bool]], slope: float, path: str) -> None:
    """Log-log state count vs runtime with the fitted slope."""
    xs = [n for n, _, _ in rows]
    ys = [t for _, t, _ in rows]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.loglog(xs, ys, "o-", label="measured")
    ax.set_xlabel("states (minimized)")
    ax.set_ylabel("seconds")
    ax.set_title(f"two-alphabet check scaling (slope {slope:.2f})")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.savefig(path, bbox_inches="tight", dpi=160)
    plt.close(fig)


def save_nlinear_figure(rows: Sequence[tuple[int, float, bool]], path: str) -> None:
    """Component count vs runtime, with the ideal linear reference."""
    xs = [n for n, _, _ in rows]
    ys = [t for _, t, _ in rows]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(xs, ys, "o-", label="measured")
    if ys[0] > 0:
        ax.plot(xs, [ys[0] * n / xs[0] for n in xs], "--", label="linear reference")
    ax.set_xlabel("local alphabets")
    ax.set_ylabel("seconds")
    ax.set_title("n-ary check growth")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.savefig(path, bbox_inches="tight", dpi=160)
    plt.close(fig)
