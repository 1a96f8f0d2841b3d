"""Monospace renderings of Young diagrams and gap-poset Hasse diagrams."""

from __future__ import annotations

from .partition import Partition, hook_lengths
from .semigroup_poset import GapPoset, grid_coordinates

__all__ = ["render_hasse", "render_young"]


def render_young(p: Partition, boxes: bool = False) -> str:
    """Hook length of every cell, rows left-justified and columns aligned.

    The empty partition renders as the empty string.
    """
    grid = hook_lengths(p)
    if not grid:
        return ""
    w = max(len(str(h)) for row in grid for h in row)
    if not boxes:
        return "\n".join(" ".join(str(h).rjust(w) for h in row) for row in grid)
    lines = []
    prev = 0
    for row in grid:
        lines.append("+" + "+".join("-" * (w + 2) for _ in range(max(prev, len(row)))) + "+")
        lines.append("|" + "|".join(f" {str(h).rjust(w)} " for h in row) + "|")
        prev = len(row)
    lines.append("+" + "+".join("-" * (w + 2) for _ in range(prev)) + "+")
    return "\n".join(lines)


def render_hasse(poset: GapPoset) -> str:
    """Hasse diagram, maximal element on top.

    A gap ``s*t - alpha*s - beta*t`` sits on row ``alpha + beta - 2`` at
    column ``alpha - beta``, so subtracting ``t`` steps down-left (``/``) and
    subtracting ``s`` steps down-right (``\\``).  For T_s the rows are the
    rank levels, highest rank first.
    """
    if not poset.gaps:
        return ""
    coords = grid_coordinates(poset)
    place = {a: (alpha + beta - 2, alpha - beta) for a, (alpha, beta) in coords.items()}
    w = max(len(str(a)) for a in poset.gaps)
    unit = w + 1 if (w + 1) % 2 == 0 else w + 2
    xmin = min(x for _, x in place.values())
    xmax = max(x for _, x in place.values())
    depth = max(r for r, _ in place.values())
    width = (xmax - xmin) * unit + 2 * w + 1

    def col(x):
        return (x - xmin) * unit + w

    rows: list[list[int]] = [[] for _ in range(depth + 1)]
    for a, (r, _) in place.items():
        rows[r].append(a)

    lines = []
    for r, members in enumerate(rows):
        line = [" "] * width
        for a in members:
            label = str(a)
            start = col(place[a][1]) - (len(label) - 1) // 2
            line[start : start + len(label)] = label
        lines.append("".join(line).rstrip())
        if r == depth:
            break
        edges = [" "] * width
        for a in members:
            c = col(place[a][1])
            for b in poset.covers_down[a]:
                step = place[b][1] - place[a][1]
                edges[c + step * unit // 2] = "/" if step < 0 else "\\"
        lines.append("".join(edges).rstrip())
    return "\n".join(lines)
