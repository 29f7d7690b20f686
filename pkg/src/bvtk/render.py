"""Text renderings: Graphviz DOT for diagrams and an ASCII symbol array for orbits."""
from __future__ import annotations

from .blocks import block_starts
from .core import Diagram
from .pairs import _anchor, _check_window


def to_dot(d: Diagram) -> str:
    lines = ["digraph bratteli {", "  rankdir=TB;", "  node [shape=circle, fontsize=10];"]
    for n, level in enumerate(d.levels):
        ids = " ".join(f'"{n}:{v.name}"' for v in level)
        lines.append(f"  {{ rank=same; {ids} }}")
        for v in level:
            lines.append(f'  "{n}:{v.name}" [label="{v.name}"];')
    for n in range(1, d.depth + 1):
        prev = d.levels[n - 1]
        for v in d.levels[n]:
            for o, s in enumerate(v.in_edges, start=1):
                lines.append(f'  "{n - 1}:{prev[s].name}" -> "{n}:{v.name}" [label="{o}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def symbol_array(d: Diagram, x, rows: int, window: tuple, horizon: int | None = None) -> str:
    """Rows 0..rows of j-symbol boundaries along the orbit of x.

    Column m is time m; a ``|`` in row j means T^m x is minimal into level j,
    i.e. a new j-symbol starts there.  The last line marks time 0.
    """
    a = _anchor(x, d, horizon)
    lo, hi = _check_window(window, a, a)
    if not 0 <= rows <= a.level:
        raise ValueError(f"rows must lie in 0..{a.level}")
    width = hi - lo + 1
    out = []
    for j in range(rows + 1):
        cells = [" "] * width
        for p in block_starts(d, (a.level, a.vertex), j, a.rank + lo, a.rank + hi + 1):
            cells[p - a.rank - lo] = "|"
        out.append(f"{j:>3} " + "".join(cells))
    marker = [" "] * width
    if lo <= 0 <= hi:
        marker[-lo] = "^"
    out.append("    " + "".join(marker))
    return "\n".join(out) + "\n"
