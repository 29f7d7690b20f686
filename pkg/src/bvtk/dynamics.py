"""Vershik successor and predecessor on lazily extended paths.

Everything here works by literally stepping paths.  It is slow but direct,
and serves as the reference that the faster block-slicing routines in
:mod:`bvtk.blocks` and :mod:`bvtk.pairs` are tested against.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Diagram, DiagramError, FinitePath, PathSpec, as_spec, extremal_path_into


class HorizonExceeded(DiagramError):
    """The requested orbit point needs edges below the diagram's last level."""


def resolve(x: PathSpec, n: int, d: Diagram) -> FinitePath:
    """Truncation of ``x`` to level ``n``, extending the prefix by its rule."""
    x = as_spec(x)
    if n > d.depth:
        raise HorizonExceeded(f"level {n} is below the diagram depth {d.depth}")
    edges = list(x.prefix.edges[:n])
    if len(edges) < n:
        if x.rule is None:
            raise DiagramError(
                f"path has a length-{x.prefix.length} prefix and no suffix rule")
        src = edges[-1][0] if edges else 0
        for level in range(len(edges), n):
            step = level - x.anchor
            edges.append(x.rule.next_edge(d, level, src, step))
            src = edges[-1][0]
    return FinitePath(tuple(edges))


def _succ_edges(d: Diagram, edges: list) -> bool:
    """Advance ``edges`` (a full-length path) in place; False if maximal."""
    levels = d.levels
    for i, (t, o) in enumerate(edges):
        ins = levels[i + 1][t].in_edges
        if o < len(ins):
            edges[i] = (t, o + 1)
            src = ins[o]
            for lvl in range(i, 0, -1):
                edges[lvl - 1] = (src, 1)
                src = levels[lvl][src].in_edges[0]
            return True
    return False


def _pred_edges(d: Diagram, edges: list) -> bool:
    levels = d.levels
    for i, (t, o) in enumerate(edges):
        if o > 1:
            ins = levels[i + 1][t].in_edges
            edges[i] = (t, o - 1)
            src = ins[o - 2]
            for lvl in range(i, 0, -1):
                lin = levels[lvl][src].in_edges
                edges[lvl - 1] = (src, len(lin))
                src = lin[-1]
            return True
    return False


def step(x: PathSpec, direction: str, horizon: int, d: Diagram) -> PathSpec:
    """Apply T (``"succ"``) or its inverse (``"pred"``) using edges up to ``horizon``."""
    x = as_spec(x)
    edges = list(resolve(x, horizon, d).edges)
    if direction == "succ":
        ok = _succ_edges(d, edges)
    elif direction == "pred":
        ok = _pred_edges(d, edges)
    else:
        raise ValueError("direction must be 'succ' or 'pred'")
    if not ok:
        which = "maximal" if direction == "succ" else "minimal"
        raise HorizonExceeded(f"path is {which} through level {horizon}")
    return x.with_prefix(FinitePath(tuple(edges)) if len(x.prefix.edges) <= horizon
                         else FinitePath(tuple(edges) + x.prefix.edges[horizon:]))


def dot_index(x: PathSpec, n: int, d: Diagram) -> int:
    """Number of paths into ``v_n(x)`` preceding the level-n truncation of ``x``."""
    return d.rank(resolve(x, n, d))


@dataclass
class OrbitWindow:
    center: PathSpec
    lo: int
    hi: int
    level: int
    entries: list

    def __getitem__(self, m: int) -> FinitePath:
        if not self.lo <= m <= self.hi:
            raise IndexError(m)
        return self.entries[m - self.lo]

    def letters(self, d: Diagram) -> list:
        return [d.letter(p) for p in self.entries]


def orbit_window(x: PathSpec, level: int, lo: int, hi: int, d: Diagram,
                 horizon: int | None = None) -> OrbitWindow:
    """Truncations to ``level`` of T^m x for lo <= m <= hi, by stepping."""
    if lo > hi:
        raise ValueError("empty window")
    horizon = d.depth if horizon is None else horizon
    x = as_spec(x)
    base = list(resolve(x, horizon, d).edges)

    def walk(count, mover, what):
        cur = list(base)
        out = []
        for _ in range(count):
            if not mover(d, cur):
                raise HorizonExceeded(f"orbit leaves the horizon while stepping {what}")
            out.append(FinitePath(tuple(cur[:level])))
        return out

    back = walk(max(0, -lo), _pred_edges, "backward")
    fwd = walk(max(0, hi), _succ_edges, "forward")
    full = list(reversed(back)) + [FinitePath(tuple(base[:level]))] + fwd
    first = min(lo, 0)
    entries = full[lo - first: hi - first + 1]
    return OrbitWindow(x, lo, hi, level, entries)


def k_coding_window(x: PathSpec, k: int, window: tuple, d: Diagram,
                    horizon: int | None = None) -> list:
    """``[resolve(T^m x, k) for m in window]`` (inclusive bounds), by stepping."""
    lo, hi = window
    return orbit_window(x, k, lo, hi, d, horizon).entries


def valid_window(x: PathSpec, d: Diagram, horizon: int | None = None) -> tuple:
    """Largest inclusive range of m for which T^m x is computable at the horizon."""
    horizon = d.depth if horizon is None else horizon
    p = resolve(x, horizon, d)
    r = d.rank(p)
    return -r, d.dims[horizon][p.end_index] - r - 1


def min_spec(d: Diagram, v) -> PathSpec:
    return PathSpec(extremal_path_into(d, v, "min"))
