"""Comparing the orbits of two paths: shared codings, depth, cuts, k-equivalence.

All orbit facts are exact inside a window of times ``m`` (inclusive bounds)
for which both orbits stay computable below the horizon level.  For a path
x ending at the horizon vertex w with rank r, T^m x is the (r+m)-th path
into w, so codings over a window are slices of basic blocks at w.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .blocks import block_starts, first_mismatch, is_block_start, k_equivalent_vertices
from .core import Diagram, PathSpec, as_spec
from .dynamics import HorizonExceeded, resolve


@dataclass
class NoWitness:
    """A negative or inconclusive result, with the bounds it was checked under."""

    reason: str
    bounds: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {"kind": "NoWitness", "reason": self.reason, "bounds": self.bounds}


@dataclass
class PairEvidence:
    x: PathSpec
    x2: PathSpec
    kind: str
    data: dict

    def to_dict(self, d: Diagram | None = None) -> dict:
        return {"x": self.x.text(d), "x2": self.x2.text(d), "kind": self.kind, **self.data}

    def to_json(self, d: Diagram | None = None) -> str:
        return json.dumps(self.to_dict(d), indent=1)


@dataclass(frozen=True)
class _Anchor:
    level: int
    vertex: int
    rank: int
    dim: int

    @property
    def window(self) -> tuple:
        return -self.rank, self.dim - self.rank - 1


def _anchor(x, d: Diagram, horizon: int | None) -> _Anchor:
    N = d.depth if horizon is None else horizon
    p = resolve(x, N, d)
    return _Anchor(N, p.end_index, d.rank(p), d.dims[N][p.end_index])


def common_window(x, x2, d: Diagram, horizon: int | None = None) -> tuple:
    """Largest inclusive window of times valid for both orbits."""
    a, b = _anchor(x, d, horizon), _anchor(x2, d, horizon)
    lo = max(a.window[0], b.window[0])
    hi = min(a.window[1], b.window[1])
    return lo, hi


def _check_window(window, a: _Anchor, b: _Anchor) -> tuple:
    if window is None:
        return max(a.window[0], b.window[0]), min(a.window[1], b.window[1])
    lo, hi = window
    if lo > hi:
        raise ValueError("empty window")
    for anc in (a, b):
        if lo < anc.window[0] or hi > anc.window[1]:
            raise HorizonExceeded(
                f"window [{lo}, {hi}] leaves the horizon (valid range {anc.window})")
    return lo, hi


def _mismatch(d: Diagram, k: int, a: _Anchor, b: _Anchor, lo: int, hi: int):
    """First m in [lo, hi] where the k-truncations of the orbits differ."""
    length = hi - lo + 1
    sa = [(a.level, a.vertex, a.rank + lo, length)]
    sb = [(b.level, b.vertex, b.rank + lo, length)]
    pos = first_mismatch(d, k, sa, sb)
    return None if pos is None else lo + pos


def same_k_coding_window(x, x2, k: int, window, d: Diagram,
                         horizon: int | None = None) -> bool:
    """Do T^m x and T^m x' agree to level k for every m in the window?"""
    a, b = _anchor(x, d, horizon), _anchor(x2, d, horizon)
    lo, hi = _check_window(window, a, b)
    return _mismatch(d, k, a, b, lo, hi) is None


def first_difference(x, x2, k: int, window, d: Diagram, horizon: int | None = None):
    a, b = _anchor(x, d, horizon), _anchor(x2, d, horizon)
    lo, hi = _check_window(window, a, b)
    return _mismatch(d, k, a, b, lo, hi)


def window_depth(x, x2, window, d: Diagram, horizon: int | None = None) -> int:
    """Largest k with equal k-codings over the window (capped at the horizon)."""
    a, b = _anchor(x, d, horizon), _anchor(x2, d, horizon)
    lo, hi = _check_window(window, a, b)
    good, bad = 0, a.level + 1
    while good + 1 < bad:
        mid = (good + bad) // 2
        if _mismatch(d, mid, a, b, lo, hi) is None:
            good = mid
        else:
            bad = mid
    return good


def depth_witness(x, x2, K: int, window, d: Diagram, horizon: int | None = None):
    """Depth of the pair over the window, with a time where the (k+1)-codings differ."""
    x, x2 = as_spec(x), as_spec(x2)
    a, b = _anchor(x, d, horizon), _anchor(x2, d, horizon)
    lo, hi = _check_window(window, a, b)
    bounds = {"window": [lo, hi], "horizon": a.level, "K": K}
    if resolve(x, a.level, d) == resolve(x2, b.level, d):
        return NoWitness("pair not distinct within horizon", bounds)
    k = window_depth(x, x2, (lo, hi), d, a.level)
    if k > K:
        return NoWitness(f"same {K + 1}-coding over the window (depth > {K})", bounds)
    m = _mismatch(d, k + 1, a, b, lo, hi)
    if k == 0:
        return NoWitness(f"1-codings differ at m={m}", {**bounds, "difference_time": m})
    return PairEvidence(x, x2, "DepthWitness",
                        {"k": k, "difference_time": m, "window": [lo, hi],
                         "horizon": a.level})


def find_cut(x, x2, j: int, window, d: Diagram, horizon: int | None = None):
    """A time m in the window at which both orbit points are minimal into level j."""
    a, b = _anchor(x, d, horizon), _anchor(x2, d, horizon)
    lo, hi = _check_window(window, a, b)
    dx = d.rank(resolve(x, j, d))
    dy = d.rank(resolve(x2, j, d))
    if dx == dy and lo <= -dx <= hi:
        return -dx
    va, vb = (a.level, a.vertex), (b.level, b.vertex)
    for p in block_starts(d, va, j, a.rank + lo, a.rank + hi + 1):
        m = p - a.rank
        if is_block_start(d, vb, j, b.rank + m):
            return m
    return None


def cut_vertices(x, x2, j: int, m: int, d: Diagram, horizon: int | None = None) -> tuple:
    """Names of the level-j vertices of T^m x and T^m x' (used to annotate cuts)."""
    from .blocks import locate

    out = []
    for anc in (_anchor(x, d, horizon), _anchor(x2, d, horizon)):
        u, _ = locate(d, (anc.level, anc.vertex), anc.rank + m, j)
        out.append(d.levels[j][u].name)
    return tuple(out)


def long_cuts_report(x, x2, k: int, j_max: int, window, d: Diagram,
                     horizon: int | None = None) -> PairEvidence:
    x, x2 = as_spec(x), as_spec(x2)
    a, b = _anchor(x, d, horizon), _anchor(x2, d, horizon)
    lo, hi = _check_window(window, a, b)
    times, gaps, verts = {}, [], {}
    for j in range(k + 1, j_max + 1):
        m = find_cut(x, x2, j, (lo, hi), d, horizon)
        if m is None:
            gaps.append(j)
        else:
            times[j] = m
            verts[j] = cut_vertices(x, x2, j, m, d, horizon)
    return PairEvidence(x, x2, "LongCuts",
                        {"k": k, "j_range": [k + 1, j_max], "cut_times": times,
                         "cut_vertices": verts, "gaps": gaps, "window": [lo, hi],
                         "horizon": a.level})


def k_equivalent_up_to(x, x2, k: int, N: int, d: Diagram) -> bool:
    """Agree to level k and carry equal dotted k-basic blocks at every level in (k, N]."""
    p, q = resolve(x, N, d), resolve(x2, N, d)
    if p.edges[:k] != q.edges[:k]:
        return False
    for n in range(k + 1, N + 1):
        pn, qn = p.truncate(n), q.truncate(n)
        if d.rank(pn) != d.rank(qn):
            return False
        if not k_equivalent_vertices(d, pn.end, qn.end, k):
            return False
    return True


def first_k_equivalence_failure(x, x2, k: int, N: int, d: Diagram):
    """First level in (k, N] where the dotted blocks differ, with the reason."""
    p, q = resolve(x, N, d), resolve(x2, N, d)
    if p.edges[:k] != q.edges[:k]:
        return (k, "prefixes differ")
    for n in range(k + 1, N + 1):
        pn, qn = p.truncate(n), q.truncate(n)
        if not k_equivalent_vertices(d, pn.end, qn.end, k):
            return (n, "blocks differ")
        if d.rank(pn) != d.rank(qn):
            return (n, "dots differ")
    return None
