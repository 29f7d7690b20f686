"""Constructors for the explicit example diagrams, plus vertex splitting.

Vertex names follow ``v{level}_{column}`` (1-based column) for the GJ-type
families, so ``v4_3`` is v(4,3).  In every constructor the root is joined
by a single edge to each level-1 vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import (
    ROOT,
    ConstantOrdinal,
    Diagram,
    DiagramError,
    FinitePath,
    PathSpec,
    Vertex,
    VertexTrack,
    extremal_path_into,
)


def vname(level: int, col: int) -> str:
    return f"v{level}_{col}"


def _root_level(names: Sequence[str]) -> list:
    return [(name, [ROOT]) for name in names]


def _gj_levels(N: int, keep_order=lambda level, col: False) -> list:
    """Levels 1..N of the GJ diagram.

    Into v(n+1, t) the edge from v(n, m) has ordinal m, except that into
    v(n+1, 2j+1) (1 <= j <= n-1) the sources v(n, 2j) and v(n, 2j+1) swap
    places.  ``keep_order(level, col)`` disables the swap at that vertex.
    """
    if N < 2:
        raise DiagramError("the GJ family needs N >= 2")
    levels = [_root_level([vname(1, 1), vname(1, 2)])]
    for n in range(1, N):
        prev = [vname(n, m) for m in range(1, 2 * n + 1)]
        row = []
        for t in range(1, 2 * n + 3):
            srcs = list(prev)
            if t % 2 == 1 and 1 <= (t - 1) // 2 <= n - 1 and not keep_order(n + 1, t):
                j = (t - 1) // 2
                srcs[2 * j - 1], srcs[2 * j] = srcs[2 * j], srcs[2 * j - 1]
            row.append((vname(n + 1, t), srcs))
        levels.append(row)
    return levels


def gj(N: int) -> Diagram:
    return Diagram.from_sources(_gj_levels(N))


def dm2ww(N: int) -> Diagram:
    """GJ with the in-edges of v(j, 2i+1) put back in column order for even i, j >= 4."""
    if N < 5:
        raise DiagramError("dm2ww needs N >= 5")

    def keep(level, col):
        i = (col - 1) // 2
        return level >= 4 and i % 2 == 0 and 1 <= i < level - 1

    return Diagram.from_sources(_gj_levels(N, keep))


def mc_pair(d: Diagram, k: int) -> tuple:
    """The two sides of the Morse component MC(k) in a GJ-type diagram.

    Both paths run minimally to v(k, 1), take the ordinal-1 edge to v(k+1, 2k)
    or v(k+1, 2k+1) and then keep ordinal 2k forever, which keeps them in
    their columns.
    """
    if not 1 <= k < d.depth:
        raise DiagramError(f"MC({k}) needs depth > {k}")
    base = extremal_path_into(d, (k, d.index(k, vname(k, 1))), "min")
    out = []
    for col in (2 * k, 2 * k + 1):
        t = d.index(k + 1, vname(k + 1, col))
        o = d.levels[k + 1][t].in_edges.index(base.end_index) + 1
        out.append(PathSpec(base.extend(t, o), ConstantOrdinal(2 * k)))
    return tuple(out)


def mc_index(d: Diagram, level: int, idx: int) -> int | None:
    """i if the vertex lies in MC(i) (column 2i or 2i+1, level > i), else None."""
    name = d.levels[level][idx].name
    if not name.startswith("v"):
        return None
    col = int(name.rsplit("_", 1)[1].rstrip("'"))
    i = col // 2
    if i >= 1 and level > i and col in (2 * i, 2 * i + 1):
        return i
    return None


# ---------------------------------------------------------------------------
# Splitting


def split_vertex(d: Diagram, level: int, idx: int, t: int,
                 names: tuple | None = None) -> Diagram:
    """Replace a vertex by two adjacent vertices sharing its in-edges.

    The first copy takes in-edges 1..t, the second the rest; wherever the
    vertex was a source at the next level it becomes the adjacent pair.
    """
    v = d.levels[level][idx]
    if not 1 <= t < len(v.in_edges):
        raise DiagramError(f"split position {t} outside 1..{len(v.in_edges) - 1}")
    if level == 0:
        raise DiagramError("cannot split the root")
    n1, n2 = names or (v.name + "'", v.name + "''")
    levels = [list(row) for row in d.levels]
    row = levels[level]
    row[idx:idx + 1] = [Vertex(n1, v.in_edges[:t]), Vertex(n2, v.in_edges[t:])]
    if level < d.depth:
        new_next = []
        for w in levels[level + 1]:
            ins = []
            for s in w.in_edges:
                if s < idx:
                    ins.append(s)
                elif s == idx:
                    ins.extend((idx, idx + 1))
                else:
                    ins.append(s + 1)
            new_next.append(Vertex(w.name, tuple(ins)))
        levels[level + 1] = new_next
    return Diagram(tuple(tuple(r) for r in levels))


@dataclass
class SplitRecord:
    level: int
    name: str
    first: str
    second: str
    t: int


def gj_modified(N: int, with_log: bool = False):
    """GJ with every left MC vertex v(j, 2i), i < j, split after its first in-edge.

    The first in-edge of v(j, 2i) comes from v(j-1, 1), so the first copy has
    the same 1-basic block length as v(j-1, 1).
    """
    if N < 3:
        raise DiagramError("gj_modified needs N >= 3")
    d = gj(N)
    log = []
    for j in range(2, N + 1):
        for i in range(1, j):
            name = vname(j, 2 * i)
            idx = d.index(j, name)
            v = d.levels[j][idx]
            first_src = d.levels[j - 1][v.in_edges[0]].name
            assert first_src == vname(j - 1, 1), first_src
            d = split_vertex(d, j, idx, 1)
            log.append(SplitRecord(j, name, name + "'", name + "''", 1))
    return (d, log) if with_log else d


def map_path_through_splits(orig: Diagram, new: Diagram, path: FinitePath) -> FinitePath:
    """Send a horizon path of ``orig`` to the path of ``new`` with the same rank.

    Splitting keeps the order of paths, so a path of rank r into a split
    vertex w goes to rank r in w' or rank r - dim w' in w''.
    """
    n = path.length
    name = orig.levels[n][path.end_index].name
    r = orig.rank(path)
    try:
        return new.unrank((n, new.index(n, name)), r)
    except DiagramError:
        pass
    first = new.index(n, name + "'")
    dim1 = new.dims[n][first]
    if r < dim1:
        return new.unrank((n, first), r)
    return new.unrank((n, new.index(n, name + "''")), r - dim1)


# ---------------------------------------------------------------------------
# Odometers


def odometer_single(radices: Sequence[int]) -> Diagram:
    """One vertex per level; q_n parallel edges into level n+1 (q_1 from the root)."""
    if not radices or any(q < 1 for q in radices):
        raise DiagramError("radices must be positive")
    if any(q < 2 for q in radices[1:]):
        raise DiagramError("radices below level 1 must be >= 2")
    levels = []
    for n, q in enumerate(radices, start=1):
        src = ROOT if n == 1 else f"v{n - 1}"
        levels.append([(f"v{n}", [src] * q)])
    return Diagram.from_sources(levels)


def odometer_suo(counts: Sequence[int]) -> Diagram:
    """``counts[n-1]`` vertices at level n; complete connections, edge from v(n,i) labeled i."""
    if not counts or any(q < 2 for q in counts):
        raise DiagramError("vertex counts must be >= 2")
    levels = [_root_level([vname(1, i) for i in range(1, counts[0] + 1)])]
    for n in range(1, len(counts)):
        prev = [vname(n, i) for i in range(1, counts[n - 1] + 1)]
        levels.append([(vname(n + 1, i), list(prev)) for i in range(1, counts[n] + 1)])
    return Diagram.from_sources(levels)


def alternating(a: int, b: int, N: int) -> list:
    return [a if n % 2 else b for n in range(1, N + 1)]


def odometer(mode: str, values: Sequence[int] | None = None, N: int | None = None) -> Diagram:
    """``odometer("single", radices)`` or ``odometer("suo", counts)``.

    With only ``N`` given the values default to 2, 3, 2, 3, ...
    """
    if values is None:
        if N is None:
            raise DiagramError("give values or N")
        values = alternating(2, 3, N)
    elif N is not None:
        values = [values[i % len(values)] for i in range(N)]
    if mode == "single":
        return odometer_single(values)
    if mode == "suo":
        return odometer_suo(values)
    raise DiagramError(f"unknown odometer mode {mode!r}")


def suo_pair(d: Diagram, k: int) -> tuple:
    """Two paths minimal into v(k+1,1) and v(k+1,2) sharing the level-k prefix.

    x is the all-minimal path; x' keeps ordinal 2 after level k+1, which
    keeps it in the second column.
    """
    base = extremal_path_into(d, (k, 0), "min")
    x = PathSpec(base.extend(0, 1), ConstantOrdinal(1))
    x2 = PathSpec(base.extend(1, 1), ConstantOrdinal(2))
    return x, x2


# ---------------------------------------------------------------------------
# fig1 family: period two, width at most four


def _fig1_names(level: int) -> tuple:
    fixed = {1: ("u", "v"), 3: ("a", "b"), 5: ("A", "B"), 7: ("C", "D")}
    return fixed.get(level, (f"s{level}", f"t{level}"))


def fig1_family(N: int) -> Diagram:
    """Period-two diagram with bounded width.

    Odd levels have two vertices X, Y.  The following even level has
    X2 = (X, X), X3 = (X, X, X), XYY = (X, Y, Y), YYX = (Y, Y, X), and the
    next odd level has first vertex (X2, XYY, X3) and second (X3, YYX, X2).
    """
    if N < 3:
        raise DiagramError("fig1_family needs N >= 3")
    levels = [_root_level(_fig1_names(1))]
    for n in range(2, N + 1):
        if n % 2 == 0:
            X, Y = _fig1_names(n - 1)
            levels.append([
                (X + "2", [X, X]),
                (X + "3", [X, X, X]),
                (X + Y + Y, [X, Y, Y]),
                (Y + Y + X, [Y, Y, X]),
            ])
        else:
            X, Y = _fig1_names(n - 2)
            P, Q = _fig1_names(n)
            x2, x3, xyy, yyx = X + "2", X + "3", X + Y + Y, Y + Y + X
            levels.append([(P, [x2, xyy, x3]), (Q, [x3, yyx, x2])])
    return Diagram.from_sources(levels)


def fig1_marked_pair(d: Diagram) -> tuple:
    """The two marked paths: minimal into b at level 3, then ordinals 2, 2, 1, 2, 1, ...

    They enter the third and fourth vertices at level 4 and then follow
    the first/third (resp. second/fourth) columns.
    """
    b = extremal_path_into(d, (3, d.index(3, "b")), "min")
    x = PathSpec(b.extend(2, 2), VertexTrack("steps", "1/2,3/1"))
    x2 = PathSpec(b.extend(3, 2), VertexTrack("steps", "2/2,4/1"))
    return x, x2


# ---------------------------------------------------------------------------
# Kites


def kite_nondet(depth: int = 8) -> Diagram:
    """Width profile 3, 3, 2, 1, 1, ...; the tail levels have two parallel edges."""
    if depth < 4:
        raise DiagramError("kite_nondet needs depth >= 4")
    levels = [
        _root_level(["a", "b", "c"]),
        [("u", ["a", "b"]), ("v", ["a", "b"]), ("w", ["b", "c"])],
        [("A", ["u", "w"]), ("B", ["w", "v"])],
        [("AB", ["A", "B"])],
    ]
    prev = "AB"
    for n in range(5, depth + 1):
        levels.append([(f"z{n}", [prev, prev])])
        prev = f"z{n}"
    return Diagram.from_sources(levels)


def kite_pair(d: Diagram) -> tuple:
    """x = root.a.u.A..., x' = root.a.v.B... continued through the tail with ordinal 2."""
    a, u, v = d.index(1, "a"), d.index(2, "u"), d.index(2, "v")
    A, B, AB = d.index(3, "A"), d.index(3, "B"), d.index(4, "AB")
    x = PathSpec(FinitePath(((a, 1), (u, 1), (A, 1), (AB, 1))), ConstantOrdinal(2))
    x2 = PathSpec(FinitePath(((a, 1), (v, 1), (B, 2), (AB, 2))), ConstantOrdinal(2))
    return x, x2


def kite_deterministic(profile: Sequence[int], N: int) -> Diagram:
    """Deterministic kite: widths ``profile`` on levels 1.., then one vertex per level.

    Level-n vertex t_i takes the in-edges s_{(i+r) mod k} for r = 0..k-1
    (k = width of level n-1), a Latin arrangement in which every source
    labels its outgoing edges with distinct ordinals.  Needs a
    nonincreasing profile from level 1 on.
    """
    profile = list(profile)
    if not profile or any(w < 1 for w in profile):
        raise DiagramError("widths must be positive")
    for a, b in zip(profile, profile[1:]):
        if b > a:
            raise DiagramError(
                f"width profile increases ({a} -> {b}); some source would repeat an ordinal")
    widths = profile + [1] * max(0, N - len(profile))
    widths = widths[:N]
    levels = [_root_level([f"k1_{i}" for i in range(1, widths[0] + 1)])]
    for n in range(2, N + 1):
        k = widths[n - 2]
        prev = [f"k{n - 1}_{i}" for i in range(1, k + 1)]
        if widths[n - 1] == 1 and k == 1:
            levels.append([(f"k{n}_1", [prev[0], prev[0]])])
            continue
        row = []
        for i in range(widths[n - 1]):
            row.append((f"k{n}_{i + 1}", [prev[(i + r) % k] for r in range(k)]))
        levels.append(row)
    return Diagram.from_sources(levels)


# ---------------------------------------------------------------------------
# Parameter records and dispatch


@dataclass
class FamilyParams:
    family: str
    levels: int = 8
    radices: list = field(default_factory=list)
    counts: list = field(default_factory=list)
    profile: list = field(default_factory=list)

    def build(self) -> Diagram:
        f, N = self.family, self.levels
        if f == "gj":
            return gj(N)
        if f == "gj-mod":
            return gj_modified(N)
        if f == "dm2ww":
            return dm2ww(N)
        if f == "fig1":
            return fig1_family(N)
        if f == "kite":
            return kite_nondet(N)
        if f == "kite-det":
            return kite_deterministic(self.profile or [3, 2, 2, 1], N)
        if f == "odometer":
            return odometer("single", self.radices or None, None if self.radices else N)
        if f == "odometer-suo":
            return odometer("suo", self.counts or None, None if self.counts else N)
        raise DiagramError(f"unknown family {f!r}")


FAMILIES = ("gj", "gj-mod", "odometer", "odometer-suo", "fig1", "dm2ww", "kite", "kite-det")
