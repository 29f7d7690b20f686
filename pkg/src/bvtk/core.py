"""Ordered Bratteli diagrams truncated at a finite depth.

A diagram is stored level by level.  Level 0 holds the root; every vertex
at level n >= 1 keeps the ordered tuple of its sources at level n - 1, so
the position of a source in that tuple (1-based) is the ordinal label of
the edge.  Vertices are addressed by ``(level, index)`` pairs.

Paths into a vertex are ordered by the edge nearest the vertex first
(deepest difference decides), which is the order in which the Vershik
successor walks through them.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

ROOT = "root"

VRef = tuple  # (level, index)


class DiagramError(ValueError):
    pass


class DiagramParseError(DiagramError):
    def __init__(self, message: str, line: int | None = None,
                 col: int | None = None, pointer: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}, column {col}")
        if pointer is not None:
            where.append(f"at {pointer}")
        super().__init__(message + (f" ({'; '.join(where)})" if where else ""))
        self.line = line
        self.col = col
        self.pointer = pointer


class ResolutionError(DiagramError):
    """A suffix rule could not pick a unique edge."""


@dataclass(frozen=True)
class Vertex:
    name: str
    in_edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "in_edges", tuple(self.in_edges))


@dataclass(frozen=True)
class Diagram:
    levels: tuple

    def __post_init__(self):
        levels = tuple(tuple(level) for level in self.levels)
        object.__setattr__(self, "levels", levels)
        if len(levels) < 2:
            raise DiagramError("a diagram needs the root level and at least one more")
        if len(levels[0]) != 1 or levels[0][0].in_edges:
            raise DiagramError("level 0 must be a single root without in-edges")
        for n, level in enumerate(levels):
            if not level:
                raise DiagramError(f"level {n} is empty")
            names = [v.name for v in level]
            if len(set(names)) != len(names):
                raise DiagramError(f"duplicate vertex names at level {n}")
            if n == 0:
                continue
            width = len(levels[n - 1])
            for v in level:
                for s in v.in_edges:
                    if not isinstance(s, int) or not 0 <= s < width:
                        raise DiagramError(
                            f"vertex {v.name!r} at level {n} has in-edge from "
                            f"index {s!r}, outside level {n - 1}")

    # ---- construction -------------------------------------------------

    @classmethod
    def from_sources(cls, levels: Sequence[Sequence[tuple]]) -> "Diagram":
        """Build from ``[[(name, [source names...]), ...], ...]`` for levels 1..N.

        Sources of level-1 vertices are written as ``"root"``.
        """
        built = [(Vertex(ROOT),)]
        for n, level in enumerate(levels, start=1):
            prev = {v.name: i for i, v in enumerate(built[-1])}
            row = []
            for name, sources in level:
                try:
                    row.append(Vertex(name, tuple(prev[s] for s in sources)))
                except KeyError as exc:
                    raise DiagramError(
                        f"vertex {name!r} at level {n}: unknown source {exc.args[0]!r}"
                    ) from None
            built.append(tuple(row))
        return cls(tuple(built))

    # ---- basic queries ------------------------------------------------

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def width(self, n: int) -> int:
        return len(self.levels[n])

    @property
    def widths(self) -> list:
        return [len(level) for level in self.levels]

    def vertex(self, v: VRef) -> Vertex:
        return self.levels[v[0]][v[1]]

    def name(self, v: VRef) -> str:
        return self.levels[v[0]][v[1]].name

    def in_degree(self, v: VRef) -> int:
        return len(self.levels[v[0]][v[1]].in_edges)

    def source(self, v: VRef, ordinal: int) -> int:
        return self.levels[v[0]][v[1]].in_edges[ordinal - 1]

    @cached_property
    def scratch(self) -> dict:
        """Per-diagram memo space for derived tables (not part of equality)."""
        return {}

    @cached_property
    def _name_index(self) -> list:
        return [{v.name: i for i, v in enumerate(level)} for level in self.levels]

    def index(self, level: int, name: str) -> int:
        try:
            return self._name_index[level][name]
        except (KeyError, IndexError):
            raise DiagramError(f"no vertex {name!r} at level {level}") from None

    def find(self, name: str) -> VRef:
        """Locate a vertex by name; ``"n:name"`` pins the level."""
        if ":" in name:
            lvl, _, bare = name.partition(":")
            if lvl.isdigit():
                return (int(lvl), self.index(int(lvl), bare))
        hits = [(n, table[name]) for n, table in enumerate(self._name_index)
                if name in table]
        if not hits:
            raise DiagramError(f"no vertex named {name!r}")
        if len(hits) > 1:
            raise DiagramError(
                f"vertex name {name!r} occurs at levels {[h[0] for h in hits]}; "
                f"use 'level:name'")
        return hits[0]

    def vertices(self, n: int) -> list:
        return [(n, i) for i in range(len(self.levels[n]))]

    # ---- derived tables -----------------------------------------------

    @cached_property
    def dims(self) -> list:
        dims = [[1]]
        for n in range(1, len(self.levels)):
            prev = dims[-1]
            dims.append([sum(prev[s] for s in v.in_edges) for v in self.levels[n]])
        return dims

    @cached_property
    def cum(self) -> list:
        """``cum[n][i][o-1]``: paths into (n, i) entering by an ordinal below o."""
        out = [[[0]]]
        for n in range(1, len(self.levels)):
            prev = self.dims[n - 1]
            row = []
            for v in self.levels[n]:
                acc, sums = 0, []
                for s in v.in_edges:
                    sums.append(acc)
                    acc += prev[s]
                sums.append(acc)
                row.append(sums)
            out.append(row)
        return out

    @cached_property
    def out_edges(self) -> list:
        """``out_edges[n][s]``: list of (target index at n+1, ordinal) leaving (n, s)."""
        out = []
        for n in range(len(self.levels) - 1):
            row = [[] for _ in self.levels[n]]
            for t, v in enumerate(self.levels[n + 1]):
                for o, s in enumerate(v.in_edges, start=1):
                    row[s].append((t, o))
            out.append(row)
        return out

    @cached_property
    def letter_offsets(self) -> list:
        """Offsets turning (vertex at level k, rank) into an index of A_k."""
        offs = []
        for n in range(len(self.levels)):
            acc, row = 0, []
            for dim in self.dims[n]:
                row.append(acc)
                acc += dim
            offs.append(row)
        return offs

    def alphabet_size(self, k: int) -> int:
        return sum(self.dims[k])

    # ---- ranking ------------------------------------------------------

    def rank(self, path: "FinitePath") -> int:
        """Number of paths into ``path.end`` that precede ``path``."""
        r = 0
        cum = self.cum
        for i, (t, o) in enumerate(path.edges):
            r += cum[i + 1][t][o - 1]
        return r

    def unrank(self, v: VRef, r: int) -> "FinitePath":
        n, idx = v
        if not 0 <= r < self.dims[n][idx]:
            raise DiagramError(f"rank {r} outside [0, {self.dims[n][idx]}) at {self.name(v)}")
        edges = []
        while n > 0:
            sums = self.cum[n][idx]
            o = _bisect_right(sums, r)  # sums[o-1] <= r < sums[o]
            edges.append((idx, o))
            r -= sums[o - 1]
            idx = self.levels[n][idx].in_edges[o - 1]
            n -= 1
        return FinitePath(tuple(reversed(edges)))

    def letter(self, path: "FinitePath") -> int:
        """Index of ``path`` in the alphabet A_k, k = path length."""
        k = path.length
        return self.letter_offsets[k][path.end_index] + self.rank(path)

    def decode_letter(self, k: int, letter: int) -> "FinitePath":
        offs = self.letter_offsets[k]
        i = _bisect_right(offs, letter) - 1
        return self.unrank((k, i), letter - offs[i])

    def check_path(self, path: "FinitePath") -> None:
        prev = 0
        for i, (t, o) in enumerate(path.edges):
            level = i + 1
            if level > self.depth or not 0 <= t < self.width(level):
                raise DiagramError(f"edge {i} targets a missing vertex")
            v = self.levels[level][t]
            if not 1 <= o <= len(v.in_edges):
                raise DiagramError(f"ordinal {o} outside in-degree of {v.name}")
            if v.in_edges[o - 1] != prev:
                raise DiagramError(f"edge {i} does not start where edge {i - 1} ends")
            prev = t

    def min_path_into(self, v: VRef) -> "FinitePath":
        return extremal_path_into(self, v, "min")

    def describe_path(self, path: "FinitePath") -> str:
        return "·".join([ROOT] + [self.levels[i + 1][t].name for i, (t, _) in enumerate(path.edges)])


def _bisect_right(seq, x):
    lo, hi = 0, len(seq)
    while lo < hi:
        mid = (lo + hi) // 2
        if x < seq[mid]:
            hi = mid
        else:
            lo = mid + 1
    return lo


# ---------------------------------------------------------------------------
# Paths


@dataclass(frozen=True)
class FinitePath:
    """Edges from the root: ``edges[i] = (target index at level i+1, ordinal)``."""

    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(t), int(o)) for t, o in self.edges))

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def end_index(self) -> int:
        return self.edges[-1][0] if self.edges else 0

    @property
    def end(self) -> VRef:
        return (len(self.edges), self.end_index)

    @property
    def ordinals(self) -> tuple:
        return tuple(o for _, o in self.edges)

    @property
    def targets(self) -> tuple:
        return tuple(t for t, _ in self.edges)

    def vertex_at(self, level: int) -> int:
        return 0 if level == 0 else self.edges[level - 1][0]

    def truncate(self, n: int) -> "FinitePath":
        if n > len(self.edges):
            raise ValueError(f"cannot truncate a length-{self.length} path to {n}")
        return FinitePath(self.edges[:n])

    def extend(self, target: int, ordinal: int) -> "FinitePath":
        return FinitePath(self.edges + ((target, ordinal),))

    def is_minimal(self, upto: int | None = None) -> bool:
        upto = len(self.edges) if upto is None else upto
        return all(o == 1 for _, o in self.edges[:upto])

    def agreement(self, other: "FinitePath") -> int:
        """Number of leading edges shared with ``other``."""
        n = 0
        for a, b in zip(self.edges, other.edges):
            if a != b:
                break
            n += 1
        return n


# ---------------------------------------------------------------------------
# Suffix rules: finite descriptions of how an infinite path continues.


def _choose(d: Diagram, level: int, src: int, candidates: list, what: str):
    """Pick among candidate (target, ordinal) edges out of (level, src).

    A unique candidate is taken.  Several candidates are resolved only if one
    of them stays in the same column (target index == src); anything else is
    an error.
    """
    if len(candidates) == 1:
        return candidates[0]
    if not candidates:
        raise ResolutionError(
            f"{what}: no edge leaves {d.levels[level][src].name} at level {level}")
    same = [c for c in candidates if c[0] == src]
    if len(same) == 1:
        return same[0]
    raise ResolutionError(
        f"{what}: {len(candidates)} edges leave {d.levels[level][src].name} "
        f"at level {level}; no unique same-column choice")


@dataclass(frozen=True)
class ConstantOrdinal:
    ordinal: int

    def next_edge(self, d: Diagram, level: int, src: int, step: int):
        cands = [e for e in d.out_edges[level][src] if e[1] == self.ordinal]
        return _choose(d, level, src, cands, f"const:{self.ordinal}")

    def text(self) -> str:
        return f"const:{self.ordinal}"


@dataclass(frozen=True)
class PeriodicOrdinals:
    word: tuple

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if not self.word:
            raise ValueError("empty ordinal word")

    def next_edge(self, d: Diagram, level: int, src: int, step: int):
        o = self.word[step % len(self.word)]
        cands = [e for e in d.out_edges[level][src] if e[1] == o]
        return _choose(d, level, src, cands, f"per step {step} (ordinal {o})")

    def text(self) -> str:
        if all(o < 10 for o in self.word):
            return "per:" + "".join(map(str, self.word))
        return "per:" + ",".join(map(str, self.word))


@dataclass(frozen=True)
class AllMinimal:
    def next_edge(self, d: Diagram, level: int, src: int, step: int):
        cands = [e for e in d.out_edges[level][src] if e[1] == 1]
        return _choose(d, level, src, cands, "min")

    def text(self) -> str:
        return "min"


@dataclass(frozen=True)
class AllMaximal:
    def next_edge(self, d: Diagram, level: int, src: int, step: int):
        nxt = d.levels[level + 1]
        cands = [e for e in d.out_edges[level][src] if e[1] == len(nxt[e[0]].in_edges)]
        return _choose(d, level, src, cands, "max")

    def text(self) -> str:
        return "max"


@dataclass(frozen=True)
class VertexTrack:
    """Follow a column rule.

    ``col:i`` stays at the i-th vertex (1-based) of every later level;
    ``steps:c/o,c/o,...`` cycles through (column, ordinal) steps.
    """

    rule: str
    param: str

    def __post_init__(self):
        if self.rule == "col":
            int(self.param)
        elif self.rule == "steps":
            self.steps  # noqa: B018  (validates)
        else:
            raise ValueError(f"unknown track rule {self.rule!r}")

    @property
    def steps(self) -> tuple:
        out = []
        for item in self.param.split(","):
            c, _, o = item.partition("/")
            out.append((int(c), int(o) if o else None))
        return tuple(out)

    def next_edge(self, d: Diagram, level: int, src: int, step: int):
        if self.rule == "col":
            col, ordinal = int(self.param), None
        else:
            col, ordinal = self.steps[step % len(self.steps)]
        if not 1 <= col <= d.width(level + 1):
            raise ResolutionError(f"track: level {level + 1} has no column {col}")
        cands = [e for e in d.out_edges[level][src]
                 if e[0] == col - 1 and (ordinal is None or e[1] == ordinal)]
        if len(cands) != 1:
            raise ResolutionError(
                f"track:{self.rule}:{self.param}: {len(cands)} edges from "
                f"{d.levels[level][src].name} into column {col} at level {level + 1}")
        return cands[0]

    def text(self) -> str:
        return f"track:{self.rule}:{self.param}"


SuffixRule = Union[ConstantOrdinal, PeriodicOrdinals, AllMinimal, AllMaximal, VertexTrack]


def parse_rule(text: str) -> SuffixRule:
    text = text.strip()
    if text == "min":
        return AllMinimal()
    if text == "max":
        return AllMaximal()
    kind, _, arg = text.partition(":")
    if kind == "const":
        return ConstantOrdinal(int(arg))
    if kind == "per":
        word = arg.split(",") if "," in arg else list(arg)
        return PeriodicOrdinals(tuple(int(w) for w in word))
    if kind == "track":
        rule, _, param = arg.partition(":")
        return VertexTrack(rule, param)
    raise ValueError(f"unknown suffix rule {text!r}")


@dataclass(frozen=True)
class PathSpec:
    """A finite prefix plus a rule for extending it level by level.

    ``anchor`` is the level at which the rule's step counter starts; it stays
    fixed when the prefix grows (e.g. after applying the Vershik map), so
    periodic rules keep their phase.
    """

    prefix: FinitePath
    rule: SuffixRule | None = None
    anchor: int | None = None

    def __post_init__(self):
        if not isinstance(self.prefix, FinitePath):
            object.__setattr__(self, "prefix", FinitePath(self.prefix))
        if self.anchor is None:
            object.__setattr__(self, "anchor", self.prefix.length)

    def with_prefix(self, prefix: FinitePath) -> "PathSpec":
        return PathSpec(prefix, self.rule, self.anchor)

    def text(self, d: Diagram | None = None) -> str:
        if d is None:
            items = [str(o) for o in self.prefix.ordinals]
        else:
            items = [f"{d.levels[i + 1][t].name}:{o}" for i, (t, o) in enumerate(self.prefix.edges)]
        out = "prefix=" + ",".join(items)
        if self.rule is not None:
            out += ";suffix=" + self.rule.text()
        if self.anchor != self.prefix.length:
            out += f";anchor={self.anchor}"
        return out


def as_spec(x) -> PathSpec:
    return x if isinstance(x, PathSpec) else PathSpec(x)


def parse_pathspec(text: str, d: Diagram) -> PathSpec:
    """Parse ``prefix=o1,o2,...;suffix=<rule>``.

    Prefix items are either a bare ordinal (target chosen as for
    ``const``) or ``name:ordinal`` naming the target explicitly.
    """
    parts = {}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        key, sep, val = chunk.partition("=")
        if not sep:
            raise ValueError(f"bad PathSpec chunk {chunk!r}")
        parts[key.strip()] = val.strip()
    unknown = set(parts) - {"prefix", "suffix", "anchor"}
    if unknown:
        raise ValueError(f"unknown PathSpec keys {sorted(unknown)}")
    edges = []
    src = 0
    items = [s for s in parts.get("prefix", "").split(",") if s.strip()]
    for level, item in enumerate(items):
        if level >= d.depth:
            raise ValueError("prefix longer than the diagram")
        item = item.strip()
        if ":" in item:
            name, _, o = item.rpartition(":")
            t, o = d.index(level + 1, name), int(o)
            if d.levels[level + 1][t].in_edges[o - 1:o] != (src,):
                raise ResolutionError(f"edge {name}:{o} does not leave the current vertex")
        else:
            o = int(item)
            cands = [e for e in d.out_edges[level][src] if e[1] == o]
            t, o = _choose(d, level, src, cands, f"prefix item {level}")
        edges.append((t, o))
        src = t
    rule = parse_rule(parts["suffix"]) if "suffix" in parts else None
    anchor = int(parts["anchor"]) if "anchor" in parts else None
    return PathSpec(FinitePath(tuple(edges)), rule, anchor)


# ---------------------------------------------------------------------------
# Enumeration and counting


def paths_into(d: Diagram, v: VRef) -> list:
    """All root-to-``v`` paths in Vershik order (nearest edge decides)."""
    n, idx = v
    if n == 0:
        return [FinitePath()]
    out = []
    for o, s in enumerate(d.levels[n][idx].in_edges, start=1):
        for p in paths_into(d, (n - 1, s)):
            out.append(FinitePath(p.edges + ((idx, o),)))
    return out


def dimension(d: Diagram, v: VRef) -> int:
    return d.dims[v[0]][v[1]]


def extremal_path_into(d: Diagram, v: VRef, which: str = "min") -> FinitePath:
    if which not in ("min", "max"):
        raise ValueError("which must be 'min' or 'max'")
    n, idx = v
    edges = []
    while n > 0:
        ins = d.levels[n][idx].in_edges
        o = 1 if which == "min" else len(ins)
        edges.append((idx, o))
        idx = ins[o - 1]
        n -= 1
    return FinitePath(tuple(reversed(edges)))


def vertex_coding(d: Diagram, w: VRef, j: int) -> list:
    """Sources at level ``j`` of the ordered level-j-to-w path segments."""
    n, idx = w
    if not 0 <= j <= n:
        raise ValueError(f"level {j} is not above level {n}")
    word = [idx]
    for level in range(n, j, -1):
        row = d.levels[level]
        nxt = []
        for t in word:
            nxt.extend(row[t].in_edges)
        word = nxt
    return word


def reachable(d: Diagram, n: int, m: int) -> list:
    """``reach[s]``: set of level-m vertices reachable from (n, s)."""
    reach = [{s} for s in range(d.width(n))]
    for level in range(n, m):
        nxt = [set() for _ in reach]
        outs = d.out_edges[level]
        for s, cur in enumerate(reach):
            for u in cur:
                nxt[s].update(t for t, _ in outs[u])
        reach = nxt
    return reach


# ---------------------------------------------------------------------------
# Validation


@dataclass
class ValidationReport:
    properly_ordered_at_horizon: bool
    simplicity_evidence: bool
    width_profile: list
    violations: list = field(default_factory=list)
    positive_windows: list = field(default_factory=list)
    coalescence: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


def coalescence_level(d: Diagram, which: str, n: int | None = None) -> int:
    """Number of leading edges shared by the extremal paths into all level-n vertices."""
    n = d.depth if n is None else n
    paths = [extremal_path_into(d, (n, i), which) for i in range(d.width(n))]
    return min(paths[0].agreement(p) for p in paths)


def validate(d: Diagram) -> ValidationReport:
    """Structural checks plus proper order and simplicity at the horizon.

    Proper order at the horizon: the all-minimal paths into the level-N
    vertices share at least their first edge, i.e. they all extend one
    all-minimal path from the root (and likewise for all-maximal paths).
    Two extremal infinite paths would keep these paths apart at every
    horizon; a unique one makes the shared part grow with N.
    """
    violations = []
    for n in range(1, d.depth + 1):
        for v in d.levels[n]:
            if not v.in_edges:
                violations.append(f"level {n}: vertex {v.name!r} has no in-edges")
    for n in range(d.depth):
        outs = d.out_edges[n]
        for s, v in enumerate(d.levels[n]):
            if not outs[s]:
                violations.append(f"level {n}: vertex {v.name!r} has no out-edges")
    structural_ok = not violations

    proper = False
    coalescence = {}
    if structural_ok:
        for which in ("min", "max"):
            c = coalescence_level(d, which)
            coalescence[which] = c
            if c < 1:
                violations.append(
                    f"the all-{which}imal paths into level {d.depth} already differ "
                    f"at level 1 (more than one extremal path)")
        proper = all(c >= 1 for c in coalescence.values())

    windows = []
    simple = False
    if structural_ok:
        simple, windows = _positive_chain(d)
        if not simple:
            violations.append("no telescoping of the truncation with complete connections "
                              f"reaches level {max(d.depth - 1, 1)}")
    return ValidationReport(proper, simple, d.widths, violations, windows, coalescence)


def _positive_chain(d: Diagram) -> tuple:
    """Greedy chain of levels 1 = n0 < n1 < ... with complete connections.

    The truncation counts as simple when the chain reaches level N-1 (the
    last window may be cut off by the horizon).
    """
    N = d.depth
    if N <= 2:
        return True, [(0, N)]
    chain = [1]
    windows = []
    cur = 1
    while cur < N:
        nxt = None
        for m in range(cur + 1, N + 1):
            reach = reachable(d, cur, m)
            if all(len(r) == d.width(m) for r in reach):
                nxt = m
                break
        if nxt is None:
            break
        windows.append((cur, nxt))
        chain.append(nxt)
        cur = nxt
    return chain[-1] >= N - 1, windows


# ---------------------------------------------------------------------------
# Telescoping


def _check_levels(d: Diagram, levels: Sequence[int]) -> list:
    levels = list(levels)
    if not levels or levels[0] != 0:
        raise DiagramError("telescoping levels must start at 0")
    if any(b <= a for a, b in zip(levels, levels[1:])):
        raise DiagramError("telescoping levels must be strictly increasing")
    if levels[-1] > d.depth or len(levels) < 2:
        raise DiagramError(f"telescoping levels {levels} out of range for depth {d.depth}")
    return levels


def telescope(d: Diagram, levels: Sequence[int]) -> Diagram:
    """Keep only the listed levels, composing edges in path order."""
    levels = _check_levels(d, levels)
    out = [d.levels[0]]
    for prev, cur in zip(levels, levels[1:]):
        row = []
        for i, v in enumerate(d.levels[cur]):
            row.append(Vertex(v.name, tuple(vertex_coding(d, (cur, i), prev))))
        out.append(tuple(row))
    return Diagram(tuple(out))


def _segment_counts(d: Diagram, start: int, stop: int) -> list:
    """``counts[l][i]``: segments from level ``start`` into (start + l, i)."""
    counts = [[1] * d.width(start)]
    for level in range(start + 1, stop + 1):
        prev = counts[-1]
        counts.append([sum(prev[s] for s in v.in_edges) for v in d.levels[level]])
    return counts


def telescope_path(d: Diagram, levels: Sequence[int], path: FinitePath) -> FinitePath:
    """Image of ``path`` (long enough to reach the last kept level)."""
    levels = _check_levels(d, levels)
    if path.length < levels[-1]:
        levels = [n for n in levels if n <= path.length]
    edges = []
    for prev, cur in zip(levels, levels[1:]):
        counts = _segment_counts(d, prev, cur)
        r = 0
        for level in range(prev + 1, cur + 1):
            t, o = path.edges[level - 1]
            ins = d.levels[level][t].in_edges
            below = counts[level - 1 - prev]
            r += sum(below[s] for s in ins[:o - 1])
        edges.append((path.edges[cur - 1][0], r + 1))
    return FinitePath(tuple(edges))


def lift_path(d: Diagram, levels: Sequence[int], tpath: FinitePath) -> FinitePath:
    """Inverse of :func:`telescope_path` on paths to a kept level."""
    levels = _check_levels(d, levels)
    edges = []
    for l, (t, o) in enumerate(tpath.edges, start=1):
        prev, cur = levels[l - 1], levels[l]
        counts = _segment_counts(d, prev, cur)
        r = o - 1
        seg = []
        idx = t
        for level in range(cur, prev, -1):
            ins = d.levels[level][idx].in_edges
            below = counts[level - 1 - prev]
            for oo, s in enumerate(ins, start=1):
                if r < below[s]:
                    seg.append((idx, oo))
                    idx = s
                    break
                r -= below[s]
            else:
                raise DiagramError("segment index out of range")
        edges.extend(reversed(seg))
    return FinitePath(tuple(edges))


# ---------------------------------------------------------------------------
# JSON codec


def to_json_obj(d: Diagram) -> dict:
    levels = []
    for n in range(1, d.depth + 1):
        prev = d.levels[n - 1]
        levels.append({"vertices": [
            {"name": v.name, "in": [prev[s].name for s in v.in_edges]}
            for v in d.levels[n]]})
    return {"depth": d.depth, "levels": levels}


def dumps(d: Diagram, indent: int | None = 1) -> str:
    return json.dumps(to_json_obj(d), indent=indent)


def loads(text: str) -> Diagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramParseError(exc.msg, exc.lineno, exc.colno) from None
    return from_json_obj(obj)


def from_json_obj(obj) -> Diagram:
    def fail(msg, ptr):
        raise DiagramParseError(msg, pointer=ptr)

    if not isinstance(obj, dict):
        fail("top level must be an object", "/")
    levels = obj.get("levels")
    if not isinstance(levels, list) or not levels:
        fail("'levels' must be a non-empty list", "/levels")
    depth = obj.get("depth", len(levels))
    if depth != len(levels):
        fail(f"depth {depth} does not match {len(levels)} levels", "/depth")
    prev_names = {ROOT: 0}
    built = [(Vertex(ROOT),)]
    for n, level in enumerate(levels, start=1):
        ptr = f"/levels/{n - 1}"
        if not isinstance(level, dict) or not isinstance(level.get("vertices"), list):
            fail("level must be an object with a 'vertices' list", ptr)
        row, names = [], {}
        for i, v in enumerate(level["vertices"]):
            vptr = f"{ptr}/vertices/{i}"
            if not isinstance(v, dict) or not isinstance(v.get("name"), str):
                fail("vertex needs a string 'name'", vptr)
            if v["name"] in names:
                fail(f"duplicate vertex name {v['name']!r}", vptr)
            ins = v.get("in", [])
            if not isinstance(ins, list):
                fail("'in' must be a list", vptr + "/in")
            srcs = []
            for e, s in enumerate(ins):
                if s not in prev_names:
                    fail(f"source {s!r} is not a vertex of level {n - 1}", f"{vptr}/in/{e}")
                srcs.append(prev_names[s])
            names[v["name"]] = i
            row.append(Vertex(v["name"], tuple(srcs)))
        built.append(tuple(row))
        prev_names = names
    try:
        return Diagram(tuple(built))
    except DiagramError as exc:
        raise DiagramParseError(str(exc), pointer="/levels") from None


def load(path) -> Diagram:
    with open(path) as fh:
        return loads(fh.read())


def dump(d: Diagram, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(d))
        fh.write("\n")


def iter_paths(d: Diagram, n: int) -> Iterator[FinitePath]:
    """Every path from the root to level ``n``."""
    for i in range(d.width(n)):
        yield from paths_into(d, (n, i))


def widths_of(levels: Iterable) -> list:
    return [len(level) for level in levels]
