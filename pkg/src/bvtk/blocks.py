"""Basic blocks, codings by vertices and related tests.

A basic block ``B_k(v)`` lists the paths into ``v`` truncated to level k.
Letters of the alphabet A_k (paths from the root to level k) are stored as
integers: ``offset[w] + rank`` for a path of rank ``rank`` into the level-k
vertex ``w``.

Basic blocks grow factorially in the GJ family, so most routines here work
on the implicit tree ("rope") of in-edges instead of materialised words.
A piece ``(n, u, off, length)`` stands for ``B_k(u)[off:off + length]``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Diagram, DiagramError, VRef, vertex_coding
from .dynamics import dot_index, resolve

_CACHE_LIMIT = 4096


@dataclass(frozen=True)
class Block:
    """A word over A_k (``tag == ("A", k)``) or over level-j vertices (``("V", j)``)."""

    tag: tuple
    letters: tuple

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def level(self) -> int:
        return self.tag[1]

    def names(self, d: Diagram) -> list:
        kind, level = self.tag
        if kind == "V":
            return [d.levels[level][i].name for i in self.letters]
        return [letter_name(d, level, a) for a in self.letters]


@dataclass(frozen=True)
class DottedBlock:
    block: Block
    dot: int

    def __post_init__(self):
        if not 0 <= self.dot <= len(self.block):
            raise ValueError("dot outside the block")


def letter_name(d: Diagram, k: int, letter: int) -> str:
    """Readable name of an A_k letter: vertex names, with ordinals where edges are parallel."""
    p = d.decode_letter(k, letter)
    parts = []
    prev = 0
    for i, (t, o) in enumerate(p.edges):
        v = d.levels[i + 1][t]
        part = v.name
        if v.in_edges.count(prev) > 1:
            part += f"#{o}"
        parts.append(part)
        prev = t
    return ".".join(parts) if parts else "root"


# ---------------------------------------------------------------------------
# Rope machinery


def _children(d: Diagram, piece: tuple) -> list:
    """Sub-pieces of ``piece`` one level up, in order."""
    n, u, off, ln = piece
    end = off + ln
    out = []
    sums = d.cum[n][u]
    ins = d.levels[n][u].in_edges
    for o, s in enumerate(ins):
        lo, hi = sums[o], sums[o + 1]
        if hi <= off:
            continue
        if lo >= end:
            break
        a, b = max(lo, off), min(hi, end)
        out.append((n - 1, s, a - lo, b - a))
    return out


def _push_children(d, stack, piece):
    stack.extend(reversed(_children(d, piece)))


def first_mismatch(d: Diagram, k: int, a: list, b: list):
    """Position of the first difference between two rope streams over A_k.

    ``a`` and ``b`` are stacks of pieces (top at the end).  Returns None when
    the streams are equal (and equally long); a shorter stream counts as a
    mismatch where it ends.
    """
    dims = d.dims
    pos = 0
    pa = pb = None
    while True:
        if pa is None and a:
            pa = a.pop()
        if pb is None and b:
            pb = b.pop()
        if pa is None or pb is None:
            return None if pa is None and pb is None else pos
        na, ua, oa, la = pa
        nb, ub, ob, lb = pb
        if la == 0:
            pa = None
            continue
        if lb == 0:
            pb = None
            continue
        if na == k and nb == k:
            if ua != ub or oa != ob:
                return pos
            m = min(la, lb)
            pos += m
            pa = (na, ua, oa + m, la - m) if la > m else None
            pb = (nb, ub, ob + m, lb - m) if lb > m else None
            continue
        if (na == nb and la == lb and oa == 0 and ob == 0 and la == dims[na][ua]
                and lb == dims[nb][ub]):
            if ua == ub or (na > k and _classes(d, k, na)[ua] == _classes(d, k, nb)[ub]):
                pos += la
                pa = pb = None
                continue
        if na > nb or (na == nb and la >= lb):
            _push_children(d, a, pa)
            pa = None
        else:
            _push_children(d, b, pb)
            pb = None


def _classes(d: Diagram, k: int, n: int) -> list:
    """Class ids of level-n vertices: equal ids iff equal k-basic blocks."""
    memo = d.scratch.setdefault(("classes", k), {})
    if n in memo:
        return memo[n]
    if n <= k:
        memo[n] = list(range(d.width(n)))
        return memo[n]
    below = _classes(d, k, n - 1)
    dims = d.dims[n]
    ids: list = []
    reps: list = []  # (vertex, source-class signature)
    for u, v in enumerate(d.levels[n]):
        sig = tuple(below[s] for s in v.in_edges)
        found = None
        for cid, (r, rsig) in enumerate(reps):
            if dims[r] != dims[u]:
                continue
            if rsig == sig:
                found = cid
                break
            sa = list(reversed(_children(d, (n, u, 0, dims[u]))))
            sb = list(reversed(_children(d, (n, r, 0, dims[r]))))
            if first_mismatch(d, k, sa, sb) is None:
                found = cid
                break
        if found is None:
            found = len(reps)
            reps.append((u, sig))
        ids.append(found)
    memo[n] = ids
    return ids


def k_equivalent_vertices(d: Diagram, v: VRef, w: VRef, k: int) -> bool:
    """True iff the k-basic blocks at ``v`` and ``w`` coincide."""
    if v[0] != w[0]:
        raise DiagramError("vertices must be at the same level")
    if not 0 <= k <= v[0]:
        raise DiagramError(f"k={k} must not exceed the level {v[0]}")
    if v == w:
        return True
    cls = _classes(d, k, v[0])
    return cls[v[1]] == cls[w[1]]


def _full_block(d: Diagram, k: int, n: int, u: int) -> list:
    memo = d.scratch.setdefault(("block", k), {})
    key = (n, u)
    if key not in memo:
        if n == k:
            base = d.letter_offsets[k][u]
            out = list(range(base, base + d.dims[k][u]))
        else:
            out = []
            for s in d.levels[n][u].in_edges:
                out.extend(_full_block(d, k, n - 1, s))
        memo[key] = out
    return memo[key]


def block_slice(d: Diagram, v: VRef, k: int, lo: int, hi: int) -> list:
    """``B_k(v)[lo:hi]`` as a list of A_k letters."""
    n, u = v
    if k > n:
        raise DiagramError(f"k={k} exceeds the level {n}")
    lo, hi = max(lo, 0), min(hi, d.dims[n][u])
    out: list = []
    if lo >= hi:
        return out
    stack = [(n, u, lo, hi - lo)]
    dims = d.dims
    while stack:
        pn, pu, off, ln = stack.pop()
        if pn == k:
            base = d.letter_offsets[k][pu] + off
            out.extend(range(base, base + ln))
        elif ln == dims[pn][pu] and dims[pn][pu] <= _CACHE_LIMIT:
            out.extend(_full_block(d, k, pn, pu))
        else:
            _push_children(d, stack, (pn, pu, off, ln))
    return out


def locate(d: Diagram, v: VRef, p: int, j: int) -> tuple:
    """Level-j vertex and rank of the truncation of the p-th path into ``v``."""
    n, u = v
    while n > j:
        sums = d.cum[n][u]
        ins = d.levels[n][u].in_edges
        lo, hi = 0, len(ins)
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if sums[mid] <= p:
                lo = mid
            else:
                hi = mid
        p -= sums[lo]
        u = ins[lo]
        n -= 1
    return u, p


def is_block_start(d: Diagram, v: VRef, j: int, p: int) -> bool:
    """Is the p-th path into ``v`` minimal into level j?"""
    return locate(d, v, p, j)[1] == 0


def block_starts(d: Diagram, v: VRef, j: int, lo: int, hi: int):
    """Increasing positions p in [lo, hi) whose path is minimal into level j."""
    n, u = v
    lo, hi = max(lo, 0), min(hi, d.dims[n][u])
    if lo >= hi:
        return
    stack = [(n, u, lo, hi - lo, lo)]
    while stack:
        pn, pu, off, ln, base = stack.pop()
        if pn == j:
            if off == 0:
                yield base
            continue
        kids = _children(d, (pn, pu, off, ln))
        pos = base
        pending = []
        for kid in kids:
            pending.append(kid + (pos,))
            pos += kid[3]
        stack.extend(reversed(pending))


# ---------------------------------------------------------------------------
# Public block operations


def basic_block(d: Diagram, v: VRef, k: int) -> Block:
    n, u = v
    return Block(("A", k), tuple(block_slice(d, v, k, 0, d.dims[n][u])))


def coding_by_vertices(d: Diagram, w: VRef, j: int) -> Block:
    return Block(("V", j), tuple(vertex_coding(d, w, j)))


def factor_block(d: Diagram, b: Block, i: int) -> Block:
    """Letterwise truncation of a word over A_k to A_i."""
    kind, k = b.tag
    if kind != "A":
        raise DiagramError("factor maps act on path-letter blocks")
    if i > k:
        raise DiagramError(f"cannot factor A_{k} onto A_{i}")
    if i == k:
        return b
    table = {}
    out = []
    for a in b.letters:
        if a not in table:
            table[a] = d.letter(d.decode_letter(k, a).truncate(i))
        out.append(table[a])
    return Block(("A", i), tuple(out))


def dotted_basic_block(x, n: int, k: int, d: Diagram) -> DottedBlock:
    p = resolve(x, n, d)
    return DottedBlock(basic_block(d, p.end, k), dot_index(x, n, d))


@dataclass(frozen=True)
class UniformOrder:
    period: Block
    powers: dict
    source_root: tuple


def shortest_root(word) -> int:
    """Length of the shortest P with word = P^m (the word length if primitive)."""
    n = len(word)
    if n == 0:
        return 0
    fail = [0] * n
    kk = 0
    for i in range(1, n):
        while kk and word[i] != word[kk]:
            kk = fail[kk - 1]
        if word[i] == word[kk]:
            kk += 1
        fail[i] = kk
    p = n - fail[-1]
    return p if n % p == 0 else n


def uniform_order_test(d: Diagram, n: int) -> UniformOrder | None:
    """Common shortest block P with every (n-1)-basic block at level n a power of P.

    B_{n-1}(v) is the in-edge word of v with each source replaced by its
    own block; those blocks use disjoint letters, so the root of the in-edge
    word determines the root of the basic block.
    """
    if not 1 <= n <= d.depth:
        raise DiagramError(f"level {n} out of range")
    roots = set()
    powers = {}
    for v in d.levels[n]:
        p = shortest_root(v.in_edges)
        roots.add(v.in_edges[:p])
        powers[v.name] = len(v.in_edges) // p
    if len(roots) != 1:
        return None
    root = roots.pop()
    letters = []
    for s in root:
        letters.extend(block_slice(d, (n - 1, s), n - 1, 0, d.dims[n - 1][s]))
    return UniformOrder(Block(("A", n - 1), tuple(letters)), powers, root)


@dataclass(frozen=True)
class DeterminismResult:
    deterministic: bool
    violation: str | None = None
    witness: tuple | None = None  # (level, vertex name, ordinal, target names)

    def __bool__(self) -> bool:
        return self.deterministic


def deterministic_test(d: Diagram) -> DeterminismResult:
    """Do the edges leaving each non-root vertex carry distinct ordinals?"""
    for n in range(1, d.depth):
        for s, v in enumerate(d.levels[n]):
            seen = {}
            for t, o in d.out_edges[n][s]:
                if o in seen:
                    names = (d.levels[n + 1][seen[o]].name, d.levels[n + 1][t].name)
                    msg = (f"vertex {v.name!r} at level {n} has two outgoing edges "
                           f"labeled {o} (to {names[0]!r} and {names[1]!r})")
                    return DeterminismResult(False, msg, (n, v.name, o, names))
                seen[o] = t
    return DeterminismResult(True)
