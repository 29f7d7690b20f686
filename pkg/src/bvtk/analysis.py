"""Bounded evidence for the timing classes, plus a few exact certificates.

Nothing here proves a statement about infinite paths.  Existential facts
come with explicit witnesses; universal facts are reported as "consistent
within bounds" together with the bounds that were searched.
"""
from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import asdict, dataclass, field

from .blocks import (
    _classes,
    block_slice,
    deterministic_test,
    locate,
    uniform_order_test,
)
from .core import (
    AllMaximal,
    AllMinimal,
    ConstantOrdinal,
    Diagram,
    DiagramError,
    FinitePath,
    PathSpec,
    ResolutionError,
    Vertex,
    VertexTrack,
    extremal_path_into,
    iter_paths,
    lift_path,
    parse_rule,
    telescope,
    telescope_path,
    validate,
)
from .dynamics import resolve
from .families import mc_index
from .pairs import (
    HorizonExceeded,
    _anchor,
    _mismatch,
    common_window,
    find_cut,
    k_equivalent_up_to,
    same_k_coding_window,
    window_depth,
)

# ---------------------------------------------------------------------------
# Candidate paths


def rule_set(d: Diagram, kinds=("min", "max", "const", "track")) -> list:
    """Suffix rules used for candidate paths."""
    rules = []
    for kind in kinds:
        if kind == "min":
            rules.append(AllMinimal())
        elif kind == "max":
            rules.append(AllMaximal())
        elif kind == "const":
            maxdeg = max(len(v.in_edges) for level in d.levels[1:] for v in level)
            rules.extend(ConstantOrdinal(c) for c in range(1, maxdeg + 1))
        elif kind == "track":
            rules.extend(VertexTrack("col", str(i)) for i in range(1, max(d.widths) + 1))
        else:
            rules.append(parse_rule(kind))
    return rules


@dataclass
class CandidateSet:
    specs: list
    paths: list  # resolved to the horizon
    generated: int
    unresolvable: int
    duplicates: int
    horizon: int

    def summary(self) -> dict:
        return {"generated": self.generated, "distinct": len(self.specs),
                "unresolvable": self.unresolvable, "duplicates": self.duplicates,
                "horizon": self.horizon}


def candidate_specs(d: Diagram, prefix_len: int, rules=None,
                    horizon: int | None = None) -> CandidateSet:
    """Every path to level ``prefix_len`` crossed with every rule, deduplicated at the horizon."""
    N = d.depth if horizon is None else horizon
    if not 0 <= prefix_len <= N:
        raise DiagramError(f"prefix length {prefix_len} outside 0..{N}")
    if rules is None:
        rules = rule_set(d)
    elif rules and isinstance(rules[0], str):
        rules = rule_set(d, rules)
    seen = {}
    specs, paths = [], []
    generated = unresolvable = 0
    for prefix in iter_paths(d, prefix_len):
        for rule in rules:
            generated += 1
            spec = PathSpec(prefix, rule)
            try:
                p = resolve(spec, N, d)
            except ResolutionError:
                unresolvable += 1
                continue
            if p in seen:
                continue
            seen[p] = len(specs)
            specs.append(spec)
            paths.append(p)
    return CandidateSet(specs, paths, generated, unresolvable,
                        generated - unresolvable - len(specs), N)


# ---------------------------------------------------------------------------
# Pairs grouped by depth


@dataclass
class PairRecord:
    a: int
    b: int
    depth: int
    difference_time: int
    window: tuple
    cuts: dict = field(default_factory=dict)  # j -> time or None


def _window_ok(anchor, window) -> bool:
    lo, hi = window
    return anchor.window[0] <= lo and hi <= anchor.window[1]


def depth_pairs(d: Diagram, cands: CandidateSet, K: int, window=None,
                max_pairs: int | None = None, min_window: int = 1,
                only: tuple | None = None) -> dict:
    """Pairs of candidates by exact window depth k = 1..K.

    With a fixed ``window`` the candidates are bucketed by their coding over
    that window (candidates whose orbit leaves the horizon inside it are
    dropped and counted).  Without one, every pair is compared over its own
    common window, and pairs whose common window is shorter than
    ``min_window`` are skipped and counted as excluded.  Returns
    ``{"pairs": {k: [PairRecord]}, "total": {k: n}, "excluded": n}``.
    In fixed-window mode, ``only`` restricts verification to those depths;
    the other depths report unverified bucket counts in ``total``.
    """
    N = cands.horizon
    anchors = [_anchor(s, d, N) for s in cands.specs]
    out = {k: [] for k in range(1, K + 1)}
    total = {k: 0 for k in range(1, K + 1)}
    if window is None:
        n = len(anchors)
        short = 0
        for i in range(n):
            for j in range(i + 1, n):
                a, b = anchors[i], anchors[j]
                lo = max(a.window[0], b.window[0])
                hi = min(a.window[1], b.window[1])
                if hi - lo + 1 < min_window:
                    short += 1
                    continue
                k = _depth(d, a, b, lo, hi)
                if 1 <= k <= K:
                    total[k] += 1
                    if max_pairs is None or len(out[k]) < max_pairs:
                        m = _mismatch(d, k + 1, a, b, lo, hi)
                        out[k].append(PairRecord(i, j, k, m, (lo, hi)))
        return {"pairs": out, "total": total, "excluded": short}

    lo, hi = window
    keep = [i for i, a in enumerate(anchors) if _window_ok(a, window)]
    excluded = len(anchors) - len(keep)
    keys = {}
    for i in keep:
        a = anchors[i]
        keys[i] = [hash(tuple(block_slice(d, (a.level, a.vertex), k, a.rank + lo, a.rank + hi + 1)))
                   for k in range(1, K + 2)]
    dots = {i: [d.rank(cands.paths[i].truncate(n)) for n in range(N + 1)] for i in keep}
    groups = {(): keep}
    for k in range(1, K + 1):
        new_groups = defaultdict(list)
        cand_pairs = []
        for gkey, members in groups.items():
            sub = defaultdict(list)
            for i in members:
                sub[keys[i][k - 1]].append(i)
            for key, members2 in sub.items():
                if len(members2) > 1:
                    new_groups[gkey + (key,)] = members2
        for members in new_groups.values():
            parts = defaultdict(list)
            for i in members:
                parts[keys[i][k]].append(i)
            parts = list(parts.values())
            for x in range(len(parts)):
                for y in range(x + 1, len(parts)):
                    cand_pairs.extend((min(i, j), max(i, j)) for i in parts[x] for j in parts[y])
        total[k] = len(cand_pairs)

        def priority(pair):
            i, j = pair
            same = sum(dots[i][n] == dots[j][n] for n in range(k + 1, N + 1))
            return (-same, i, j)

        if only is not None and k not in only:
            groups = new_groups
            continue
        cand_pairs.sort(key=priority)
        for i, j in cand_pairs:
            if max_pairs is not None and len(out[k]) >= max_pairs:
                break
            a, b = anchors[i], anchors[j]
            if _mismatch(d, k, a, b, lo, hi) is not None:
                continue  # hash collision
            m = _mismatch(d, k + 1, a, b, lo, hi)
            if m is not None:
                out[k].append(PairRecord(i, j, k, m, (lo, hi)))
        groups = new_groups
    return {"pairs": out, "total": total, "excluded": excluded}


def _depth(d, a, b, lo, hi) -> int:
    good, bad = 0, a.level + 1
    while good + 1 < bad:
        mid = (good + bad) // 2
        if _mismatch(d, mid, a, b, lo, hi) is None:
            good = mid
        else:
            bad = mid
    return good


# ---------------------------------------------------------------------------
# Class evidence


@dataclass
class SearchParams:
    max_depth: int = 3
    horizon: int | None = None
    window: tuple | None = None  # inclusive; None = each pair's common window
    prefix_len: int = 2
    rules: tuple = ("min", "max", "const", "track")
    j_max: int | None = None  # default horizon - 1
    max_pairs_per_k: int = 200
    k_subset: tuple | None = None
    min_window: int | None = None  # default 2 * largest dimension at level K+2

    def resolved(self, d: Diagram) -> "SearchParams":
        N = d.depth if self.horizon is None else self.horizon
        if not 1 <= N <= d.depth:
            raise DiagramError(f"horizon {N} outside 1..{d.depth}")
        if self.max_depth < 1 or self.prefix_len < 0 or self.max_pairs_per_k < 1:
            raise DiagramError("search bounds must be positive")
        j_max = N - 1 if self.j_max is None else self.j_max
        min_window = self.min_window
        if min_window is None:
            min_window = 2 * max(d.dims[min(self.max_depth + 2, N)])
        if self.window is not None and self.window[1] - self.window[0] + 1 < min_window:
            raise DiagramError(f"window shorter than the required {min_window} steps")
        return SearchParams(self.max_depth, N, self.window, self.prefix_len,
                            tuple(self.rules), j_max, self.max_pairs_per_k,
                            self.k_subset, min_window)


@dataclass
class EvidenceReport:
    bounds: dict
    candidates: dict
    witnesses: dict  # k -> list of witness dicts
    pair_counts: dict  # k -> {"total": n, "checked": n}
    cuts: dict  # k -> {j: witness or None}
    flags: dict
    complete: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _pair_cuts(d, cands, rec: PairRecord, j_lo: int, j_hi: int) -> dict:
    x, y = cands.specs[rec.a], cands.specs[rec.b]
    return {j: find_cut(x, y, j, rec.window, d, cands.horizon) for j in range(j_lo, j_hi + 1)}


def class_evidence(d: Diagram, params: SearchParams | None = None) -> EvidenceReport:
    p = (params or SearchParams()).resolved(d)
    K, N, J = p.max_depth, p.horizon, p.j_max
    cands = candidate_specs(d, p.prefix_len, list(p.rules), N)
    found = depth_pairs(d, cands, K, p.window, p.max_pairs_per_k, p.min_window)
    records = found["pairs"]
    complete = all(found["total"][k] == len(records[k]) for k in records)
    witnesses, cuts, counts = {}, {}, {}
    for k in range(1, K + 1):
        sensitive = 0
        if p.window is not None:
            # confirm over the pair's whole common window, which cut search needs
            kept = []
            for rec in records[k]:
                x, y = cands.specs[rec.a], cands.specs[rec.b]
                full = common_window(x, y, d, N)
                if window_depth(x, y, full, d, N) != k:
                    sensitive += 1
                    continue
                m = _mismatch(d, k + 1, _anchor(x, d, N), _anchor(y, d, N), *full)
                kept.append(PairRecord(rec.a, rec.b, k, m, full))
            records[k] = kept
        counts[k] = {"total": found["total"][k], "checked": len(records[k]) + sensitive,
                     "depth_changed_on_full_window": sensitive}
        for rec in records[k]:
            rec.cuts = _pair_cuts(d, cands, rec, k + 1, J)
        cuts[k] = {}
        for j in range(k + 1, J + 1):
            hit = next((r for r in records[k] if r.cuts[j] is not None), None)
            cuts[k][j] = None if hit is None else _describe(d, cands, hit, j)
        witnesses[k] = [_describe(d, cands, r) for r in records[k][:5]]

    ks = list(range(1, K + 1))
    subset = list(p.k_subset) if p.k_subset else ks

    def any_cut(k, j):
        return any(r.cuts.get(j) is not None for r in records[k])

    def long_cuts(r, k):
        return all(r.cuts[j] is not None for j in range(k + 1, J + 1))

    ww_ks = [k for k in ks if records[k] and all(any_cut(k, j) for j in range(k + 1, J + 1))]
    cutoffs = {}
    for k in ks:
        cutoffs[k] = next((j for j in range(k + 1, J + 1) if not any_cut(k, j)), None)
    h2_ks = [k for k in ks
             if all(any(r.cuts[j] is None for j in range(k + 1, J + 1)) for r in records[k])]
    u1_ks = [k for k in ks
             if any(any(r.cuts[j] is None for j in range(k + 1, J + 1)) for r in records[k])]
    u0_witness = None
    for k in ks:
        if k + 1 > J:
            continue
        r = next((r for r in records[k] if r.cuts.get(k + 1) is not None), None)
        if r is not None:
            u0_witness = _describe(d, cands, r, k + 1)
            break
    u2 = all(any(r.cuts.get(k + 1) is None for r in records[k]) for k in ks if k + 1 <= J)

    bounds = {"max_depth": K, "horizon": N, "j_max": J,
              "window": list(p.window) if p.window else "per-pair common window",
              "prefix_len": p.prefix_len, "rules": list(p.rules),
              "max_pairs_per_k": p.max_pairs_per_k, "min_window": p.min_window,
              "excluded_by_window": found["excluded"],
              "all_pairs_checked": complete}
    flags = {
        "W_evidence": {"value": all(any_cut(k, j) for k in ks for j in range(k + 1, J + 1)),
                       "meaning": "every tested k and j has a depth-k pair with a j cut"},
        "W0_evidence": {"value": all(any(long_cuts(r, k) for r in records[k]) for k in ks),
                        "ks": [k for k in ks if any(long_cuts(r, k) for r in records[k])],
                        "meaning": "every tested k has a depth-k pair with cuts at all tested j"},
        "WW_evidence": {"value": bool(subset) and set(subset) <= set(ww_ks), "ks": ww_ks,
                        "subset": subset},
        "U0_refuted": {"value": u0_witness is not None, "witness": u0_witness},
        "U0_consistent": {"value": u0_witness is None, "complete": complete},
        "U_cutoff_evidence": {"value": all(cutoffs[k] is not None for k in ks),
                              "cutoffs": cutoffs, "complete": complete},
        "U1_witness": {"value": bool(u1_ks), "ks": u1_ks},
        "U2_witness": {"value": u2 and all(records[k] for k in ks if k + 1 <= J)},
        "DM2_consistent": {"value": any(cutoffs[k] is not None and records[k] for k in ks),
                           "ks": [k for k in ks if cutoffs[k] is not None],
                           "complete": complete},
        "H2_consistent": {"value": bool([k for k in h2_ks if records[k]]), "ks": h2_ks,
                          "complete": complete},
    }
    return EvidenceReport(bounds, cands.summary(), witnesses, counts,
                          {k: {str(j): v for j, v in c.items()} for k, c in cuts.items()},
                          flags, complete)


def _describe(d, cands, rec: PairRecord, j: int | None = None) -> dict:
    out = {"x": cands.specs[rec.a].text(d), "x2": cands.specs[rec.b].text(d),
           "depth": rec.depth, "difference_time": rec.difference_time,
           "window": list(rec.window)}
    if j is not None:
        out["cut_level"] = j
        out["cut_time"] = rec.cuts.get(j)
    return out


# ---------------------------------------------------------------------------
# Exact certificates and constructed witnesses


@dataclass
class Certificate:
    kind: str
    reason: str


def u0_certificate(d: Diagram) -> Certificate | None:
    """Exact U0 certificate for diagrams with a single vertex at every level.

    With one vertex per level, two paths with the same k-coding share their
    first k edges and differ in a later edge, so at every time their
    (k+1)-truncations are distinct paths into the same vertex; they are
    never simultaneously minimal into level k+1.
    """
    if all(w == 1 for w in d.widths[1:]):
        return Certificate("U0", "one vertex at every level 1..N: T^m x and T^m x' "
                                 "never share the minimal path into level k+1")
    return None


def _extend_spec(d: Diagram, prefix: FinitePath, N: int) -> PathSpec | None:
    """A suffix rule that resolves ``prefix`` to the horizon (first that works)."""
    col = prefix.end_index + 1
    maxdeg = max(len(v.in_edges) for level in d.levels[1:] for v in level)
    options = [AllMinimal(), VertexTrack("col", str(col))]
    options += [ConstantOrdinal(c) for c in range(1, maxdeg + 1)]
    for rule in options:
        spec = PathSpec(prefix, rule)
        try:
            resolve(spec, N, d)
            return spec
        except (ResolutionError, HorizonExceeded):
            continue
    return None


@dataclass
class UOWitness:
    x: PathSpec
    x2: PathSpec
    n: int
    window: tuple
    same_n_coding: bool
    cut_time: int
    depth: int


def uo_pair_witness(d: Diagram, n: int, horizon: int | None = None):
    """Depth-n pair with an (n+1) cut when level n+1 is uniformly ordered.

    The two paths are minimal into the first two vertices of level n+1.
    """
    N = d.depth if horizon is None else horizon
    if not 1 <= n < N or d.width(n + 1) < 2:
        return None
    if uniform_order_test(d, n + 1) is None:
        return None
    specs = []
    for i in (0, 1):
        spec = _extend_spec(d, extremal_path_into(d, (n + 1, i), "min"), N)
        if spec is None:
            return None
        specs.append(spec)
    x, x2 = specs
    window = common_window(x, x2, d, N)
    same = same_k_coding_window(x, x2, n, window, d, N)
    cut = find_cut(x, x2, n + 1, window, d, N)
    depth = window_depth(x, x2, window, d, N)
    if not same or cut is None or depth != n:
        return None
    return UOWitness(x, x2, n, window, same, cut, depth)


@dataclass
class KiteShape:
    widths: list
    last_multi_vertex_level: int | None
    nonincreasing: bool
    eventually_one: bool
    deterministic: bool
    tail_width: int


def kite_shape_check(d: Diagram) -> KiteShape:
    w = d.widths[1:]
    multi = [n for n, x in enumerate(w, start=1) if x > 1]
    last = multi[-1] if multi else None
    nonincreasing = all(a >= b for a, b in zip(w, w[1:]))
    eventually_one = w[-1] == 1 and (last is None or last < len(w))
    return KiteShape(d.widths, last, nonincreasing, eventually_one,
                     bool(deterministic_test(d)), w[-1])


# ---------------------------------------------------------------------------
# Telescoping correspondence


def _l_of(levels: list, k: int) -> int:
    """Largest l with levels[l] <= k."""
    return max(l for l, n in enumerate(levels) if n <= k)


@dataclass
class TelescopeCheck:
    levels: list
    k: int
    j: int
    cut_time: int | None
    image_depth: int
    expected_image_depth: int
    image_cut_level: int
    image_cut_time: int | None
    lift_depth: int
    lift_range: tuple
    lift_cut_level: int | None
    lift_cut_ok: bool
    parts: dict
    window: tuple

    @property
    def ok(self) -> bool:
        return all(self.parts.values())


def telescope_correspondence(d: Diagram, levels, x, x2, k: int, j: int,
                             window=None) -> TelescopeCheck:
    """Check the four depth/cut transfer statements for one pair and one telescoping.

    The telescoped diagram has the same orbit times as the original, so a
    window of times means the same thing on both sides.
    """
    levels = list(levels)
    N = levels[-1]
    px, py = resolve(x, N, d), resolve(x2, N, d)
    sx, sy = PathSpec(px), PathSpec(py)
    win = common_window(sx, sy, d, N) if window is None else tuple(window)
    if window_depth(sx, sy, win, d, N) != k:
        raise DiagramError(f"pair is not depth {k} over window {win}")
    m = find_cut(sx, sy, j, win, d, N)
    if m is None:
        raise DiagramError(f"pair has no {j} cut in window {win}")
    td = telescope(d, levels)
    tx = PathSpec(telescope_path(d, levels, px))
    ty = PathSpec(telescope_path(d, levels, py))
    L = td.depth
    # part 1: image depth
    expect = _l_of(levels, k)
    img_depth = window_depth(tx, ty, win, td, L)
    part1 = img_depth == expect
    # part 2: image cut at l_j, at the same time
    lj = _l_of(levels, j)
    img_cut = find_cut(tx, ty, lj, win, td, L) if lj >= 1 else 0
    # every time is a 0 cut, so l_j = 0 holds trivially
    part2 = lj == 0 or (img_cut is not None and _both_minimal(td, tx, ty, lj, m, L))
    # part 3: lifting the image pair gives a pair of depth in [n_k~, n_{k~+1})
    lx = PathSpec(lift_path(d, levels, tx.prefix))
    ly = PathSpec(lift_path(d, levels, ty.prefix))
    lift_depth = window_depth(lx, ly, win, d, N)
    lo_hi = (levels[img_depth], levels[img_depth + 1] if img_depth + 1 < len(levels) else N + 1)
    part3 = lo_hi[0] <= lift_depth < lo_hi[1] and lx.prefix == px and ly.prefix == py
    # part 4: every image cut at level l lifts to an n_l cut at the same time
    lift_cut_ok = True
    for l in range(img_depth + 1, L + 1):
        t = find_cut(tx, ty, l, win, td, L)
        if t is not None and not _both_minimal(d, lx, ly, levels[l], t, N):
            lift_cut_ok = False
    part4 = lift_cut_ok
    return TelescopeCheck(levels, k, j, m, img_depth, expect, lj, img_cut, lift_depth,
                          lo_hi, levels[lj] if lj >= 1 else None, lift_cut_ok,
                          {"image_depth": part1, "image_cut": part2,
                           "lift_depth": part3, "lift_cut": part4}, win)


def _both_minimal(d: Diagram, x, y, j: int, m: int, N: int) -> bool:
    for s in (x, y):
        a = _anchor(s, d, N)
        if locate(d, (a.level, a.vertex), a.rank + m, j)[1] != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Random small diagrams


def random_diagram(rng: random.Random, levels: int | None = None, max_width: int = 3,
                   max_indeg: int = 3, max_tries: int = 10_000) -> Diagram:
    """Rejection-sample a small diagram that passes :func:`validate`."""
    for _ in range(max_tries):
        depth = levels if levels is not None else rng.randint(2, 4)
        rows = [(Vertex("root"),)]
        for n in range(1, depth + 1):
            width = rng.randint(1, max_width)
            prev = len(rows[-1])
            row = []
            for i in range(width):
                deg = 1 if n == 1 else rng.randint(1, max_indeg)
                if n == 1:
                    ins = (0,)
                else:
                    ins = tuple(rng.randrange(prev) for _ in range(deg))
                row.append(Vertex(f"n{n}_{i + 1}", ins))
            rows.append(tuple(row))
        try:
            d = Diagram(tuple(rows))
        except DiagramError:
            continue
        if validate(d).ok:
            return d
    raise RuntimeError("no valid diagram found")


def horizon_pairs(d: Diagram, N: int | None = None) -> list:
    """All (x, x', depth, cut levels) for distinct horizon paths with depth >= 1."""
    N = d.depth if N is None else N
    paths = [PathSpec(p) for p in iter_paths(d, N)]
    out = []
    for i in range(len(paths)):
        for j in range(i + 1, len(paths)):
            x, y = paths[i], paths[j]
            win = common_window(x, y, d, N)
            if win[0] > win[1]:
                continue
            k = window_depth(x, y, win, d, N)
            if k < 1 or k >= N:
                continue
            cut_levels = [jj for jj in range(k + 1, N + 1)
                          if find_cut(x, y, jj, win, d, N) is not None]
            out.append((x, y, k, cut_levels))
    return out


# ---------------------------------------------------------------------------
# k-equivalence (SNE) evidence


def gj_equivalence_predicate(d: Diagram, p: FinitePath, q: FinitePath, k: int) -> bool:
    """Same ordinal labels, first difference at a level j where the paths enter
    MC(i) for some i >= k, and both stay in MC(i) through the end of the paths."""
    if p == q or p.ordinals != q.ordinals:
        return False
    j = p.agreement(q) + 1
    i = None
    for level in range(j, p.length + 1):
        a = mc_index(d, level, p.edges[level - 1][0])
        b = mc_index(d, level, q.edges[level - 1][0])
        if a is None or a != b or (i is not None and a != i):
            return False
        i = a
    return i is not None and i >= k


@dataclass
class SNEReport:
    K: int
    horizon: int
    candidates: dict
    pairs: dict  # k -> number of k-equivalent candidate pairs
    examples: dict  # k -> up to 5 example pairs (texts)
    invariant_checks: dict  # k -> {"checked": n, "long_cuts": n, "same_coding": n}
    criterion_agrees: dict | None = None  # k -> bool (GJ only)

    def has_witness(self, k: int) -> bool:
        return self.pairs.get(k, 0) > 0


def k_equivalence_key(d: Diagram, p: FinitePath, k: int) -> tuple:
    """Paths with equal keys are exactly the k-equivalent ones (up to the path's level)."""
    key = [p.edges[:k]]
    for n in range(k + 1, p.length + 1):
        pn = p.truncate(n)
        key.append((_classes(d, k, n)[pn.end_index], d.rank(pn)))
    return tuple(key)


def k_equivalent_pairs(d: Diagram, cands: CandidateSet, k: int) -> list:
    groups = defaultdict(list)
    for i, p in enumerate(cands.paths):
        groups[k_equivalence_key(d, p, k)].append(i)
    return [(a, b) for members in groups.values()
            for x, a in enumerate(members) for b in members[x + 1:]]


def _looks_gj(d: Diagram) -> bool:
    return all(d.width(n) == 2 * n for n in range(1, d.depth + 1)) and all(
        v.name == f"v{n}_{i + 1}" for n in range(1, d.depth + 1)
        for i, v in enumerate(d.levels[n]))


def sne_evidence(d: Diagram, K: int, N: int | None = None, window=None,
                 prefix_len: int = 3, rules=("min", "max", "const", "track"),
                 max_checks: int = 50) -> SNEReport:
    """Search candidate pairs for k-equivalence up to the horizon, k = 1..K.

    Every found pair (up to ``max_checks`` per k) is checked for long cuts
    and for equal k-codings.  On a GJ diagram the found pairs are also
    compared with the explicit label/Morse-component criterion.
    """
    N = d.depth if N is None else N
    cands = candidate_specs(d, prefix_len, list(rules), N)
    pairs, examples, checks = {}, {}, {}
    agree = {} if _looks_gj(d) else None
    for k in range(1, K + 1):
        found = k_equivalent_pairs(d, cands, k)
        pairs[k] = len(found)
        examples[k] = [(cands.specs[a].text(d), cands.specs[b].text(d)) for a, b in found[:5]]
        n_long = n_same = 0
        for a, b in found[:max_checks]:
            x, y = cands.specs[a], cands.specs[b]
            win = common_window(x, y, d, N) if window is None else window
            if all(find_cut(x, y, j, win, d, N) is not None for j in range(k + 1, N)):
                n_long += 1
            if same_k_coding_window(x, y, k, win, d, N):
                n_same += 1
        checks[k] = {"checked": min(len(found), max_checks), "long_cuts": n_long,
                     "same_coding": n_same}
        if agree is not None:
            crit = set()
            by_labels = defaultdict(list)
            for i, p in enumerate(cands.paths):
                by_labels[p.ordinals].append(i)
            for members in by_labels.values():
                for x, a in enumerate(members):
                    for b in members[x + 1:]:
                        if gj_equivalence_predicate(d, cands.paths[a], cands.paths[b], k):
                            crit.add((a, b))
            agree[k] = crit == set(found)
    return SNEReport(K, N, cands.summary(), pairs, examples, checks, agree)


def k_equivalent_check(d: Diagram, x, y, k: int, N: int) -> bool:
    return k_equivalent_up_to(x, y, k, N, d)
