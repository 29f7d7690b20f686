"""End-to-end acceptance checks, one test per criterion.

Each test records a one-line PASS/FAIL verdict (printed in the pytest
terminal summary, or directly when this file is run as a script).
"""
import random

import pytest

from bvtk import analysis as A
from bvtk import blocks as B
from bvtk import core
from bvtk import families as F
from bvtk import morphisms as M
from bvtk import pairs as P
from bvtk.core import FinitePath, PathSpec
from bvtk.dynamics import dot_index, k_coding_window, resolve, step

import oracles

RESULTS = {}


def verdict(n, title, ok, detail=""):
    line = f"ACCEPTANCE {n:>2} {'PASS' if ok else 'FAIL'}: {title}"
    if detail:
        line += f" [{detail}]"
    RESULTS[n] = line
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def gj8():
    return F.gj(8)


# ---------------------------------------------------------------------------


def test_01_ptm_reduction(gj8):
    bad = []
    for n in range(4, 9):
        w = M.erase_zeros(M.tilde_reduction(gj8, n))
        if w != M.ptm_word(len(w)):
            bad.append(n)
    verdict(1, "erase-0 of the tilde reduction is a Thue-Morse prefix, n=4..8", not bad,
            f"failing n={bad}" if bad else "lengths " + ",".join(
                str(2 ** (n - 2)) for n in range(4, 9)))


def test_02_aperiodicity(gj8):
    periodic = [n for n in range(4, 9)
                if M.power_form(tuple(core.vertex_coding(gj8, (n, 0), 2))) is not None]
    rng = random.Random(2)
    mismatch = 0
    hits = 0
    for _ in range(200):
        length = rng.randint(0, 64)
        if rng.random() < 0.5:
            # bias towards periodic words so both outcomes are exercised
            p = "".join(rng.choice("ab") for _ in range(rng.randint(1, 6)))
            w = (p * 64)[:length]
        else:
            w = "".join(rng.choice("ab") for _ in range(length))
        pf = M.power_form(w)
        brute = oracles.power_form_brute(w)
        got = None if pf is None else (pf.P, pf.k, pf.Q)
        mismatch += got != brute
        hits += brute is not None
    verdict(2, "C_2(v(n,1)) has no P^kQ form (n=4..8); power_form agrees with the "
               "brute-force period scan", not periodic and not mismatch,
            f"periodic n={periodic}, mismatches {mismatch}/200, {hits} periodic words")


def test_03_gj_depth_characterization(gj8):
    problems = []
    for k in (2, 3):
        x, y = F.mc_pair(gj8, k)
        win = P.common_window(x, y, gj8)
        need = 2 * gj8.dims[k + 2][gj8.index(k + 2, F.vname(k + 2, 1))]
        if win[1] - win[0] + 1 < need:
            problems.append(f"k={k} window too short")
        if not P.same_k_coding_window(x, y, k, win, gj8):
            problems.append(f"k={k} codings differ")
        if P.first_difference(x, y, k + 1, win, gj8) is None:
            problems.append(f"k={k} no (k+1) difference")
        rep = P.long_cuts_report(x, y, k, 7, win, gj8)
        if rep.data["gaps"]:
            problems.append(f"k={k} cut gaps {rep.data['gaps']}")
    cands = A.candidate_specs(gj8, 4, ["min", "max", "const"])
    found = A.depth_pairs(gj8, cands, 3, (-384, 384), None, only=(2, 3))
    counts = {}
    for k in (2, 3):
        recs = found["pairs"][k]
        counts[k] = len(recs)
        for r in recs:
            if not A.gj_equivalence_predicate(gj8, cands.paths[r.a], cands.paths[r.b], k):
                problems.append(f"k={k} pair {r.a},{r.b} violates the criterion")
    verdict(3, "MC(k) pairs have depth k with long cuts; every depth-2/3 candidate pair "
               "has equal labels and runs down MC(k)", not problems,
            "; ".join(problems[:3]) or f"candidate pairs depth2={counts[2]}, depth3={counts[3]}, "
            f"{len(cands.specs)} candidates, {found['excluded']} outside the window")


def test_04_recognizability(gj8):
    problems = []
    rng = random.Random(4)
    for j in range(3, 7):
        L = 2 * j - 2
        word = M.phi_coding(gj8, (8, 0), j - 1)
        factors = {word[i:i + 3 * L] for i in range(len(word) - 3 * L + 1)}
        for f in factors:
            r = M.desubstitute(f, j)
            c = M.count_factorizations(f, j)
            if not isinstance(r, M.Factorization) or c > 1:
                problems.append(f"j={j} factor {f}")
        for _ in range(100):
            n = rng.randint(2, 50)
            u = []
            for _ in range(n):
                u.append("E" if u and u[-1] == "D" else rng.choice("DE"))
            u = "".join(u)
            r = M.desubstitute(M.tau(j)(u), j)
            if not isinstance(r, M.Factorization) or r.word != u:
                problems.append(f"j={j} round trip {u}")
    verdict(4, "factors of length 3(2j-2) desubstitute uniquely (j=3..6); 100 round trips "
               "per j", not problems, "; ".join(problems[:3]))


def test_05_fig1_family():
    d = F.fig1_family(9)
    problems = []
    for n in range(3, 10, 2):
        c = [B.coding_by_vertices(d, (n, i), 1).names(d) for i in (0, 1)]
        if c[0] != c[1]:
            problems.append(f"C_1 differs at level {n}")
    x, y = F.fig1_marked_pair(d)
    dots = {}
    for n in range(3, 10):
        a, b = B.dotted_basic_block(x, n, 1, d), B.dotted_basic_block(y, n, 1, d)
        dots[n] = (a.dot, b.dot)
        if n <= 4 and a != b:
            problems.append(f"dotted blocks differ at level {n}")
        if n >= 5 and a.dot == b.dot:
            problems.append(f"dots agree at level {n}")
    if P.k_equivalent_up_to(x, y, 1, 9, d):
        problems.append("marked pair is 1-equivalent")
    verdict(5, "fig1 family: equal C_1 at two-vertex levels; marked pair has equal "
               "dotted blocks at levels 3-4 and different dots at 5..9", not problems,
            "; ".join(problems[:3]) or f"dots {dots}")


def test_06_splitting():
    g = F.gj(8)
    d, log = F.gj_modified(8, with_log=True)
    problems = []
    for rec in log:
        j = rec.level
        whole = B.basic_block(g, (j, g.index(j, rec.name)), 1).letters
        left = B.basic_block(d, (j, d.index(j, rec.first)), 1).letters
        right = B.basic_block(d, (j, d.index(j, rec.second)), 1).letters
        partner = d.dims[j][d.index(j, F.vname(j, int(rec.name.rsplit("_", 1)[1]) + 1))]
        if left + right != whole or not 0 < len(left) < len(whole) \
                or not partner > max(len(left), len(right)):
            problems.append(f"identities fail at {rec.name}")
    rep = core.validate(d)
    if not rep.properly_ordered_at_horizon or not rep.ok:
        problems.append("validation failed")
    cands = A.candidate_specs(g, 4, ["min", "max", "const", "track"])
    before = A.k_equivalent_pairs(g, cands, 1)
    still = 0
    for a, b in before:
        pa = F.map_path_through_splits(g, d, cands.paths[a])
        pb = F.map_path_through_splits(g, d, cands.paths[b])
        if P.k_equivalent_up_to(PathSpec(pa), PathSpec(pb), 1, 8, d):
            still += 1
    sne = A.sne_evidence(d, 2, prefix_len=4)
    if still or not before:
        problems.append(f"{still} of {len(before)} former pairs still 1-equivalent")
    verdict(6, "gj_modified(8): split identities hold, validates, former 1-equivalent "
               "pairs are no longer 1-equivalent", not problems,
            "; ".join(problems) or f"{len(log)} splits, {len(before)} former pairs mapped, "
            f"sne search on the new diagram: {sne.pairs}")


def test_07_odometers():
    problems = []
    for radices in ([2, 3] * 4, [5, 2, 7, 3, 2, 2, 2, 2]):
        if A.u0_certificate(F.odometer("single", radices)) is None:
            problems.append(f"no certificate for {radices}")
    d = F.odometer("suo", N=12)
    details = []
    for k in range(1, 6):
        x, y = F.suo_pair(d, k)
        win = P.common_window(x, y, d)
        if P.window_depth(x, y, win, d) != k:
            problems.append(f"k={k} depth {P.window_depth(x, y, win, d)}")
        if P.find_cut(x, y, k + 1, (0, 0), d) != 0:
            problems.append(f"k={k} no k+1 cut at 0")
        M_len = 3 * max(d.dims[k + 2])
        w = (0, M_len - 1)
        if w[1] > win[1]:
            problems.append(f"k={k} window exceeds the horizon")
            continue
        if P.find_cut(x, y, k + 2, w, d) is not None:
            problems.append(f"k={k} has a k+2 cut")
        ax, ay = P._anchor(x, d, None), P._anchor(y, d, None)
        for m in range(0, M_len, max(1, M_len // 97)):
            ux = B.locate(d, (ax.level, ax.vertex), ax.rank + m, k + 1)[0]
            uy = B.locate(d, (ay.level, ay.vertex), ay.rank + m, k + 1)[0]
            if ux == uy:
                problems.append(f"k={k} same level-{k + 1} vertex at m={m}")
                break
        details.append(f"k={k}:M={M_len}")
    verdict(7, "odometers: U0 certificate for single mode; suo pairs have a k+1 cut at 0, "
               "no k+2 cut, distinct level-(k+1) vertices", not problems,
            "; ".join(problems[:3]) or " ".join(details))


def test_08_kite():
    d = F.kite_nondet(8)
    x, y = F.kite_pair(d)
    problems = []
    if P.find_cut(x, y, 2, (0, 0), d) != 0:
        problems.append("no 2 cut at m=0")
    rules = ("min", "max", "const", "per:1,2", "per:2,1")
    rep = A.class_evidence(d, A.SearchParams(max_depth=2, prefix_len=4, rules=rules))
    for k in (1, 2):
        if rep.pair_counts[k]["total"]:
            problems.append(f"{rep.pair_counts[k]['total']} depth-{k} pairs")
    verdict(8, "kite: the marked pair has a 2 cut at m=0; no depth-1 or depth-2 pairs",
            not problems, "; ".join(problems) or
            f"{rep.candidates['distinct']} candidates, "
            f"{rep.bounds['excluded_by_window']} pairs with windows below "
            f"{rep.bounds['min_window']}")


def test_09_telescoping_random():
    rng = random.Random(9)
    passed = failed = 0
    first_fail = None
    while passed + failed < 100:
        d = A.random_diagram(rng, rng.randint(3, 5))
        pairs = [h for h in A.horizon_pairs(d) if h[3]]
        if not pairs:
            continue
        x, y, k, cut_levels = rng.choice(pairs)
        j = rng.choice(cut_levels)
        N = d.depth
        inner = sorted(rng.sample(range(1, N), rng.randint(0, N - 1)))
        levels = [0] + inner + [N]
        r = A.telescope_correspondence(d, levels, x, y, k, j)
        if r.ok:
            passed += 1
        else:
            failed += 1
            first_fail = first_fail or (levels, k, j, r.parts)
    verdict(9, "telescoping transfers depth and cuts on 100 random instances", failed == 0,
            f"{passed} passed, {failed} failed" + (f", first {first_fail}" if first_fail else ""))


def test_10_dm2ww():
    d = F.dm2ww(9)
    problems = []
    for k in (1, 3, 5):
        x, y = F.mc_pair(d, k)
        w = P.depth_witness(x, y, 8, None, d)
        if not w or w.data["k"] != k:
            problems.append(f"odd k={k}: {w}")
        gaps = P.long_cuts_report(x, y, k, 8, None, d).data["gaps"]
        if gaps:
            problems.append(f"odd k={k}: cut gaps {gaps}")
    cands = A.candidate_specs(d, 4, ["min", "max", "const", "track"])
    window = (-3840, 3840)
    found = A.depth_pairs(d, cands, 5, window, None, only=(2, 4))
    for k in (2, 4):
        if found["pairs"][k]:
            problems.append(f"even k={k}: {len(found['pairs'][k])} witnesses")
    levels = [0, 2, 4, 6, 8]
    td = core.telescope(d, levels)
    depths = {}
    for k in (1, 3, 5):
        x, y = F.mc_pair(d, k)
        tx, ty = (PathSpec(core.telescope_path(d, levels, resolve(s, 8, d))) for s in (x, y))
        win = P.common_window(tx, ty, td)
        depths[k] = P.window_depth(tx, ty, win, td)
        if depths[k] != k // 2:
            problems.append(f"telescoped k={k} depth {depths[k]}")
        elif depths[k] >= 1:
            gaps = P.long_cuts_report(tx, ty, depths[k], td.depth, win, td).data["gaps"]
            if gaps:
                problems.append(f"telescoped k={k} cut gaps {gaps}")
    verdict(10, "dm2ww(9): odd-k MC pairs have depth k with long cuts; no even-depth pairs; "
                "after telescoping to [0,2,4,6,8] they have depth k//2 with long cuts",
            not problems, "; ".join(problems[:3]) or
            f"{len(cands.specs)} candidates, window {window}, {found['excluded']} outside it; "
            f"telescoped depths {depths}")


def test_11_widths():
    problems = []
    for N in range(3, 11):
        prof = core.validate(F.gj(N)).width_profile
        if prof != [1] + [2 * n for n in range(1, N + 1)]:
            problems.append(f"gj({N}) widths {prof}")
    for N in range(3, 13):
        if max(F.fig1_family(N).widths) > 4:
            problems.append(f"fig1({N}) wider than 4")
    verdict(11, "GJ widths are 1,2,4,...,2N; fig1 widths stay at most 4", not problems,
            "; ".join(problems))


def _invariants(name, d, rng):
    N = d.depth
    problems = []
    vertices = list(range(d.width(N)))
    for _ in range(6):
        u = rng.choice(vertices)
        dim = d.dims[N][u]
        r = rng.randrange(dim)
        x = PathSpec(d.unrank((N, u), r))
        # successor coherence and the dot-increment law
        if r + 1 < dim:
            y = step(x, "succ", N, d)
            if y.prefix != d.unrank((N, u), r + 1):
                problems.append("successor")
            for n in range(N + 1):
                dx = dot_index(x, n, d)
                top = d.dims[n][resolve(x, n, d).end_index] - 1
                if dot_index(y, n, d) != (0 if dx == top else dx + 1):
                    problems.append(f"dot increment at level {n}")
        # factor commutation, stepping route against block slices
        lo = max(-r, -20)
        hi = min(dim - r - 1, 20)
        k = rng.randint(1, N)
        i = rng.randint(0, k)
        win = k_coding_window(x, k, (lo, hi), d)
        low = k_coding_window(x, i, (lo, hi), d)
        if [p.truncate(i) for p in win] != low:
            problems.append("factor commutation")
        sl = B.block_slice(d, (N, u), k, r + lo, r + hi + 1)
        if sl != [d.letter(p) for p in win]:
            problems.append("block slices disagree with stepping")
    # k-equivalence implies cuts
    cands = A.candidate_specs(d, min(3, N), ["min", "max", "const", "track"])
    checked = 0
    for k in range(1, N):
        for a, b in A.k_equivalent_pairs(d, cands, k)[:10]:
            x, y = cands.specs[a], cands.specs[b]
            win = P.common_window(x, y, d)
            for n in range(k + 1, N + 1):
                m = -dot_index(x, n, d)
                if win[0] <= m <= win[1]:
                    checked += 1
                    if P.find_cut(x, y, n, (m, m), d) != m:
                        problems.append(f"k={k} equivalent pair lacks an {n} cut")
    return problems, checked


def test_12_invariants():
    fams = {
        "gj": F.gj(8), "gj-mod": F.gj_modified(8), "dm2ww": F.dm2ww(8),
        "odometer": F.odometer("single", N=8), "odometer-suo": F.odometer("suo", N=8),
        "fig1": F.fig1_family(8), "kite": F.kite_nondet(8),
        "kite-det": F.kite_deterministic([3, 2, 2, 1], 8),
    }
    rng = random.Random(12)
    problems, checked = [], {}
    for name, d in fams.items():
        bad, checked[name] = _invariants(name, d, rng)
        problems.extend(f"{name}: {b}" for b in bad)
    verdict(12, "successor coherence, factor commutation, k-equivalence => cuts and dot "
                "increments hold on every family at depth 8", not problems,
            "; ".join(problems[:3]) or f"equivalence cut checks {checked}")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
