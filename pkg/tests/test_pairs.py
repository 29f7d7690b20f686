import random

import pytest
from hypothesis import given, strategies as st

from bvtk import core
from bvtk import families as F
from bvtk import pairs as P
from bvtk.analysis import random_diagram
from bvtk.core import FinitePath, PathSpec
from bvtk.dynamics import HorizonExceeded, resolve

import oracles

diagrams = st.integers(0, 50_000).map(lambda s: random_diagram(random.Random(s), 4))


def _draw_pair(d, data):
    paths = [p for p in oracles.all_paths(d, d.depth)]
    a = data.draw(st.sampled_from(paths))
    b = data.draw(st.sampled_from(paths))
    return a, b


def _window(d, a, b):
    ra = oracles.paths_into_sorted(d, (d.depth, a[-1][0])).index(a)
    rb = oracles.paths_into_sorted(d, (d.depth, b[-1][0])).index(b)
    da = d.dims[d.depth][a[-1][0]]
    db = d.dims[d.depth][b[-1][0]]
    return max(-ra, -rb), min(da - ra, db - rb) - 1


@given(diagrams, st.data())
def test_depth_and_codings_against_brute_force(d, data):
    a, b = _draw_pair(d, data)
    lo, hi = _window(d, a, b)
    assert P.common_window(PathSpec(FinitePath(a)), PathSpec(FinitePath(b)), d) == (lo, hi)
    lo2 = data.draw(st.integers(lo, hi))
    hi2 = data.draw(st.integers(lo2, hi))
    x, y = PathSpec(FinitePath(a)), PathSpec(FinitePath(b))
    assert P.window_depth(x, y, (lo2, hi2), d) == oracles.depth_over_window(d, a, b, lo2, hi2)
    k = data.draw(st.integers(0, d.depth))
    same = oracles.coding(d, a, k, lo2, hi2) == oracles.coding(d, b, k, lo2, hi2)
    assert P.same_k_coding_window(x, y, k, (lo2, hi2), d) == same
    j = data.draw(st.integers(0, d.depth))
    m = P.find_cut(x, y, j, (lo2, hi2), d)
    cuts = [t for t in range(lo2, hi2 + 1) if oracles.is_cut(d, a, b, j, t)]
    if m is None:
        assert not cuts
    else:
        assert m in cuts


@given(diagrams, st.data())
def test_k_equivalence_gives_cuts(d, data):
    """k-equivalent paths have an n cut for every n > k (when the window allows)."""
    a, b = _draw_pair(d, data)
    x, y = PathSpec(FinitePath(a)), PathSpec(FinitePath(b))
    N = d.depth
    for k in range(N):
        if not P.k_equivalent_up_to(x, y, k, N, d):
            continue
        win = P.common_window(x, y, d)
        assert P.same_k_coding_window(x, y, k, win, d)
        for n in range(k + 1, N + 1):
            m = -d.rank(FinitePath(a[:n]))
            if win[0] <= m <= win[1]:
                assert oracles.is_cut(d, a, b, n, m)
                assert P.find_cut(x, y, n, win, d) is not None


@given(diagrams, st.data())
def test_k_equivalence_matches_definition(d, data):
    a, b = _draw_pair(d, data)
    x, y = PathSpec(FinitePath(a)), PathSpec(FinitePath(b))
    N = d.depth
    k = data.draw(st.integers(0, N))
    expect = a[:k] == b[:k] and all(
        oracles.block(d, (n, a[n - 1][0]), k) == oracles.block(d, (n, b[n - 1][0]), k)
        and d.rank(FinitePath(a[:n])) == d.rank(FinitePath(b[:n]))
        for n in range(k + 1, N + 1))
    assert P.k_equivalent_up_to(x, y, k, N, d) == expect
    fail = P.first_k_equivalence_failure(x, y, k, N, d)
    assert (fail is None) == expect


def test_window_errors(gj5):
    x, y = F.mc_pair(gj5, 2)
    lo, hi = P.common_window(x, y, gj5)
    with pytest.raises(HorizonExceeded):
        P.same_k_coding_window(x, y, 1, (lo - 1, hi), gj5)
    with pytest.raises(ValueError):
        P.window_depth(x, y, (3, 2), gj5)


class TestMorseComponentPairs:
    def test_depth_witness(self, gj5):
        x, y = F.mc_pair(gj5, 2)
        w = P.depth_witness(x, y, 4, None, gj5)
        assert w and w.kind == "DepthWitness" and w.data["k"] == 2
        m = w.data["difference_time"]
        a, b = (resolve(s, 5, gj5) for s in (x, y))
        assert oracles.coding(gj5, a.edges, 3, m, m) != oracles.coding(gj5, b.edges, 3, m, m)
        d = w.to_dict(gj5)
        assert d["kind"] == "DepthWitness" and d["x"].startswith("prefix=")

    def test_no_witness_kinds(self, gj5):
        x, y = F.mc_pair(gj5, 2)
        same = P.depth_witness(x, x, 4, None, gj5)
        assert not same and "not distinct" in same.reason
        deep = P.depth_witness(x, y, 1, None, gj5)
        assert not deep and "depth > 1" in deep.reason
        u = PathSpec(core.extremal_path_into(gj5, (5, 0), "min"))
        v = PathSpec(gj5.unrank((5, 0), 1))
        diff = P.depth_witness(u, v, 3, None, gj5)
        assert not diff and diff.reason.startswith("1-codings differ")
        assert diff.to_dict()["kind"] == "NoWitness"

    def test_long_cuts(self, gj5):
        x, y = F.mc_pair(gj5, 2)
        rep = P.long_cuts_report(x, y, 2, 4, None, gj5)
        assert rep.data["gaps"] == []
        for j, m in rep.data["cut_times"].items():
            assert P.find_cut(x, y, j, None, gj5) == m
            vx, vy = rep.data["cut_vertices"][j]
            assert vx != vy or j <= 2
        assert P.k_equivalent_up_to(x, y, 2, 5, gj5)
        assert not P.k_equivalent_up_to(x, y, 3, 5, gj5)
