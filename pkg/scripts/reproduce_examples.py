"""Print the headline numbers for the worked examples."""
from bvtk import analysis as A
from bvtk import blocks as B
from bvtk import core
from bvtk import families as F
from bvtk import morphisms as M
from bvtk import pairs as P


def gj_section() -> None:
    d = F.gj(8)
    print("gj(8) widths", core.validate(d).width_profile)
    for n in range(4, 9):
        t = M.tilde_reduction(d, n)
        ok = M.erase_zeros(t) == M.ptm_word(2 ** (n - 2))
        print(f"  tilde word at level {n}: length {len(t)}, Thue-Morse after erasing 0: {ok}")
    for k in (1, 2, 3):
        x, y = F.mc_pair(d, k)
        win = P.common_window(x, y, d)
        w = P.depth_witness(x, y, 7, win, d)
        gaps = P.long_cuts_report(x, y, k, 7, win, d).data["gaps"]
        print(f"  MC({k}) pair: window {win}, depth {w.data['k']}, cut gaps {gaps}")


def modified_section() -> None:
    d, log = F.gj_modified(8, with_log=True)
    rep = A.sne_evidence(d, 2, prefix_len=4)
    print(f"gj_modified(8): {len(log)} splits, k-equivalent pairs found {rep.pairs}")


def fig1_section() -> None:
    d = F.fig1_family(9)
    x, y = F.fig1_marked_pair(d)
    dots = [(B.dotted_basic_block(x, n, 1, d).dot, B.dotted_basic_block(y, n, 1, d).dot)
            for n in range(3, 10)]
    print("fig1(9) dots at levels 3..9", dots)
    print("  1-equivalent:", P.k_equivalent_up_to(x, y, 1, 9, d))


def odometer_section() -> None:
    print("odometer certificate:", A.u0_certificate(F.odometer("single", N=8)) is not None)
    suo = F.odometer("suo", N=8)
    for n in range(1, 5):
        w = A.uo_pair_witness(suo, n)
        print(f"  suo level {n}: depth {w.depth}, cut time {w.cut_time}")


def dm2ww_section() -> None:
    d = F.dm2ww(9)
    levels = [0, 2, 4, 6, 8]
    for k in (3, 5):
        x, y = F.mc_pair(d, k)
        r = A.telescope_correspondence(d, levels, x, y, k, k + 1)
        print(f"dm2ww(9) k={k}: telescoped depth {r.image_depth}, all parts hold {r.ok}")


if __name__ == "__main__":
    gj_section()
    modified_section()
    fig1_section()
    odometer_section()
    dm2ww_section()
