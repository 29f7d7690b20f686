"""Command line entry point ``bvtk``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import analysis, blocks, core, dynamics, families, morphisms, pairs, render


def _window(text: str) -> tuple:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("window must look like a..b")
    return int(lo), int(hi)


def _ints(text: str) -> list:
    return [int(t) for t in text.replace(",", " ").split()]


def _load(path: str) -> core.Diagram:
    return core.load(path)


def _vertex(d: core.Diagram, name: str):
    return d.find(name)


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=1, default=str))


def cmd_family(args) -> int:
    params = families.FamilyParams(args.name, args.levels, args.radices or [],
                                   args.counts or [], args.profile or [])
    d = params.build()
    text = core.dumps(d)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_validate(args) -> int:
    rep = core.validate(_load(args.diagram))
    _print_json(asdict(rep))
    return 0 if rep.ok else 1


def cmd_orbit(args) -> int:
    d = _load(args.diagram)
    x = core.parse_pathspec(args.spec, d)
    lo, hi = args.window
    win = dynamics.orbit_window(x, args.k, lo, hi, d)
    dots = None
    if args.dots is not None:
        dots = dynamics.orbit_window(x, args.dots, lo, hi, d).entries
    for i, p in enumerate(win.entries):
        line = f"{lo + i}\t{blocks.letter_name(d, args.k, d.letter(p))}"
        if dots is not None:
            line += f"\t{d.rank(dots[i])}"
        print(line)
    return 0


def cmd_blocks(args) -> int:
    d = _load(args.diagram)
    print(" ".join(blocks.basic_block(d, _vertex(d, args.vertex), args.k).names(d)))
    return 0


def cmd_coding(args) -> int:
    d = _load(args.diagram)
    print(" ".join(blocks.coding_by_vertices(d, _vertex(d, args.vertex), args.j).names(d)))
    return 0


def cmd_pair(args) -> int:
    d = _load(args.diagram)
    x, y = core.parse_pathspec(args.x, d), core.parse_pathspec(args.y, d)
    window = args.window or pairs.common_window(x, y, d)
    out = {
        "window": list(window),
        "same_k_coding": pairs.same_k_coding_window(x, y, args.k, window, d),
        "depth": _ev(pairs.depth_witness(x, y, max(args.k, d.depth), window, d), d),
        "long_cuts": pairs.long_cuts_report(x, y, args.k, args.jmax or d.depth - 1,
                                            window, d).to_dict(d),
        "k_equivalent": pairs.k_equivalent_up_to(x, y, args.k, d.depth, d),
    }
    _print_json(out)
    return 0


def _ev(result, d):
    return result.to_dict(d) if isinstance(result, pairs.PairEvidence) else result.to_dict()


def cmd_morphism(args) -> int:
    if args.op == "ptm":
        print(morphisms.ptm_word(args.length))
    elif args.op == "tau":
        m = morphisms.tau(args.j)
        print(morphisms.apply(m, args.apply) if args.apply is not None else json.dumps(m.table))
    elif args.op == "desub":
        r = morphisms.desubstitute(args.word, args.j)
        if isinstance(r, morphisms.Factorization):
            _print_json({"result": "unique", "upper": r.word, "letters": r.letters,
                         "offset": r.offset, "left": r.left, "right": r.right})
        elif isinstance(r, morphisms.Ambiguous):
            _print_json({"result": "ambiguous", "count": r.count})
        else:
            _print_json({"result": "no parse", "reason": r.reason})
    elif args.op == "tilde":
        print(morphisms.tilde_reduction(_load(args.diagram), args.n))
    return 0


def cmd_classify(args) -> int:
    d = _load(args.diagram)
    window = None
    if args.window:
        window = (-(args.window // 2), args.window - args.window // 2 - 1)
    params = analysis.SearchParams(args.max_depth, args.horizon, window, args.prefix_len,
                                   tuple(args.rules.split(",")), args.jmax, args.max_pairs)
    _print_json(analysis.class_evidence(d, params).to_dict())
    return 0


def cmd_sne(args) -> int:
    d = _load(args.diagram)
    rep = analysis.sne_evidence(d, args.max_k, args.horizon, None, args.prefix_len,
                                tuple(args.rules.split(",")))
    _print_json(asdict(rep))
    return 0


def cmd_telcheck(args) -> int:
    d = _load(args.diagram)
    x, y = (core.parse_pathspec(s, d) for s in args.pair)
    rep = analysis.telescope_correspondence(d, _ints(args.levels), x, y, args.k, args.j,
                                            args.window)
    out = asdict(rep)
    out["ok"] = rep.ok
    _print_json(out)
    return 0 if rep.ok else 1


def cmd_render(args) -> int:
    d = _load(args.diagram)
    if args.array:
        if not args.spec or args.window is None:
            raise SystemExit("--array needs --spec and --window")
        x = core.parse_pathspec(args.spec, d)
        sys.stdout.write(render.symbol_array(d, x, args.rows, args.window))
    else:
        sys.stdout.write(render.to_dot(d))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bvtk", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="build an example diagram as JSON")
    p.add_argument("name", choices=families.FAMILIES)
    p.add_argument("--levels", type=int, default=8)
    p.add_argument("--radices", type=_ints)
    p.add_argument("--counts", type=_ints)
    p.add_argument("--profile", type=_ints)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("validate", help="check a diagram and print a JSON report")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("orbit", help="k-coding of a path over a window of times")
    p.add_argument("--spec", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--window", type=_window, required=True)
    p.add_argument("--dots", type=int)
    p.add_argument("diagram")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("blocks", help="k-basic block at a vertex")
    p.add_argument("--vertex", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("diagram")
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("coding", help="coding of a vertex by level-j vertices")
    p.add_argument("--vertex", required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("diagram")
    p.set_defaults(func=cmd_coding)

    p = sub.add_parser("pair", help="depth, cuts and k-equivalence of two paths")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--jmax", type=int)
    p.add_argument("--window", type=_window)
    p.add_argument("diagram")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("morphism", help="substitutions, desubstitution and the tilde word")
    msub = p.add_subparsers(dest="op", required=True)
    q = msub.add_parser("ptm", help="Thue-Morse prefix")
    q.add_argument("--length", type=int, required=True)
    q = msub.add_parser("tau", help="apply tau(j) to a D/E word")
    q.add_argument("--j", type=int, required=True)
    q.add_argument("--apply")
    q = msub.add_parser("desub", help="desubstitute a D/E word")
    q.add_argument("--j", type=int, required=True)
    q.add_argument("word")
    q = msub.add_parser("tilde", help="reduced level-2 coding of v(n,1)")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("diagram")
    p.set_defaults(func=cmd_morphism)

    p = sub.add_parser("classify", help="bounded class evidence report")
    p.add_argument("--max-depth", type=int, default=3)
    p.add_argument("--horizon", type=int)
    p.add_argument("--window", type=int, help="window length M (default: per-pair windows)")
    p.add_argument("--prefix-len", type=int, default=2)
    p.add_argument("--rules", default="min,max,const,track")
    p.add_argument("--jmax", type=int)
    p.add_argument("--max-pairs", type=int, default=200)
    p.add_argument("diagram")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sne", help="search for k-equivalent pairs")
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--horizon", type=int)
    p.add_argument("--prefix-len", type=int, default=3)
    p.add_argument("--rules", default="min,max,const,track")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_sne)

    p = sub.add_parser("telcheck", help="depth/cut transfer under telescoping for one pair")
    p.add_argument("--levels", required=True)
    p.add_argument("--pair", nargs=2, required=True, metavar=("X", "Y"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--window", type=_window)
    p.add_argument("diagram")
    p.set_defaults(func=cmd_telcheck)

    p = sub.add_parser("render", help="Graphviz DOT or a symbol array")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--array", action="store_true")
    p.add_argument("--spec")
    p.add_argument("--rows", type=int, default=3)
    p.add_argument("--window", type=_window)
    p.add_argument("diagram")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (core.DiagramError, ValueError) as exc:
        print(f"bvtk: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
