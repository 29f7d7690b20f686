"""Run the bounded class-evidence search on every example family.

Writes one JSON report per family and prints a compact flag table.
"""
import argparse
import json
from pathlib import Path

from bvtk import analysis as A
from bvtk import families as F


def build(levels: int) -> dict:
    return {
        "gj": F.gj(levels),
        "gj-mod": F.gj_modified(levels),
        "dm2ww": F.dm2ww(levels),
        "odometer": F.odometer("single", N=levels),
        "odometer-suo": F.odometer("suo", N=levels),
        "fig1": F.fig1_family(levels),
        "kite": F.kite_nondet(levels),
        "kite-det": F.kite_deterministic([3, 2, 2, 1], levels),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--levels", type=int, default=6)
    ap.add_argument("--max-depth", type=int, default=2)
    ap.add_argument("--prefix-len", type=int, default=2)
    ap.add_argument("--max-pairs", type=int, default=200)
    ap.add_argument("--out", type=Path, default=Path("reports"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, d in build(args.levels).items():
        params = A.SearchParams(max_depth=args.max_depth, prefix_len=args.prefix_len,
                                max_pairs_per_k=args.max_pairs)
        rep = A.class_evidence(d, params).to_dict()
        (args.out / f"{name}.json").write_text(json.dumps(rep, indent=1, default=str))
        flags = [k for k, v in rep["flags"].items() if v["value"]]
        counts = {k: v["total"] for k, v in rep["pair_counts"].items()}
        print(f"{name:13} pairs by depth {counts}  flags {flags}")


if __name__ == "__main__":
    main()
