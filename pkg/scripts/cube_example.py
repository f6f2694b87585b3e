"""Two characteristic matrices over the 3-cube: one a bundle, one not,
with isomorphic cohomology rings.

Prints both presentations, the isomorphism search result, the bundle
detection verdicts and the characteristic-class comparison.
"""

import argparse
from dataclasses import dataclass

from quasitoric.charmap import (CharMatrix, build_bundle_char_matrix, bundle_split,
                                detect_bundle_structure, equivalent)
from quasitoric.cohomring import present_cohomology
from quasitoric.isomorph import (RingMap, characteristic_class_preservation, ring_classes,
                                 search_iso, verify_iso)

BASE = [[1, 0, -1, -2], [0, 1, -1, -1]]
N_ROWS = [[1, 0, 0, -1, -1, -1], [0, 1, 0, 0, -1, -2], [0, 0, 1, -2, -1, -1]]
PHI = [[-1, -1, -1], [2, 1, 2], [0, 0, -1]]


@dataclass
class Config:
    bound: int = 2
    jobs: int = 1


def show_matrix(name, L):
    print(f"{name}:")
    for r in L.entries:
        print("   " + " ".join(f"{x:>3}" for x in r))


def main(cfg):
    M = build_bundle_char_matrix(BASE, [[1, 1]])
    N = CharMatrix(M.polytope, N_ROWS)
    show_matrix("M", M)
    show_matrix("N", N)
    print("equivalent as labelled matrices:", equivalent(M, N))

    split = bundle_split(1, 2)
    for name, L in (("M", M), ("N", N)):
        data = detect_bundle_structure(L, split)
        verdict = f"bundle, twists {[list(r) for r in data.twists]}" if data else "no bundle structure"
        print(f"{name}: {verdict}")

    rm = present_cohomology(M.polytope, M, ["x", "y", "z"])
    rn = present_cohomology(N.polytope, N, ["X", "Y", "Z"])
    print("H*(M) =", rm)
    print("H*(N) =", rn)

    phi = RingMap(rm, rn, PHI)
    print("phi verified:", verify_iso(phi).ok)
    maps = search_iso(rm, rn, cfg.bound, jobs=cfg.jobs)
    print(f"{len(maps)} isomorphisms with entries in [-{cfg.bound}, {cfg.bound}] (one per sign):")
    for m in maps:
        print("  ", [list(r) for r in m.matrix])

    rep = characteristic_class_preservation(phi, ring_classes(rm), ring_classes(rn))
    print("phi preserves w:", rep["w"], " p:", rep["p"], " fundamental class sign:", rep["top_form_sign"])


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=Config.bound)
    ap.add_argument("--jobs", type=int, default=Config.jobs)
    a = ap.parse_args()
    main(Config(a.bound, a.jobs))
