"""Isomorphism search between CP1-bundles over CP2 # CP2 for every twist pair
in a box, checking that each isomorphism found keeps the base subring."""

import argparse
import time
from dataclasses import dataclass
from itertools import product as iproduct

from quasitoric.bundles import BundleSpec, normalize_twists, projectivization_ring
from quasitoric.charmap import base_polytope
from quasitoric.cohomring import present_cohomology
from quasitoric.isomorph import base_preservation, search_iso

BASE = [[1, 0, -1, -2], [0, 1, -1, -1]]


@dataclass
class Config:
    box: int = 2
    bound: int = 2
    jobs: int = 1


def main(cfg):
    base = present_cohomology(base_polytope(2), BASE, ["x", "y"])
    twists = list(iproduct(range(-cfg.box, cfg.box + 1), repeat=2))
    rings = {t: projectivization_ring(BundleSpec(base, [list(t)])) for t in twists}
    t0 = time.perf_counter()
    classes = {}
    violations = pairs = 0
    for a in twists:
        for b in twists:
            if b < a:
                continue
            pairs += 1
            maps = search_iso(rings[a], rings[b], cfg.bound, jobs=cfg.jobs)
            violations += sum(not base_preservation(m) for m in maps)
            if maps:
                classes.setdefault(a, set()).add(b)
    print(f"{pairs} pairs, {violations} maps moving the base subring, {time.perf_counter() - t0:.1f}s")
    seen = set()
    for a in twists:
        if a in seen:
            continue
        group = sorted(classes.get(a, {a}) | {a})
        seen.update(group)
        normal = sorted({normalize_twists([list(t)]) for t in group})
        print(f"  ring class {group}  twist normal forms {[list(map(list, n)) for n in normal]}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f, v in Config().__dict__.items():
        ap.add_argument(f"--{f}", type=int, default=v)
    main(Config(**vars(ap.parse_args())))
