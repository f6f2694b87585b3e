"""Hochster tables against closed forms and the product rule, with timings."""

import argparse
import time
from dataclasses import dataclass

from quasitoric.betti import (hochster_table, identify_simplex_polygon_product,
                              polygon_closed_form, product_table, simplex_closed_form)
from quasitoric.polytope import build_polygon, build_simplex, product


@dataclass
class Config:
    max_n: int = 5
    max_m: int = 5
    max_facets: int = 13
    jobs: int = 1


def timed(f, *a, **kw):
    t0 = time.perf_counter()
    out = f(*a, **kw)
    return out, time.perf_counter() - t0


def main(cfg):
    print("closed forms")
    for n in range(1, cfg.max_n + 1):
        t, dt = timed(hochster_table, build_simplex(n), jobs=cfg.jobs)
        print(f"  simplex({n})   match={t == simplex_closed_form(n)}  {dt:.3f}s")
    for m in range(1, cfg.max_m + 1):
        t, dt = timed(hochster_table, build_polygon(m + 2), jobs=cfg.jobs)
        print(f"  polygon({m + 2})   match={t == polygon_closed_form(m)}  {dt:.3f}s")

    print("simplex(n) x polygon(m+2)")
    for n in range(1, cfg.max_n + 1):
        for m in range(1, cfg.max_m + 1):
            if n + m + 3 > cfg.max_facets:
                continue
            p = product(build_simplex(n), build_polygon(m + 2))
            t, dt = timed(hochster_table, p, jobs=cfg.jobs)
            rule = t == product_table(simplex_closed_form(n), polygon_closed_form(m))
            print(f"  n={n} m={m} d={p.num_facets:>2}  product rule={rule}  "
                  f"identified={identify_simplex_polygon_product(t)}  "
                  f"beta(-1,4)={t[(1, 2)]}  {dt:.2f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f, v in Config().__dict__.items():
        ap.add_argument(f"--{f.replace('_', '-')}", type=int, default=v)
    main(Config(**vars(ap.parse_args())))
