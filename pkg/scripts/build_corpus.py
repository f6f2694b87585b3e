"""Write the JSON regression corpus under data/.

Every file here is an input the CLI accepts; the rings are produced by the
library itself from the polytope/matrix pairs next to them.
"""

import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from quasitoric.bundles import BundleSpec, projectivization_ring
from quasitoric.charmap import base_polytope, build_bundle_char_matrix, matrix_to_json
from quasitoric.cohomring import present_cohomology
from quasitoric.polytope import build_simplex

CUBE_N = [[1, 0, 0, -1, -1, -1], [0, 1, 0, 0, -1, -2], [0, 0, 1, -2, -1, -1]]
PHI = [[-1, -1, -1], [2, 1, 2], [0, 0, -1]]
HIRZ1 = [[1, 0, -1, -2], [0, 1, -1, -1]]     # base matrix of CP2 # CP2
CP2 = [[1, 0, -1], [0, 1, -1]]


@dataclass
class CorpusConfig:
    out: Path = Path(__file__).resolve().parent.parent / "data"


def dump(path, data):
    path.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")


def prism_json(m):
    # simplex(1) x polygon(m+2) in the bundle facet order
    n = 1
    poly = [n + 1 + i for i in range(m + 2)]
    order = list(range(n)) + [poly[m], poly[m + 1], n] + poly[:m]
    return {"kind": "product", "factors": [{"kind": "simplex", "n": 1},
                                           {"kind": "polygon", "edges": m + 2}], "order": order}


def main(cfg):
    out = cfg.out
    out.mkdir(parents=True, exist_ok=True)
    dump(out / "pentagon.json", {"kind": "polygon", "edges": 5})
    dump(out / "triangle.json", {"kind": "simplex", "n": 2})
    dump(out / "simplex2_x_pentagon.json", {"kind": "product", "factors": [
        {"kind": "simplex", "n": 2}, {"kind": "polygon", "edges": 5}]})
    dump(out / "prism.json", prism_json(1))
    dump(out / "cube.json", prism_json(2))

    ex1 = build_bundle_char_matrix(CP2, [[2]])
    dump(out / "example1_matrix.json", matrix_to_json(ex1.entries))
    bad = [list(r) for r in ex1.entries]
    for r, v in zip(bad, (-2, -1, -2)):
        r[4] = v
    dump(out / "example1_bad.json", matrix_to_json(bad))

    cube_m = build_bundle_char_matrix(HIRZ1, [[1, 1]])
    dump(out / "cubeM_matrix.json", matrix_to_json(cube_m.entries))
    dump(out / "cubeN_matrix.json", matrix_to_json(CUBE_N))
    dump(out / "cubeM.json", present_cohomology(cube_m.polytope, cube_m, ["x", "y", "z"]).to_json())
    dump(out / "cubeN.json", present_cohomology(cube_m.polytope, CUBE_N, ["X", "Y", "Z"]).to_json())
    dump(out / "phi.json", {"matrix": PHI})
    dump(out / "cube_split.json", {"n1": 1, "facets1": [0, 3], "n2": 2, "facets2": [1, 2, 4, 5]})

    dump(out / "hirz1_matrix.json", matrix_to_json(HIRZ1))
    base = present_cohomology(base_polytope(2), HIRZ1, ["x", "y"])
    dump(out / "hirz1_ring.json", base.to_json())
    cp2 = present_cohomology(build_simplex(2), CP2, ["t"])
    dump(out / "cp2_ring.json", cp2.to_json())
    dump(out / "spec_cp2_2.json", {"base_ring": "cp2_ring.json", "twists": [[2]]})
    dump(out / "spec_cp2_10.json", {"base_ring": "cp2_ring.json", "twists": [[1], [0]]})
    dump(out / "spec_hirz1_11.json", {"base_ring": "hirz1_ring.json", "twists": [[1, 1]]})
    dump(out / "spec_hirz1_01.json", {"base_ring": "hirz1_ring.json", "twists": [[0, 1]]})
    dump(out / "bundle_hirz1_11.json",
         projectivization_ring(BundleSpec(base, [[1, 1]])).to_json())

    from quasitoric.betti import hochster_table
    from quasitoric.polytope import build_polygon, product
    dump(out / "table_simplex2_x_pentagon.json",
         hochster_table(product(build_simplex(2), build_polygon(5))).to_json())
    print(f"wrote {len(list(out.glob('*.json')))} files to {out}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=CorpusConfig.out)
    main(CorpusConfig(ap.parse_args().out))
