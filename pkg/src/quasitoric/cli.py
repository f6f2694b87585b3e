"""Command-line front end.

Exit codes: 0 affirmative, 1 well-formed negative answer, 2 input error,
3 internal invariant violation.
"""

import argparse
import json
import os
import sys

from . import betti as bt
from .bundles import (BundleSpec, chern_isomorphic, normalize_twists, projectivization_ring,
                      total_chern)
from .charmap import (CharMatrix, build_bundle_char_matrix, check_nonsingular, matrix_from_json,
                      matrix_to_json)
from .cohomring import (GradedRingPresentation, poincare_pairing, present_cohomology)
from .errors import InvariantViolation, QuasitoricError, ResourceLimit
from .isomorph import (RingMap, characteristic_class_preservation,
                       fiber_automorphisms, map_from_json, ring_classes, search_iso, verify_iso)
from .poly import Poly
from .polytope import polytope_from_json

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _inline_or_file(text):
    """Parse ``text`` as JSON, or load it as a file path if that fails."""
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return _load(text)


def _load_ring(path_or_data, base_dir="."):
    data = path_or_data
    if isinstance(data, str):
        p = data if os.path.isabs(data) else os.path.join(base_dir, data)
        data = _load(p)
    return GradedRingPresentation.from_json(data)


def _load_spec(path):
    data = _load(path)
    base = _load_ring(data["base_ring"], os.path.dirname(os.path.abspath(path)))
    return BundleSpec(base, data["twists"])


def _facets(v):
    return "{" + ",".join(f"F{i + 1}" for i in v) + "}"


def _poly_json(polys):
    return [p.to_json() for p in polys]


class Output:
    def __init__(self, args):
        self.json = args.format == "json"
        self.path = getattr(args, "output", None)

    def emit(self, data, text):
        body = json.dumps(data, indent=2) + "\n" if self.json else text.rstrip("\n") + "\n"
        if self.path:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(body)
        else:
            sys.stdout.write(body)


# subcommands -------------------------------------------------------------------

def _closed_table(data):
    kind = data.get("kind")
    if kind == "simplex":
        return bt.simplex_closed_form(int(data["n"]))
    if kind == "polygon":
        return bt.polygon_closed_form(int(data["edges"]) - 2)
    if kind == "product":
        tables = [_closed_table(f) for f in data["factors"]]
        out = tables[0]
        for t in tables[1:]:
            out = bt.product_table(out, t)
        return out
    raise InputError(f"no closed form for polytope kind {kind!r}")


def cmd_betti(args, out):
    data = _load(args.polytope)
    if args.method == "hochster":
        table = bt.hochster_table(polytope_from_json(data), cap=args.cap, jobs=args.jobs)
    elif args.method == "closed":
        table = _closed_table(data)
    else:
        if data.get("kind") != "product":
            raise InputError("--method product needs a product polytope")
        tables = [bt.hochster_table(polytope_from_json(f), cap=args.cap, jobs=args.jobs)
                  for f in data["factors"]]
        table = tables[0]
        for t in tables[1:]:
            table = bt.product_table(table, t)
    lines = [f"beta^(-i,2j), dim {table.dim}, {table.num_facets} facets", table.format()]
    lines += [f"({i},{j}): {v}" for (i, j), v in table.entries.items()]
    out.emit(table.to_json(), "\n".join(lines))
    return EXIT_OK


def cmd_nonsingular(args, out):
    p = polytope_from_json(_load(args.polytope))
    p.require_valid()
    res = check_nonsingular(p, matrix_from_json(_load(args.matrix)))
    if res.ok:
        out.emit({"ok": True}, "non-singular at every vertex")
        return EXIT_OK
    out.emit({"ok": False, "vertex": list(res.vertex), "det": res.det},
             f"singular at vertex {_facets(res.vertex)}: det = {res.det}")
    return EXIT_NO


def cmd_cohomology(args, out):
    p = polytope_from_json(_load(args.polytope))
    p.require_valid()
    L = CharMatrix(p, matrix_from_json(_load(args.matrix)))
    res = check_nonsingular(p, L)
    if not res.ok:
        raise InputError(f"matrix is singular at vertex {_facets(res.vertex)} (det {res.det})")
    names = args.names.split(",") if args.names else None
    ring = present_cohomology(p, L, names)
    h = ring.hilbert_function()
    text = [repr(ring), f"ranks by degree: {list(h.ranks)}"]
    if h.torsion:
        text.append(f"torsion: {h.torsion}")
    out.emit(ring.to_json(), "\n".join(text))
    return EXIT_OK


def cmd_iso_verify(args, out):
    src, tgt = _load_ring(args.source), _load_ring(args.target)
    m = RingMap(src, tgt, map_from_json(_load(args.map)))
    res = verify_iso(m)
    text = "isomorphism verified" if res.ok else f"{res.kind}: {res.message}"
    out.emit(res.to_json(), text)
    return EXIT_OK if res.ok else EXIT_NO


def cmd_iso_search(args, out):
    src, tgt = _load_ring(args.source), _load_ring(args.target)
    maps = search_iso(src, tgt, args.bound, jobs=args.jobs)
    data = {"bound": args.bound, "count": len(maps), "maps": [m.to_json() for m in maps]}
    if not maps:
        out.emit(data, f"none found up to bound {args.bound}")
        return EXIT_NO
    lines = [f"{len(maps)} isomorphism(s) up to bound {args.bound} (one per global sign):"]
    lines += [json.dumps([list(r) for r in m.matrix]) for m in maps]
    out.emit(data, "\n".join(lines))
    return EXIT_OK


def cmd_bundle_build(args, out):
    base = matrix_from_json(_load(args.base_matrix))
    twists = _inline_or_file(args.twists)
    L = build_bundle_char_matrix(base, twists)
    rows = "\n".join(" ".join(f"{x:>3}" for x in r) for r in L.entries)
    out.emit(matrix_to_json(L.entries), rows)
    return EXIT_OK


def cmd_bundle_ring(args, out):
    spec = BundleSpec(_load_ring(args.base_ring), _inline_or_file(args.twists))
    ring = projectivization_ring(spec)
    out.emit(ring.to_json(), repr(ring))
    return EXIT_OK


def cmd_bundle_chern(args, out):
    s1 = _load_spec(args.spec1)
    c1 = total_chern(s1)
    names = s1.base.generators
    data = {"chern": _poly_json(c1)}
    lines = [f"c_{k} = {c.format(names)}" for k, c in enumerate(c1)]
    code = EXIT_OK
    if args.spec2:
        s2 = _load_spec(args.spec2)
        same = chern_isomorphic(s1, s2)
        data["chern2"] = _poly_json(total_chern(s2))
        data["isomorphic"] = same
        lines.append("total Chern classes agree" if same else "total Chern classes differ")
        code = EXIT_OK if same else EXIT_NO
    out.emit(data, "\n".join(lines))
    return code


def cmd_bundle_normalize(args, out):
    t = normalize_twists(_inline_or_file(args.twists))
    out.emit({"twists": [list(r) for r in t]}, json.dumps([list(r) for r in t]))
    return EXIT_OK


def cmd_rigidity(args, out):
    table = bt.BettiTable.from_json(_load(args.table))
    if not bt.check_duality(table):
        out.emit({"match": None, "duality": False}, "table violates duality; not a polytope table")
        return EXIT_NO
    pair = bt.identify_simplex_polygon_product(table)
    tag = bt.classify_table(table)
    data = {"match": list(pair) if pair else None, "duality": True,
            "classification": [tag[0], list(tag[1]) if isinstance(tag[1], tuple) else tag[1]]
            if tag else None}
    if pair is None:
        out.emit(data, "not the table of a simplex x polygon product")
        return EXIT_NO
    n, m = pair
    out.emit(data, f"matches simplex({n}) x polygon({m + 2}): (n, m) = ({n}, {m})")
    return EXIT_OK


def _classes_json(ring, classes):
    data = {}
    if "w" in classes:
        data["w"] = _poly_json(classes["w"])
    if "p" in classes:
        data["p"] = _poly_json(classes["p"])
    if "pairing" in classes:
        rep = poincare_pairing(ring)
        data["pairing"] = [list(r) for r in rep.matrix]
        data["determinant"] = rep.determinant
        data["signature"] = rep.signature
        data["p1"] = 3 * rep.signature
    return data


def _classes_from_json(ring, data):
    g = ring.ngens
    out = {}
    if "w" in data:
        out["w"] = [Poly.from_json(g, x) for x in data["w"]]
    if "p" in data:
        out["p"] = [Poly.from_json(g, x) for x in data["p"]]
    if "pairing" in data:
        out["pairing"] = tuple(tuple(r) for r in data["pairing"])
    return out


def cmd_classes(args, out):
    ring = _load_ring(args.ring)
    c1 = ring_classes(ring)
    if not args.map:
        data = _classes_json(ring, c1)
        names = ring.generators
        lines = []
        if "w" in c1:
            lines.append("w = " + " + ".join(p.format(names) for p in c1["w"] if p) + "  (mod 2)")
        if "p" in c1:
            lines.append("p = " + " + ".join(p.format(names) for p in c1["p"] if p))
        if "pairing" in data:
            lines.append(f"pairing {data['pairing']}, det {data['determinant']}, "
                         f"signature {data['signature']}, p1 = {data['p1']}")
        if not lines:
            lines.append("no class data (ring carries no facet classes and is not 4-dimensional)")
        out.emit(data, "\n".join(lines))
        return EXIT_OK
    if not args.target:
        raise InputError("--map needs --target")
    tgt = _load_ring(args.target)
    c2 = _classes_from_json(tgt, _load(args.classes)) if args.classes else ring_classes(tgt)
    m = RingMap(ring, tgt, map_from_json(_load(args.map)))
    report = characteristic_class_preservation(m, c1, c2)
    checks = {k: v for k, v in report.items() if k in ("w", "p", "pairing")}
    lines = [f"{k}: {'preserved' if v else 'NOT preserved'}" for k, v in checks.items()]
    lines.append(f"fundamental class sign: {report.get('top_form_sign')}")
    out.emit(report, "\n".join(lines))
    return EXIT_OK if all(checks.values()) else EXIT_NO


def cmd_automorphisms(args, out):
    spec = _load_spec(args.spec)
    cands = fiber_automorphisms(spec)
    names = spec.base.generators
    lines = [f"x0 -> {'+' if c.epsilon > 0 else '-'}x0 + ({c.omega.format(names)})" for c in cands]
    out.emit({"candidates": [c.to_json(names) for c in cands]}, "\n".join(lines))
    return EXIT_OK


# parser --------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("-o", "--output", help="write the result here instead of stdout")

    ap = argparse.ArgumentParser(prog="quasitoric", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", parents=[common], help="bigraded Betti table")
    p.add_argument("-p", "--polytope", required=True)
    p.add_argument("--method", choices=("hochster", "closed", "product"), default="hochster")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=bt.DEFAULT_FACET_CAP)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("nonsingular", parents=[common], help="check a characteristic matrix")
    p.add_argument("-p", "--polytope", required=True)
    p.add_argument("-m", "--matrix", required=True)
    p.set_defaults(func=cmd_nonsingular)

    p = sub.add_parser("cohomology", parents=[common], help="cohomology ring presentation")
    p.add_argument("-p", "--polytope", required=True)
    p.add_argument("-m", "--matrix", required=True)
    p.add_argument("--names", help="comma separated generator names")
    p.set_defaults(func=cmd_cohomology)

    iso = sub.add_parser("iso", help="ring isomorphisms").add_subparsers(dest="iso_command", required=True)
    p = iso.add_parser("verify", parents=[common])
    p.add_argument("-s", "--source", required=True)
    p.add_argument("-t", "--target", required=True)
    p.add_argument("--map", required=True)
    p.set_defaults(func=cmd_iso_verify)
    p = iso.add_parser("search", parents=[common])
    p.add_argument("-s", "--source", required=True)
    p.add_argument("-t", "--target", required=True)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_iso_search)

    bun = sub.add_parser("bundle", help="projective bundles").add_subparsers(dest="bundle_command", required=True)
    p = bun.add_parser("build", parents=[common])
    p.add_argument("--base-matrix", required=True)
    p.add_argument("--twists", required=True, help="JSON matrix or a file holding one")
    p.set_defaults(func=cmd_bundle_build)
    p = bun.add_parser("ring", parents=[common])
    p.add_argument("--base-ring", required=True)
    p.add_argument("--twists", required=True)
    p.set_defaults(func=cmd_bundle_ring)
    p = bun.add_parser("chern", parents=[common])
    p.add_argument("--spec1", required=True)
    p.add_argument("--spec2")
    p.set_defaults(func=cmd_bundle_chern)
    p = bun.add_parser("normalize", parents=[common])
    p.add_argument("--twists", required=True)
    p.set_defaults(func=cmd_bundle_normalize)

    p = sub.add_parser("rigidity", parents=[common], help="recognise simplex x polygon tables")
    p.add_argument("--table", required=True)
    p.set_defaults(func=cmd_rigidity)

    p = sub.add_parser("classes", parents=[common], help="characteristic classes")
    p.add_argument("--ring", required=True)
    p.add_argument("--map")
    p.add_argument("--target")
    p.add_argument("--classes", help="class data of the target (output of `classes --format json`)")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("automorphisms", parents=[common], help="fiberwise automorphism candidates")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_automorphisms)
    return ap


def run(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    out = Output(args)
    try:
        return args.func(args, out)
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, QuasitoricError, ValueError, KeyError, TypeError, IndexError) as exc:
        msg = f"missing field {exc}" if isinstance(exc, KeyError) else str(exc)
        print(f"input error: {msg}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
