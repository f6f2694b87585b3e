"""Acceptance criteria, one test and one PASS/FAIL line each.

All comparisons are exact integer equality; the only tolerances are the
wall-clock limits noted per criterion.
"""

import time

from quasitoric.betti import (hochster_table, identify_simplex_polygon_product,
                              polygon_closed_form, product_table, simplex_closed_form)
from quasitoric.bundles import BundleSpec, projectivization_ring, relation_coefficients, total_chern
from quasitoric.charmap import (CharMatrix, base_polytope, build_bundle_char_matrix, bundle_split,
                                check_nonsingular, detect_bundle_structure)
from quasitoric.cohomring import poincare_pairing, present_cohomology
from quasitoric.isomorph import (RingMap, base_preservation, chern_identity, fiber_automorphisms,
                                 pairing_congruence, search_iso, verify_iso)
from quasitoric.poly import Poly
from quasitoric.polytope import build_polygon, build_simplex, product
from quasitoric.sampling import make_rng, random_polygon_matrix, random_twists

from conftest import ACCEPTANCE_LINES, CUBE_N, PHI

LIMIT_1 = 10.0      # seconds
LIMIT_2 = 60.0
LIMIT_6 = 300.0


def report(n, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_1_closed_forms():
    t0 = time.perf_counter()
    bad = [f"simplex({n})" for n in range(1, 6) if hochster_table(build_simplex(n)) != simplex_closed_form(n)]
    bad += [f"polygon({m + 2})" for m in range(1, 6)
            if hochster_table(build_polygon(m + 2)) != polygon_closed_form(m)]
    dt = time.perf_counter() - t0
    report(1, not bad and dt < LIMIT_1,
           f"Hochster = closed forms for n=1..5, m=1..5; mismatches {bad or 'none'}; "
           f"{dt:.2f}s (limit {LIMIT_1:.0f}s)")


def test_criterion_2_product_rule():
    t0 = time.perf_counter()
    bad = []
    for n in (1, 2, 3):
        for m in (1, 2, 3):
            s, g = build_simplex(n), build_polygon(m + 2)
            if hochster_table(product(s, g)) != product_table(hochster_table(s), hochster_table(g)):
                bad.append((n, m))
    dt = time.perf_counter() - t0
    report(2, not bad and dt < LIMIT_2,
           f"product rule on 9 simplex x polygon pairs; mismatches {bad or 'none'}; "
           f"{dt:.2f}s (limit {LIMIT_2:.0f}s)")


def corrupted_variants(t):
    out = []
    for key, v in t.entries.items():
        out.append(t.with_entry(key, v + 1))
    out.append(t.with_entry((1, 4), 1))
    out.append(t.with_entry((2, 4), 1))
    return out[:10]


def test_criterion_3_rigidity():
    t = hochster_table(product(build_simplex(2), build_polygon(5)))
    hit = identify_simplex_polygon_product(t)
    variants = corrupted_variants(t)
    false_hits = [v.entries for v in variants if identify_simplex_polygon_product(v) is not None]
    report(3, hit == (2, 3) and len(variants) == 10 and not false_hits,
           f"recognised {hit} on the simplex(2) x pentagon table; "
           f"{len(variants) - len(false_hits)}/10 corrupted variants rejected")


def test_criterion_4_cube_regression(cube_m):
    p = cube_m.polytope
    cube_n = CharMatrix(p, CUBE_N)
    rm = present_cohomology(p, cube_m, ["x", "y", "z"])
    rn = present_cohomology(p, cube_n, ["X", "Y", "Z"])
    x, y, z = (Poly.var(3, i) for i in range(3))
    expected = {x * (x + y + z), y * (y + 2 * z), z * (y + z)}
    ring_ok = {r.canonical() for r in rm.relations} == expected
    verified = verify_iso(RingMap(rm, rn, PHI)).ok
    found = {m.matrix for m in search_iso(rm, rn, 2)}
    neg = tuple(tuple(-a for a in r) for r in PHI)
    searched = tuple(map(tuple, PHI)) in found or neg in found    # search lists one sign
    split = bundle_split(1, 2)
    bm = detect_bundle_structure(cube_m, split)
    bn = detect_bundle_structure(cube_n, split)
    bundle_ok = bm is not None and bm.twists == ((1, 1),) and bn is None
    report(4, ring_ok and verified and searched and bundle_ok,
           f"ring {'ok' if ring_ok else 'WRONG'}; verify_iso(phi) {verified}; "
           f"search bound 2 finds phi {searched} ({len(found)} maps); "
           f"bundle for M {bm is not None}, for N {bn is not None}")


def test_criterion_5_bundle_round_trip():
    rng = make_rng(5)
    failures = 0
    for _ in range(50):
        n, m = rng.randint(1, 3), rng.randint(1, 4)
        base = random_polygon_matrix(rng, m + 2, box=3)
        twists = random_twists(rng, n, m, box=3)
        L = build_bundle_char_matrix(base, twists)
        data = detect_bundle_structure(L, bundle_split(n, m))
        ok = (check_nonsingular(L.polytope, L).ok and data is not None
              and data.base == tuple(map(tuple, base)) and data.twists == tuple(map(tuple, twists)))
        failures += not ok
    report(5, failures == 0, f"50 random (base, twists) inputs, m<=4, n<=3, |entries|<=3; "
                             f"{50 - failures}/50 round trips exact and non-singular")


def twist_pairs(rng, count):
    pairs = []
    for k in range(count):
        a = [rng.randint(-2, 2), rng.randint(-2, 2)]
        if k % 3 == 0:
            b = list(a)                      # guaranteed isomorphic
        else:
            b = [rng.randint(-2, 2), rng.randint(-2, 2)]
        pairs.append((a, b))
    return pairs


def test_criterion_6_base_preservation(hirz1):
    t0 = time.perf_counter()
    pairs = twist_pairs(make_rng(6), 24)
    total = with_iso = 0
    bad = []
    for a, b in pairs:
        r1 = projectivization_ring(BundleSpec(hirz1, [a]))
        r2 = projectivization_ring(BundleSpec(hirz1, [b]))
        maps = search_iso(r1, r2, 2)
        total += len(maps)
        with_iso += bool(maps)
        bad += [(a, b, m.matrix) for m in maps if not base_preservation(m)]
    dt = time.perf_counter() - t0
    report(6, not bad and len(pairs) >= 20 and dt < LIMIT_6,
           f"{len(pairs)} twist pairs over CP2#CP2, {with_iso} isomorphic, {total} maps found, "
           f"{len(bad)} violate base preservation; {dt:.1f}s (limit {LIMIT_6:.0f}s)")


def test_criterion_7_pairing(cp2, p1xp1, hirz1, hirz1_literal):
    rings = [cp2, p1xp1, hirz1]
    rng = make_rng(7)
    for _ in range(20):
        k = rng.randint(3, 8)
        rings.append(present_cohomology(base_polytope(k - 2), random_polygon_matrix(rng, k)))
    dets = [abs(poincare_pairing(r).determinant) for r in rings]
    # every verified iso between 4-dimensional rings in the corpus
    corpus = [cp2, p1xp1, hirz1, hirz1_literal] + rings[3:9]
    checked = failed = 0
    for r1 in corpus:
        for r2 in corpus:
            if r1.ngens != r2.ngens or r1.ngens > 3:
                continue
            for m in search_iso(r1, r2, 2):
                checked += 1
                failed += pairing_congruence(m) is None
    ok = all(d == 1 for d in dets) and checked > 0 and failed == 0
    report(7, ok, f"|det| = 1 on {sum(d == 1 for d in dets)}/{len(dets)} rings; "
                  f"P G2 P^T = +-G1 on {checked - failed}/{checked} verified isomorphisms")


def convolve_ones(ranks, n):
    out = [0] * (len(ranks) + n)
    for i, r in enumerate(ranks):
        for k in range(n + 1):
            out[i + k] += r
    return tuple(out)


def test_criterion_8_projectivization():
    rng = make_rng(8)
    bad = 0
    for _ in range(30):
        m = rng.randint(1, 4)
        base = present_cohomology(base_polytope(m), random_polygon_matrix(rng, m + 2))
        spec = BundleSpec(base, random_twists(rng, rng.randint(1, 3), m))
        ring = projectivization_ring(spec)
        ok = (ring.hilbert_function().ranks == convolve_ones(base.hilbert_function().ranks, spec.n)
              and relation_coefficients(spec) == total_chern(spec))
        bad += not ok
    report(8, bad == 0, f"30 random specs; Hilbert convolution and Chern coefficients hold on {30 - bad}/30")


def test_criterion_9_fiber_automorphisms(cp2):
    t = Poly.var(1, 0)
    cases = [([[0]], [(1, Poly.zero(1)), (-1, Poly.zero(1))]),
             ([[2]], [(1, Poly.zero(1)), (-1, -2 * t)]),
             ([[1], [0]], [(1, Poly.zero(1))])]
    results = []
    for twists, want in cases:
        spec = BundleSpec(cp2, twists)
        got = fiber_automorphisms(spec)
        exact = [(c.epsilon, c.omega) for c in got] == want
        # re-expand the Chern identity independently of the candidate's certificate
        rechecked = True
        for c in got:
            if c.epsilon == -1:
                lhs, rhs = chern_identity(spec, c.omega)
                rechecked &= lhs == rhs
        results.append(exact and rechecked)
    report(9, all(results), f"candidate sets exact on {sum(results)}/3 worked cases "
                            f"(twists 0; [[2]]; [[1],[0]] over CP2)")


def test_criterion_10_informational():
    line = ("[INFO] criterion 10: diffeomorphism classifications rest on cited smooth "
            "classification results and are not computed; their algebraic hypotheses are "
            "covered by criteria 4, 6 and 7")
    ACCEPTANCE_LINES.append(line)
    print(line)
