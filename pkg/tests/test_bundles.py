import pytest
from hypothesis import given, settings, strategies as st

from quasitoric.bundles import (BundleSpec, bundle_relation, chern_isomorphic, dual_companion,
                                normalize_twists, projectivization_ring, relation_coefficients,
                                total_chern, translation_companion)
from quasitoric.charmap import base_polytope
from quasitoric.cohomring import present_cohomology
from quasitoric.errors import InvalidParameter, PreconditionError
from quasitoric.isomorph import RingMap, verify_iso
from quasitoric.poly import Poly
from quasitoric.sampling import make_rng, random_polygon_matrix

from conftest import P


def test_total_chern_examples(hirz1, p1xp1):
    assert total_chern(BundleSpec(hirz1, [[0, 0]])) == [Poly.const(2, 1), Poly.zero(2)]
    c = total_chern(BundleSpec(hirz1, [[1, 2]]))
    assert c[1] == P(2, {(1, 0): 1, (0, 1): 2})
    c = total_chern(BundleSpec(p1xp1, [[1, 0], [0, 1]]))
    assert c == [Poly.const(2, 1), P(2, {(1, 0): 1, (0, 1): 1}), P(2, {(1, 1): 1})]


def test_projectivization_over_hirz1(hirz1):
    ring = projectivization_ring(BundleSpec(hirz1, [[3, -1]]))
    assert ring.fiber_index == 2
    x, y, z = (Poly.var(3, i) for i in range(3))
    assert ring.relations[-1] == z * (3 * x - y + z)


def test_projectivization_trivial_over_cp2(cp2):
    ring = projectivization_ring(BundleSpec(cp2, [[0]]))
    t, x0 = Poly.var(2, 0), Poly.var(2, 1)
    assert set(ring.relations) == {t ** 3, x0 ** 2}
    assert ring.generators == ("t", "x0")


def test_projectivization_gives_cube_ring(cube_spec, ring_m):
    ring = projectivization_ring(cube_spec)
    # cube ring generators are (fiber, base1, base2); ours put the fiber last
    m = RingMap(ring_m, ring, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert verify_iso(m)
    images = {ring.normal_form(m.image(r)) for r in ring_m.relations}
    assert images == {Poly.zero(3)}
    assert {r.canonical() for r in ring.relations} == {m.image(r).canonical() for r in ring_m.relations}


def test_fiber_name_avoids_clash():
    base = present_cohomology(base_polytope(2), [[1, 0, -1, 0], [0, 1, 0, -1]], ["x0", "y"])
    assert projectivization_ring(BundleSpec(base, [[0, 0]])).generators[-1] == "x0_0"


def test_normalize_examples():
    assert normalize_twists([[0, 0]]) == ((0, 0),)
    assert normalize_twists([[2]]) == ((-2,),)
    assert normalize_twists([[1], [3]]) == ((-3,), (-2,))


rows = st.integers(1, 3).flatmap(lambda m: st.lists(
    st.lists(st.integers(-3, 3), min_size=m, max_size=m), min_size=1, max_size=3))


@given(rows, st.data())
def test_normalize_invariant_under_moves(t, data):
    full = [[0] * len(t[0])] + [list(r) for r in t]
    r = data.draw(st.integers(0, len(full) - 1))
    moved = [[a - b for a, b in zip(x, full[r])] for x in full]
    if data.draw(st.booleans()):
        moved = [[-a for a in x] for x in moved]
    moved = data.draw(st.permutations(moved))
    zero = [0] * len(t[0])
    moved = list(moved)
    moved.remove(zero)
    assert normalize_twists(moved) == normalize_twists(t)
    assert normalize_twists(normalize_twists(t)) == normalize_twists(t)


def test_chern_isomorphic(hirz1, p1xp1, cp2):
    s = BundleSpec(hirz1, [[1, 2], [0, 1]])
    assert chern_isomorphic(s, BundleSpec(hirz1, [[1, 2], [0, 1]]))
    assert chern_isomorphic(BundleSpec(p1xp1, [[1, 0], [0, 1]]), BundleSpec(p1xp1, [[0, 1], [1, 0]]))
    assert not chern_isomorphic(BundleSpec(p1xp1, [[2, 0]]), BundleSpec(p1xp1, [[0, 2]]))
    with pytest.raises(InvalidParameter):
        chern_isomorphic(s, BundleSpec(p1xp1, [[1, 2], [0, 1]]))
    with pytest.raises(InvalidParameter):
        chern_isomorphic(s, BundleSpec(hirz1, [[1, 2]]))


def test_chern_isomorphic_dimension_condition():
    from quasitoric.cohomring import ring_from_relations
    base6 = ring_from_relations(["t"], [{(4,): 1}])      # CP3-like base, top degree 3
    with pytest.raises(PreconditionError):
        chern_isomorphic(BundleSpec(base6, [[1]]), BundleSpec(base6, [[1]]))


def test_from_summands(hirz1):
    s = BundleSpec.from_summands(hirz1, [[1, 1], [2, 3]])
    assert s.twists == ((1, 2),)


def random_spec(seed):
    rng = make_rng(seed)
    m = rng.randint(1, 4)
    base = present_cohomology(base_polytope(m), random_polygon_matrix(rng, m + 2))
    n = rng.randint(1, 3)
    return BundleSpec(base, [[rng.randint(-3, 3) for _ in range(m)] for _ in range(n)])


def convolve_ones(ranks, n):
    out = [0] * (len(ranks) + n)
    for i, r in enumerate(ranks):
        for k in range(n + 1):
            out[i + k] += r
    return tuple(out)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_projectivization_free_module(seed):
    spec = random_spec(seed)
    ring = projectivization_ring(spec)
    h = ring.hilbert_function()
    assert not h.has_torsion
    assert h.ranks == convolve_ones(spec.base.hilbert_function().ranks, spec.n)
    assert relation_coefficients(spec) == total_chern(spec)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6), st.data())
def test_companions_are_ring_isomorphisms(seed, data):
    spec = random_spec(seed)
    src = projectivization_ring(spec)
    r = data.draw(st.integers(1, spec.n))
    for comp, mat in (translation_companion(spec, r), dual_companion(spec)):
        m = RingMap(src, projectivization_ring(comp), mat)
        assert verify_iso(m)
        assert normalize_twists(comp.twists) == normalize_twists(spec.twists)


def test_relation_expansion(cube_spec):
    rel = bundle_relation(cube_spec)
    x, y, z = (Poly.var(3, i) for i in range(3))
    assert rel == z * (z + x + y)


def test_spec_json(cube_spec):
    back = BundleSpec.from_json(cube_spec.to_json())
    assert back.twists == cube_spec.twists
    assert back.base.relations == cube_spec.base.relations


def test_bad_specs(hirz1):
    with pytest.raises(InvalidParameter):
        BundleSpec(hirz1, [])
    with pytest.raises(InvalidParameter):
        BundleSpec(hirz1, [[1]])
