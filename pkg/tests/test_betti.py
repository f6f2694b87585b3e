import json

import pytest

from quasitoric.betti import (BettiTable, check_duality, classify_table, hochster_table,
                              identify_simplex_polygon_product, minimal_nonface_count_by_degree,
                              polygon_closed_form, product_table, simplex_closed_form)
from quasitoric.cohomring import stanley_reisner_ideal
from quasitoric.errors import InvalidParameter, ResourceLimit
from quasitoric.polytope import build_polygon, build_simplex, product

PENTAGON = {(0, 0): 1, (1, 2): 5, (2, 3): 5, (3, 5): 1}
D2_X_G5 = {(0, 0): 1, (1, 2): 5, (1, 3): 1, (2, 3): 5, (2, 5): 5, (3, 5): 1, (3, 6): 5, (4, 8): 1}


def test_hochster_examples():
    assert hochster_table(build_polygon(5)).entries == PENTAGON
    assert hochster_table(build_simplex(2)).entries == {(0, 0): 1, (1, 3): 1}
    s = build_simplex(1)
    cube = product(product(s, s), s)
    assert hochster_table(cube).entries == {(0, 0): 1, (1, 2): 3, (2, 4): 3, (3, 6): 1}


def test_facet_cap():
    with pytest.raises(ResourceLimit, match="9 facets"):
        hochster_table(build_polygon(9), cap=8)


@pytest.mark.parametrize("n", [1, 2, 5])
def test_simplex_closed_form(n):
    assert simplex_closed_form(n).entries == {(0, 0): 1, (1, n + 1): 1}


def test_closed_form_errors():
    with pytest.raises(InvalidParameter):
        simplex_closed_form(0)
    with pytest.raises(InvalidParameter):
        polygon_closed_form(0)


def test_polygon_closed_form_values():
    assert polygon_closed_form(3).entries == PENTAGON
    assert polygon_closed_form(2).entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert polygon_closed_form(1) == simplex_closed_form(2)


@pytest.mark.parametrize("n", range(1, 6))
def test_hochster_matches_simplex_formula(n):
    assert hochster_table(build_simplex(n)) == simplex_closed_form(n)


@pytest.mark.parametrize("m", range(1, 6))
def test_hochster_matches_polygon_formula(m):
    assert hochster_table(build_polygon(m + 2)) == polygon_closed_form(m)


def test_product_table_examples():
    t = product_table(simplex_closed_form(2), polygon_closed_form(3))
    assert t.entries == D2_X_G5
    unit = BettiTable({(0, 0): 1}, 0, 0)
    assert product_table(t, unit) == t
    assert product_table(simplex_closed_form(1), simplex_closed_form(1)).entries == \
        hochster_table(build_polygon(4)).entries


FACTORS = [build_simplex(1), build_simplex(2), build_simplex(3), build_polygon(4),
           build_polygon(5), build_polygon(6)]


PAIRS = [(a, b) for a in FACTORS for b in FACTORS if a.num_facets + b.num_facets <= 11]


@pytest.mark.parametrize("p1,p2", PAIRS, ids=lambda p: p.label)
def test_product_rule(p1, p2):
    assert hochster_table(product(p1, p2)) == product_table(hochster_table(p1), hochster_table(p2))


@pytest.mark.slow
@pytest.mark.parametrize("p1,p2", [(build_polygon(6), build_polygon(6)),
                                   (build_polygon(7), build_polygon(7)),
                                   (build_simplex(3), build_polygon(9))])
def test_product_rule_large(p1, p2):
    assert hochster_table(product(p1, p2)) == product_table(hochster_table(p1), hochster_table(p2))


def test_duality():
    assert check_duality(hochster_table(build_polygon(5)))
    assert check_duality(simplex_closed_form(3))
    assert not check_duality(BettiTable({(0, 0): 1, (1, 2): 5, (2, 3): 4, (3, 5): 1}, 2, 5))
    with pytest.raises(InvalidParameter):
        check_duality(BettiTable({(0, 0): 1}))


@pytest.mark.parametrize("p", [build_polygon(7), product(build_simplex(2), build_polygon(5)),
                               product(build_polygon(4), build_polygon(5))])
def test_duality_and_minimal_nonfaces(p):
    t = hochster_table(p)
    assert check_duality(t)
    assert t[(0, 0)] == 1 and t[(p.num_facets - p.dim, p.num_facets)] == 1
    by_size = {}
    for s in stanley_reisner_ideal(p):
        by_size[len(s)] = by_size.get(len(s), 0) + 1
    assert minimal_nonface_count_by_degree(t) == by_size


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 3), (2, 5), (3, 4)])
def test_beta_1_4_of_products(n, m):
    t = hochster_table(product(build_simplex(n), build_polygon(m + 2)))
    assert t[(1, 2)] == (m + 2) * (m - 1) // 2


def test_beta_1_4_with_interval_fiber():
    # for n = 1 the interval's two facets add one more minimal non-face of size 2
    t = hochster_table(product(build_simplex(1), build_polygon(5)))
    assert t[(1, 2)] == 5 + 1


def test_identify():
    t = hochster_table(product(build_simplex(2), build_polygon(5)))
    assert identify_simplex_polygon_product(t) == (2, 3)
    s = build_simplex(1)
    cube = hochster_table(product(s, build_polygon(4)))
    assert identify_simplex_polygon_product(cube) == (1, 2)
    assert identify_simplex_polygon_product(hochster_table(build_polygon(5))) is None


def test_identify_rejects_other_polytopes_with_same_shape():
    # same dimension and facet count as simplex(2) x pentagon but not that product
    t = hochster_table(product(build_polygon(4), build_polygon(4)))
    assert identify_simplex_polygon_product(t) is None


def test_classify():
    assert classify_table(simplex_closed_form(3)) == ("simplex", 3)
    assert classify_table(polygon_closed_form(4)) == ("polygon", 4)
    assert classify_table(product_table(simplex_closed_form(2), polygon_closed_form(3))) == \
        ("simplex_x_polygon", (2, 3))


def test_json_round_trip():
    t = hochster_table(product(build_simplex(2), build_polygon(5)))
    assert BettiTable.from_json(json.loads(json.dumps(t.to_json()))) == t


def test_parallel_is_deterministic():
    p = product(build_simplex(2), build_polygon(6))
    assert hochster_table(p, jobs=3) == hochster_table(p)
