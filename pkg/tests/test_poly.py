from hypothesis import given, strategies as st

from quasitoric.poly import Poly, monomials, num_monomials

terms = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-5, 5), max_size=5)
polys = terms.map(lambda t: Poly(2, t))


def test_monomials_descending_glex():
    assert list(monomials(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert num_monomials(3, 2) == 6


def test_zero_coefficients_dropped():
    assert Poly(2, {(1, 0): 0}) == Poly.zero(2)
    assert not Poly.zero(3)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a) == Poly.zero(2)


@given(polys)
def test_vector_round_trip(p):
    for k in range(0, 7):
        part = p.homogeneous_part(k)
        assert Poly.from_vector(2, k, part.to_vector(k)) == part


@given(polys)
def test_json_round_trip(p):
    assert Poly.from_json(2, p.to_json()) == p


def test_apply_matrix():
    x, y = Poly.var(2, 0), Poly.var(2, 1)
    # x -> x + y, y -> -y
    assert (x * y).apply_matrix([[1, 1], [0, -1]]) == -(x * y) - y * y


def test_canonical_and_format():
    x, y = Poly.var(2, 0), Poly.var(2, 1)
    assert (-(x * x) + y).canonical() == x * x - y
    assert (x * x + 2 * x * y).format(["u", "w"]) == "u^2 + 2*u*w"


def test_mod():
    assert Poly(1, {(2,): 3, (1,): 2}).mod(2) == Poly(1, {(2,): 1})
