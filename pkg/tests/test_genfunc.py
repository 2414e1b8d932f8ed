import random

import pytest
from hypothesis import given, strategies as st

from oracles import random_graph
from raagtc.cliques import max_clique_size
from raagtc.genfunc import (
    CatalogError,
    IntPolynomial,
    RationalGF,
    catalog_genfunc,
    expand_series,
    format_poly,
    generating_polynomial,
    poly_arith,
)
from raagtc.graph import Graph, parse_graph
from raagtc.solver import z_sequence

P = IntPolynomial.of
P3 = parse_graph("a b\nb c")


def test_poly_arith_examples():
    one_minus_x = P(1, -1)
    assert poly_arith(one_minus_x, one_minus_x, "mul") == P(1, -2, 1)
    assert poly_arith(P(0, 2, -1), IntPolynomial(), "add") == P(0, 2, -1)
    assert poly_arith(P(0, 2, -1), P(1), "mul") == P(0, 2, -1)
    assert poly_arith(P(1, 2), P(1, 2), "sub").is_zero()
    with pytest.raises(ValueError):
        poly_arith(P(1), P(1), "div")


def test_canonical_trim():
    assert P(1, 0, 0).coeffs == (1,)
    assert IntPolynomial((0, 0)).degree == -1
    with pytest.raises(TypeError):
        IntPolynomial((1.5,))


coeff_lists = st.lists(st.integers(-50, 50), max_size=8).map(lambda c: IntPolynomial(tuple(c)))


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == IntPolynomial()
    for x in (-2, 0, 1, 3):
        assert (a * b)(x) == a(x) * b(x)


@given(coeff_lists)
def test_divide_by_one_minus_x(p):
    q, rem = p.divmod_one_minus_x()
    assert q * P(1, -1) + P(rem) == p


def test_expand_series_examples():
    assert expand_series(RationalGF(P(0, 1)), 4) == [0, 1, 2, 3, 4]
    assert expand_series(RationalGF(P(0, 2, -1)), 4) == [0, 2, 3, 4, 5]
    assert expand_series(RationalGF(IntPolynomial()), 5) == [0] * 6


@given(coeff_lists, st.integers(0, 3))
def test_expand_series_against_multiplication(num, k):
    # series * (1-x)^k truncated must give the numerator back
    f = RationalGF(num, k)
    terms = 12
    s = IntPolynomial(tuple(expand_series(f, terms)))
    back = s
    for _ in range(f.denom_exponent):
        back = back * P(1, -1)
    assert [back[i] for i in range(terms + 1)] == [f.numerator[i] for i in range(terms + 1)]


def test_rational_reduces_spare_factor():
    f = RationalGF(P(1, -1) * P(0, 3), 2)
    assert f.numerator == P(0, 3) and f.denom_exponent == 1
    assert RationalGF(IntPolynomial(), 2).denom_exponent == 2


def test_generating_polynomial_examples():
    assert generating_polynomial(Graph.edgeless(4)) == P(0, 2, -1)
    for n in range(1, 6):
        assert generating_polynomial(Graph.complete(n)) == P(0, n)
    # z_2 = 3, z_3 = 5, c = 2 give 3x - x^2
    p = generating_polynomial(P3)
    assert p == P(0, 3, -1)
    assert p(1) == 2
    assert expand_series(RationalGF(p), 6)[1:] == [3, 5, 7, 9, 11, 13]


def test_empty_graph_warns():
    with pytest.warns(UserWarning):
        assert generating_polynomial(Graph.edgeless(0)).is_zero()


def test_generating_polynomial_random():
    rng = random.Random(5)
    for _ in range(100):
        g = random_graph(rng, 8)
        p = generating_polynomial(g)
        assert p(1) == max_clique_size(g)
        k = g.n + 4
        series = expand_series(RationalGF(p, 2), k)
        z = [res.value for res in z_sequence(g, k + 1)]
        assert series[1:] == z
        # eventually constant first differences equal to P(1)
        diffs = {series[r] - series[r - 1] for r in range(max(g.n, 2) + 1, k + 1)}
        assert diffs <= {p(1)}


CATALOG = [
    ("higman", None, lambda r: 2 * (r + 1)),
    ("sphere-odd", None, lambda r: r),
    ("sphere-even", None, lambda r: r + 1),
    ("free", 2, lambda r: r + 1),
    ("free", 5, lambda r: r + 1),
    ("torus", 1, lambda r: r),
    ("torus", 4, lambda r: 4 * r),
    ("unitary", 3, lambda r: 3 * r),
    ("surface", 2, lambda r: 2 * (r + 1)),
    ("surface", 7, lambda r: 2 * (r + 1)),
    ("symplectic", 3, lambda r: 3 * (r + 1)),
]


@pytest.mark.parametrize("key, param, tc_next", CATALOG)
def test_catalog_series(key, param, tc_next):
    f = catalog_genfunc(key, param)
    assert expand_series(f, 10)[1:] == [tc_next(r) for r in range(1, 11)]
    assert f.denom_exponent == 2


def test_catalog_specifics():
    h = catalog_genfunc("higman")
    assert h.numerator == P(0, 4, -2) and h.numerator(1) == 2
    assert catalog_genfunc("unitary", 3).numerator == P(0, 3)
    assert expand_series(catalog_genfunc("torus", 1), 9) == expand_series(catalog_genfunc("sphere-odd"), 9)
    assert catalog_genfunc("sphere-odd").numerator(1) == 1
    assert catalog_genfunc("raag", graph=P3).numerator == generating_polynomial(P3)


@pytest.mark.parametrize(
    "key, param",
    [("surface", 1), ("surface", None), ("free", 1), ("torus", 0), ("symplectic", 0), ("moebius", None), ("raag", None)],
)
def test_catalog_domain_errors(key, param):
    with pytest.raises(CatalogError):
        catalog_genfunc(key, param)


def test_rendering():
    assert format_poly((0, 2, -1)) == "2x - x^2"
    assert format_poly(()) == "0"
    assert format_poly((-1, 0, 3)) == "-1 + 3x^2"
    assert str(catalog_genfunc("free", 3)) == "(2x - x^2)/(1 - x)^2"
    assert catalog_genfunc("higman").to_latex() == "\\frac{2x(2-x)}{(1-x)^2}"
    assert catalog_genfunc("sphere-even").to_latex() == "\\frac{x(2-x)}{(1-x)^2}"
    assert catalog_genfunc("torus", 3).to_latex() == "\\frac{3x}{(1-x)^2}"
    assert catalog_genfunc("sphere-odd").to_latex() == "\\frac{x}{(1-x)^2}"
    assert RationalGF(P(0, 3, -1)).to_latex() == "\\frac{x(3-x)}{(1-x)^2}"
    assert RationalGF(P(-2, 0, 4), 0).to_latex() == "-2(1-2x^{2})"
    assert RationalGF(IntPolynomial(), 2).to_latex() == "\\frac{0}{(1-x)^2}"
    assert catalog_genfunc("free", 2).to_json() == {"numerator": [0, 2, -1], "denom_exponent": 2}
