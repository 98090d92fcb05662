import random

import pytest
import sympy
from hypothesis import given, strategies as st

from gammalab.polyz import (
    IntPolynomial,
    cyclotomic_polynomial,
    degree_pattern_mod_p,
    discriminant,
    factor_mod_p,
    factor_over_Q,
    is_irreducible,
    poly_gcd,
    resultant,
    squarefree_decomposition,
)
from oracles import sylvester_resultant

P = IntPolynomial
coeff_lists = st.lists(st.integers(-9, 9), min_size=1, max_size=7).filter(lambda c: c[-1] != 0)


def test_arith_examples():
    q, r, k = P([-1, 0, 1]).pseudo_divmod(P([-1, 1]))
    assert r.is_zero() and q == P([1, 1])
    assert P([-1, -1, 0, 1]).derivative() == P([-1, 0, 3])
    assert P([0, 4, 6]).content() == 2
    assert str(P([1, 1, 1])) == "x^2 + x + 1"


@given(coeff_lists, coeff_lists.filter(lambda c: len(c) > 1))
def test_pseudo_division_identity(f, g):
    f, g = P(f), P(g)
    q, r, k = f.pseudo_divmod(g)
    assert r.degree < g.degree
    assert P([g.lc**k]) * f == q * g + r


@given(coeff_lists, coeff_lists)
def test_resultant_matches_sylvester(f, g):
    assert resultant(P(f), P(g)) == sylvester_resultant(f, g)


def test_resultant_examples():
    assert resultant(P([-2, 0, 1]), P([-3, 0, 1])) == 1
    assert resultant(P([1, -1]), P([0, 0, 0, 1])) == sylvester_resultant([1, -1], [0, 0, 0, 1])
    assert discriminant(P([-1, -1, 0, 1])) == -23
    assert discriminant(P([1, 3, -3, -4, 1, 1])) == 14641


@given(coeff_lists, coeff_lists)
def test_gcd_divides_both(f, g):
    f, g = P(f), P(g)
    h = poly_gcd(f, g)
    assert h.divides(f) and h.divides(g)


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=5).filter(lambda c: c[-1] != 0), st.integers(1, 3))
def test_squarefree_decomposition_multiplies_back(c, k):
    f = P(c) ** k
    parts = squarefree_decomposition(f)
    prod = P([1])
    for g, e in parts:
        assert poly_gcd(g, g.derivative()).degree == 0
        prod = prod * g**e
    assert prod.degree == f.degree and prod.divides(f)


def _sympy_pattern(c):
    x = sympy.Symbol("x")
    _, facs = sympy.factor_list(sympy.Poly(list(reversed(c)), x))
    return sorted((fac.degree(), e) for fac, e in facs)


@given(st.lists(st.integers(-12, 12), min_size=2, max_size=9).filter(lambda c: c[-1] != 0))
def test_factor_over_Q_degree_pattern(c):
    facs = factor_over_Q(P(c))
    assert sorted((g.degree, e) for g, e in facs) == _sympy_pattern(c)
    prod = P([1])
    for g, e in facs:
        assert g.lc > 0 and g.content() == 1
        prod = prod * g**e
    f = P(c)
    assert P([f.content()]) * prod == f


def test_factor_products_of_known_factors():
    rng = random.Random(7)
    for _ in range(30):
        parts = []
        for _ in range(rng.randint(2, 3)):
            d = rng.randint(1, 4)
            parts.append(P([rng.randint(-6, 6) for _ in range(d)] + [rng.randint(1, 3)]))
        f = parts[0]
        for g in parts[1:]:
            f = f * g
        if f.coeffs[0] == 0:
            continue
        found = factor_over_Q(f)
        assert sum(g.degree * e for g, e in found) == f.degree
        for g in parts:
            pg = g.primitive_part()
            if is_irreducible(pg):
                assert any(h == pg or h == -pg for h, _ in found)


@pytest.mark.parametrize("c", [[1, 0, 0, 0, 1], [1] + [0] * 15 + [1], [-1, -1, 0, 1], [1, 3, -3, -4, 1, 1]])
def test_irreducible_examples(c):
    assert is_irreducible(P(c))


def test_x4_minus_1_splits():
    assert sorted(str(g) for g, _ in factor_over_Q(P([-1, 0, 0, 0, 1]))) == ["x + 1", "x - 1", "x^2 + 1"]


def test_swinnerton_dyer_needs_recombination():
    # irreducible over Q, but splits into quadratics or linears modulo every prime
    sd = P([1, 0, -10, 0, 1])
    assert is_irreducible(sd)
    assert max(degree_pattern_mod_p(sd, 13)) <= 2


def test_factor_mod_p_product():
    f = P([3, 1, 0, 5, 1, 2, 1])
    for p in (3, 5, 7, 11):
        facs = factor_mod_p(f, p)
        assert sum(len(g) - 1 for g in facs) == f.degree


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 7, 8, 9, 12, 15, 30])
def test_cyclotomic(n):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()
    assert cyclotomic_polynomial(n).coeffs == tuple(int(c) for c in reversed(expected))
    assert cyclotomic_polynomial(n).degree == sympy.totient(n)
