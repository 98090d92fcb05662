import random
from fractions import Fraction

import pytest

from gammalab import abelian as ab
from gammalab.heights import (
    HeightBound,
    enumerate_bounded,
    height_below,
    identify,
    min_height_probe,
    power_poly,
    reciprocal_poly,
    rows_to_csv,
    weil_height,
)
from gammalab.polyz import IntPolynomial, is_irreducible
from oracles import mahler_height

P = IntPolynomial
TOL = Fraction(1, 10**10)


def test_exact_heights():
    h = weil_height(P([-2, 1]))
    assert h.exact == "log(2)" and h.mahler == 2
    assert weil_height(P([1, 1, 1])).exact == "0"
    assert weil_height(P([3, -5, 7])).mahler == 7


def test_golden_ratio():
    h = weil_height(P([-1, -1, 1]))
    assert h.width <= TOL
    assert abs(h.mid() - 0.2406059125298) < 1e-12


def test_lehmer_polynomial():
    h = weil_height(P([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]))
    assert h.width <= TOL
    assert abs(h.mid() * 10 - 0.16235761200773) < 1e-11


def test_reducible_rejected():
    with pytest.raises(ValueError):
        weil_height(P([-1, 0, 1]))


def _corpus(n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        d = rng.randint(2, 5)
        f = P([rng.randint(-6, 6) for _ in range(d)] + [rng.randint(1, 4)])
        if f.coeffs[0] and f.content() == 1 and is_irreducible(f):
            out.append(f)
    return out


@pytest.mark.parametrize("f", _corpus(25, 5), ids=str)
def test_interval_contains_numeric_height(f):
    h = weil_height(f)
    assert h.width <= TOL
    ref = mahler_height(list(f.coeffs))
    assert h.lo - Fraction(1, 10**30) <= Fraction(ref) <= h.hi + Fraction(1, 10**30)


@pytest.mark.parametrize("f", _corpus(15, 6), ids=str)
def test_functional_equations(f):
    h = weil_height(f)
    assert weil_height(reciprocal_poly(f)).overlaps(h, Fraction(1, 10**8))
    assert weil_height(power_poly(f, 2)).overlaps(h.scaled(2), Fraction(1, 10**8))
    assert weil_height(power_poly(f, 3)).overlaps(h.scaled(3), Fraction(1, 10**8))


def test_bound_parsing():
    assert HeightBound.parse("log(2)").log_of == 2
    assert HeightBound.parse("0.25").value == Fraction(1, 4)
    with pytest.raises(ValueError):
        HeightBound.parse("-1")
    assert height_below(P([-2, 1]), HeightBound.parse("log3"))[0] is True
    assert height_below(P([-2, 1]), HeightBound.parse("log2"))[0] is False


@pytest.mark.parametrize(
    "d, B, expected",
    [
        (1, "log(2)", ["x", "x - 1", "x + 1"]),
        (1, "log(3)", ["x", "x - 1", "x + 1", "x - 2", "x + 2", "2*x - 1", "2*x + 1"]),
        (1, "0.6931", ["x", "x - 1", "x + 1"]),
    ],
)
def test_degree_one_census(d, B, expected):
    assert [str(a.min_poly) for a in enumerate_bounded(d, B).numbers] == expected


def test_quadratic_census():
    names = {str(a.min_poly) for a in enumerate_bounded(2, "0.2").numbers}
    assert {"x^2 + x + 1", "x^2 + 1", "x^2 - x + 1"} <= names
    assert "x^2 - x - 1" not in names


def test_census_monotone():
    counts = [enumerate_bounded(2, b).polynomials for b in ("0.1", "0.25", "0.4", "0.55")]
    assert counts == sorted(counts)


def test_probe_examples():
    r = min_height_probe(ab.cyclic_subfield(3, 2), "0.4")
    assert r.min_height.exact == "0"
    # both primitive cube and sixth roots of unity lie in the field
    assert str(r.witness.min_poly) in ("x^2 + x + 1", "x^2 - x + 1")
    assert "x^2 + x + 1" in {str(a.min_poly) for a in r.members}
    r = min_height_probe(ab.AbelianField.quadratic(5), "0.25")
    assert abs(r.min_height.mid() - 0.2406059125298) < 1e-10
    assert str(r.witness.min_poly) == "x^2 - x - 1"
    assert min_height_probe(ab.AbelianField.quadratic(2), "0.1").min_height is None


def test_identification():
    L = ab.cyclic_subfield(7, 3)
    assert identify(P([1, -2, -1, 1]), L).status == "identified"
    assert identify(P([-2, 0, 0, 1]), L).status == "rejected"
    assert identify(P([1, 1, 1]), L).reason == "degree"


def test_stage_fields_never_share_elements():
    stages = [ab.cyclic_subfield(3, 2), ab.AbelianField.quadratic(5), ab.AbelianField.quadratic(-1)]
    for a in enumerate_bounded(2, "0.5").numbers:
        hits = [L for L in stages if identify(a.min_poly, L).status == "identified"]
        assert len(hits) <= 1


def test_csv_rows():
    text = rows_to_csv(a.to_row() for a in enumerate_bounded(1, "log(2)").numbers)
    lines = text.splitlines()
    assert lines[0] == "min_poly;degree;height_lo;height_hi;field_id;screen_N"
    assert len(lines) == 4
