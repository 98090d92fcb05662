from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gammalab.arith import FactoredReal, factor_integer, fr_compare, is_prime, next_prime, primes_up_to
from oracles import trial_factor

small_fr = st.dictionaries(
    st.sampled_from([2, 3, 5, 7, 11, 13]),
    st.fractions(min_value=-4, max_value=4, max_denominator=12),
    max_size=4,
).map(FactoredReal)


@pytest.mark.parametrize("n, expected", [(1, {}), (2304, {2: 8, 3: 2}), (14641, {11: 4})])
def test_factor_examples(n, expected):
    assert factor_integer(n).factors == expected


@given(st.integers(min_value=1, max_value=10**9))
def test_factor_matches_trial_division(n):
    f = factor_integer(n)
    assert f.factors == trial_factor(n)
    assert f.to_int() == n


def test_factor_beyond_trial_limit():
    p, q = 1000003, 998244353
    assert factor_integer(p * q * q).factors == {p: 1, q: 2}
    assert factor_integer(2**61 - 1).factors == {2**61 - 1: 1}


def test_factor_rejects_nonpositive():
    with pytest.raises(ValueError):
        factor_integer(0)


def test_primality_helpers():
    assert primes_up_to(30) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert [n for n in range(100) if is_prime(n)] == list(primes_up_to(99))
    assert next_prime(13) == 17 and next_prime(1) == 2


def test_compare_examples():
    assert fr_compare(FactoredReal({2: Fraction(1, 2)}), FactoredReal({2: Fraction(3, 4)})) == -1
    assert fr_compare(FactoredReal({2: Fraction(1, 2), 3: Fraction(1, 8)}), FactoredReal({3: 1})) == -1
    assert fr_compare(FactoredReal(), FactoredReal()) == 0


def test_power_examples():
    x = FactoredReal({2: 8, 3: 2})
    assert x ** Fraction(1, 16) == FactoredReal({2: Fraction(1, 2), 3: Fraction(1, 8)})
    assert (x * x.inverse()).is_one()
    assert FactoredReal({3: 1}) ** Fraction(1, 4) == FactoredReal({3: Fraction(1, 4)})
    assert (x ** Fraction(1, 16)).decimal(12) == "1.62238960361"


def test_canonical_form():
    assert FactoredReal({2: 0, 3: 1}).factors == {3: 1}
    with pytest.raises(ValueError):
        FactoredReal({4: 1})
    assert str(FactoredReal({2: Fraction(1, 2), 3: 1})) == "2^(1/2)*3"


@given(small_fr, small_fr, small_fr)
def test_order_respects_multiplication(a, b, c):
    assert fr_compare(a, b) == fr_compare(a * c, b * c)


@given(small_fr, small_fr)
def test_order_is_antisymmetric_and_agrees_with_logs(a, b):
    c = fr_compare(a, b)
    assert c == -fr_compare(b, a)
    if c:
        assert (a.log() > b.log()) == (c > 0)


@given(small_fr, st.fractions(min_value=-5, max_value=5, max_denominator=9).filter(lambda q: q != 0))
def test_rational_power_round_trip(a, q):
    assert (a**q) ** (1 / q) == a


def test_huge_denominators_use_interval_path():
    # cleared-denominator integers would have millions of bits
    a = FactoredReal({191: Fraction(18, 361)})
    b = FactoredReal({103: Fraction(16, 289), 7: Fraction(1, 9699690)})
    assert fr_compare(a, b) == (1 if a.log() > b.log() else -1)
    assert fr_compare(a, FactoredReal({3: 1})) == -1


def test_json_round_trip():
    x = FactoredReal({2: Fraction(-1, 3), 7: 2})
    assert FactoredReal.from_json(x.to_json()) == x
