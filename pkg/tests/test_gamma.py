from fractions import Fraction

import pytest

from gammalab import abelian as ab
from gammalab.abelian import AbelianField, join
from gammalab.arith import FactoredReal, fr_compare
from gammalab.errors import CapError
from gammalab.gamma import (
    THREE,
    build_cf_tower,
    coprime_compositum_bound,
    default_external_sample,
    gamma_M_F,
    gamma_of,
    gamma_prime,
    gamma_external_sample,
    liminf_scan,
)

FR = FactoredReal
Q2, Q3, Q5, Qm3 = (AbelianField.quadratic(d) for d in (2, 3, 5, -3))
BIQ = join(Q2, Q3)


def test_gamma_M_F_examples():
    assert gamma_M_F(FR({2: 3}), FR({2: 2, 3: 1}), FR({2: 8, 3: 2}), 4, 2) == FR({2: Fraction(1, 2)})
    d = FR({2: 8, 3: 2})
    assert gamma_M_F(d, d, d, 4, 4).is_one()
    assert gamma_M_F(FR({3: 1}), FR(), FR({3: 1}), 2, 1) == FR({3: Fraction(1, 4)})
    with pytest.raises(ValueError):
        gamma_M_F(d, d, d, 4, 3)


def test_gamma_prime_biquadratic():
    rep = gamma_prime(BIQ, ab.QQ)
    assert rep.sup_value == FR({2: Fraction(1, 2), 3: Fraction(1, 8)})
    assert rep.sup_witness == ab.QQ
    values = {F.descriptor(): g for F, g in rep.entries}
    assert values["m=12;H={1,11}"] == FR({2: Fraction(1, 2)})
    assert values["m=8;H={1,7}"] == FR({2: Fraction(1, 4), 3: Fraction(1, 4)})
    assert values["m=24;H={1,5,19,23}"] == FR({2: Fraction(1, 4)})
    assert values["m=24;H={1,23}"].is_one()


def test_gamma_prime_trivial_cases():
    assert gamma_prime(Q2, Q2).sup_value.is_one()
    rep = gamma_prime(Qm3, ab.QQ)
    assert rep.sup_value == FR({3: Fraction(1, 4)}) and rep.sup_witness == ab.QQ


def test_external_sample_examples():
    rep = gamma_external_sample(Q2, ab.QQ, [Q3, ab.QQ])
    assert rep.rows[0]["gamma_F"] == "2^(1/2)" and rep.rows[0]["gamma_meet"] == "2^(3/4)"
    assert not rep.failures
    rep = gamma_external_sample(BIQ, ab.QQ, [Q5])
    assert not rep.failures
    # 5 is unramified in M, so the value equals the one for F = Q
    assert gamma_of(BIQ, Q5) == FR({2: Fraction(1, 2), 3: Fraction(1, 8)})
    assert fr_compare(gamma_of(BIQ, AbelianField.quadratic(6)), gamma_of(BIQ, ab.QQ)) <= 0


def test_default_sample_excludes_subfields():
    sample = default_external_sample(BIQ)
    assert Q2 not in sample and Q3 not in sample and Q5 in sample
    assert not gamma_external_sample(BIQ, ab.QQ).failures


def test_compositum_bound():
    L1, L2, L3 = ab.cyclic_subfield(3, 2), ab.cyclic_subfield(7, 3), ab.cyclic_subfield(11, 5)
    assert coprime_compositum_bound([L1, L2]) == FR({7: Fraction(2, 9)})
    assert coprime_compositum_bound([Qm3]) == FR({3: Fraction(1, 4)})
    assert coprime_compositum_bound([L1, L2, L3]) == FR({7: Fraction(2, 9)})
    with pytest.raises(ValueError):
        coprime_compositum_bound([L1, Q2])


def test_tower_stages():
    T = build_cf_tower(8)
    assert [(s.p, s.q) for s in T.stages] == [(2, 3), (3, 7), (5, 11), (7, 29), (11, 23), (13, 53), (17, 103), (19, 191)]
    for s in T.stages:
        assert s.q % s.p == 1
        assert s.abs_disc == FR({s.q: s.p - 1})
        assert fr_compare(s.value, THREE) <= 0
    assert T.stages[2].value == FR({11: Fraction(4, 25)})


@pytest.mark.parametrize("n, count, maximum", [(1, 1, FR({3: Fraction(1, 4)})), (2, 3, FR({7: Fraction(2, 9)})), (3, 7, FR({7: Fraction(2, 9)}))])
def test_scan_small_towers(n, count, maximum):
    rep = liminf_scan(build_cf_tower(n))
    assert len(rep.rows) == count and rep.max_value == maximum
    assert rep.verdict and not rep.failures


def test_scan_with_base_stage():
    T = build_cf_tower(1)
    rep = liminf_scan(T, T.stages[0].field)
    assert len(rep.rows) == 1 and rep.max_value.is_one()


def test_scan_threads_agree():
    T = build_cf_tower(4)
    a, b = liminf_scan(T, workers=1), liminf_scan(T, workers=3)
    assert a.to_json() == b.to_json()


def test_scan_subset_cap():
    with pytest.raises(CapError):
        liminf_scan(build_cf_tower(3), subset_cap=2)
