import math

import pytest
from hypothesis import given, strategies as st

from gammalab import abelian as ab
from gammalab.abelian import AbelianField, abelian_disc, character_conductors, intermediate_fields, join, meet
from gammalab.numfield import build_field
from gammalab.polyz import IntPolynomial

Q2, Q3, Q5, Qm3 = (AbelianField.quadratic(d) for d in (2, 3, 5, -3))
BIQ = join(Q2, Q3)


@pytest.mark.parametrize("A, text", [(Q2, "m=8;H={1,7}"), (Q3, "m=12;H={1,11}"), (Q5, "m=5;H={1,4}"), (Qm3, "m=3;H={1}")])
def test_quadratic_descriptors(A, text):
    assert A.descriptor() == text
    assert AbelianField.parse(text) == A
    assert A.degree == 2


def test_join_and_meet_examples():
    assert BIQ.descriptor() == "m=24;H={1,23}"
    assert BIQ.degree == 4
    assert abelian_disc(BIQ).to_int() == 2304
    other = join(Q3, AbelianField.quadratic(-1))
    assert meet(BIQ, other) == Q3
    assert join(Q2, Q2) == Q2 and meet(Q2, Q3) == ab.QQ


def test_parse_generator_form_and_errors():
    assert AbelianField.parse("m=24;H=<23>") == BIQ
    with pytest.raises(ValueError):
        AbelianField.parse("m=24;H={2}")
    with pytest.raises(ValueError):
        AbelianField.parse("nonsense")


def test_intermediate_fields_of_biquadratic():
    fields = intermediate_fields(ab.QQ, BIQ)
    assert [abelian_disc(F).to_int() for F in fields] == [1, 8, 12, 24, 2304]
    assert fields[0] == ab.QQ and fields[-1] == BIQ


def test_subgroup_cap():
    with pytest.raises(ab.SubgroupCapError):
        intermediate_fields(ab.QQ, AbelianField.cyclotomic(7), cap=1)


@pytest.mark.parametrize("q, p, disc", [(11, 5, 11**4), (7, 3, 49), (3, 2, 3), (13, 3, 169), (29, 7, 29**6)])
def test_cyclic_subfields(q, p, disc):
    A = ab.cyclic_subfield(q, p)
    assert A.degree == p and A.conductor == q
    assert abelian_disc(A).to_int() == disc


def test_cyclic_quintic_polynomial():
    assert ab.generator_polynomial(ab.cyclic_subfield(11, 5)) == IntPolynomial([1, 3, -3, -4, 1, 1])


@pytest.mark.parametrize(
    "A, poly",
    [(Qm3, [1, 1, 1]), (ab.QQ, [-1, 1]), (Q2, [-2, 0, 1]), (BIQ, [1, 0, -4, 0, 1])],
)
def test_generator_polynomials(A, poly):
    g = ab.generator_polynomial(A)
    assert build_field(g).abs_disc == build_field(IntPolynomial(poly)).abs_disc


def _random_field(m, gens):
    return AbelianField.from_subgroup(m, [g for g in gens if math.gcd(g, m) == 1])


fields = st.builds(_random_field, st.integers(3, 48).filter(lambda m: m % 4 != 2), st.lists(st.integers(1, 47), max_size=2))


@given(fields)
def test_conductor_discriminant_matches_characters(A):
    assert abelian_disc(A).to_int() == math.prod(character_conductors(A))
    assert max(character_conductors(A)) == A.conductor


@given(fields, fields)
def test_lattice_laws(A, B):
    J, M = join(A, B), meet(A, B)
    assert A <= J and B <= J and M <= A and M <= B
    assert J.degree * M.degree == A.degree * B.degree
    assert ab.linearly_disjoint(A, B, M)


@given(fields)
def test_intermediate_fields_lie_between(A):
    fs = intermediate_fields(ab.QQ, A)
    assert all(F <= A for F in fs)
    assert len(set(fs)) == len(fs)
    assert sorted(fs, key=AbelianField.sort_key) == fs


@given(fields)
def test_elements_agree_with_membership(A):
    els = A.elements()
    m = A.conductor
    units = [a for a in range(1, max(m, 2)) if math.gcd(a, m) == 1]
    assert len(els) * A.degree == len(units)
    assert {a for a in units if A.contains_residue(a)} == set(els)
