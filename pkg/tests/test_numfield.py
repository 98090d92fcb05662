import math
import random
from fractions import Fraction

import pytest

from gammalab import abelian as ab
from gammalab.corpus import coprime_pair
from gammalab.errors import DegreeCapError
from gammalab.numfield import (
    NON_DISJOINT_FLAG,
    RATIONALS,
    NotInTowerError,
    build_field,
    check_disc_divisibility,
    compositum,
    embedding_screen,
    rel_disc_norm,
)
from gammalab.polyz import IntPolynomial, discriminant

P = IntPolynomial
S2, S3, Sm3 = build_field(P([-2, 0, 1])), build_field(P([-3, 0, 1])), build_field(P([1, 1, 1]))


def test_round2_quadratic():
    K = build_field(P([-5, 0, 1]))
    assert (K.abs_disc, K.index) == (5, 2)
    assert K.integral_basis[1] == (Fraction(1, 2), Fraction(1, 2))


@pytest.mark.parametrize(
    "coeffs, disc, index",
    [
        ([-1, -1, 0, 1], -23, 1),
        ([1, 3, -3, -4, 1, 1], 14641, 1),
        ([1, 0, 0, 0, 1], 256, 1),
        ([-10, 0, 0, 1], -300, 3),
        ([-175, 0, 0, 1], -33075, 5),
        ([-2, 0, 0, 0, 1], -2048, 1),
        ([-7, 0, 1], 28, 1),
        ([-17, 0, 1], 17, 2),
    ],
)
def test_round2_known_discriminants(coeffs, disc, index):
    K = build_field(P(coeffs))
    assert (K.abs_disc, K.index) == (disc, index)
    assert discriminant(P(coeffs)) == disc * index**2


def test_integral_basis_is_a_ring():
    K = build_field(P([-175, 0, 0, 1]))
    dens = K.basis_denominators()
    assert math.prod(dens) == K.index


def test_build_field_rejects_bad_input():
    with pytest.raises(ValueError):
        build_field(P([-1, 0, 1]))
    with pytest.raises(ValueError):
        build_field(P([1, 0, 2]))
    with pytest.raises(DegreeCapError):
        build_field(P([1] + [0] * 29 + [1]))


def test_compositum_examples():
    C = compositum(S2, S3)
    assert (C.degree, C.abs_disc) == (4, 2304)
    same = compositum(S2, S2)
    assert NON_DISJOINT_FLAG in same.flags and same.degree == 2
    assert compositum(S2, RATIONALS).abs_disc == 8


def test_rel_disc_norm_examples():
    C = compositum(S2, S3)
    assert rel_disc_norm(C, S2, 2) == 36
    assert rel_disc_norm(S2, S2, 1) == 1
    assert rel_disc_norm(Sm3, RATIONALS, 2) == 3
    with pytest.raises(NotInTowerError):
        rel_disc_norm(S3, S2, 1)


def test_disc_divisibility_examples():
    rep = check_disc_divisibility(RATIONALS, S2, S3)
    assert (rep.lhs, rep.rhs, rep.quotient) == (2304, 9216, 4) and rep.divides
    rep = check_disc_divisibility(RATIONALS, S2, Sm3)
    assert rep.lhs == rep.rhs == 576


def test_disc_divisibility_random_pairs():
    rng = random.Random(11)
    for _ in range(15):
        L, Lp = coprime_pair(rng, max_degree=3)
        rep = check_disc_divisibility(RATIONALS, L, Lp)
        assert rep.divides and rep.lhs == rep.rhs


def test_embedding_screen():
    C = compositum(S2, S3)
    assert embedding_screen(S2, C)
    assert not embedding_screen(Sm3, C)


def test_cross_engine_small():
    for A in [ab.cyclic_subfield(7, 3), ab.AbelianField.cyclotomic(16), ab.join(ab.AbelianField.quadratic(-1), ab.AbelianField.quadratic(5))]:
        assert abs(build_field(ab.generator_polynomial(A)).abs_disc) == ab.abelian_disc(A).to_int()
