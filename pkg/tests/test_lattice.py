import math
import random

from hypothesis import given, strategies as st

from gammalab import lattice as lat


def _rows(r):
    return st.lists(st.lists(st.integers(-6, 6), min_size=r, max_size=r), min_size=r, max_size=r + 2)


def _with_diag(rows, r, n=12):
    return list(rows) + [[n * (i == j) for j in range(r)] for i in range(r)]


@given(_rows(3))
def test_hnf_shape_and_span(rows):
    r = 3
    gens = _with_diag(rows, r)
    H = lat.hnf(gens, r)
    for i in range(r):
        assert H[i][i] > 0
        assert all(H[i][j] == 0 for j in range(i))
        assert all(0 <= H[k][i] < H[i][i] for k in range(i))
    assert all(lat.contains(H, g) for g in gens)
    # the basis is made of integer combinations of the generators: same determinant as a re-run
    assert lat.hnf(list(H) + gens, r) == H


@given(_rows(2), _rows(2))
def test_intersection_and_sum(a, b):
    r = 2
    A, B = lat.hnf(_with_diag(a, r), r), lat.hnf(_with_diag(b, r), r)
    S, I = lat.lattice_sum(A, B, r), lat.lattice_intersection(A, B, r)
    assert lat.is_sublattice(A, S) and lat.is_sublattice(B, S)
    assert lat.is_sublattice(I, A) and lat.is_sublattice(I, B)
    # index formula [S : A] = [B : I]
    assert lat.det(A) * lat.det(B) == lat.det(S) * lat.det(I)
    # brute force on a box: membership in I is membership in both
    for x in range(-6, 7):
        for y in range(-6, 7):
            v = [x, y]
            assert lat.contains(I, v) == (lat.contains(A, v) and lat.contains(B, v))


def test_smith_quotient_generators():
    rng = random.Random(3)
    for _ in range(200):
        r = rng.randint(1, 3)
        big = lat.hnf(_with_diag([[rng.randint(-4, 4) for _ in range(r)] for _ in range(2)], r, 6), r)
        small = lat.hnf([[6 * x for x in row] for row in big] + [[rng.randint(-9, 9) * 6 for _ in range(r)]], r)
        d, gens = lat.smith_quotient(small, big, r)
        assert math.prod(d) == lat.det(small) // lat.det(big)
        for di, g in zip(d, gens):
            assert lat.contains(big, g)
            assert lat.contains(small, [di * x for x in g])
            for k in range(1, di):
                assert not lat.contains(small, [k * x for x in g])
        # together with small the generators span big
        assert lat.hnf(list(small) + gens, r) == big
