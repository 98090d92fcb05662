"""Slow, obviously-correct reference implementations used only by the tests."""

from fractions import Fraction
from itertools import product

import mpmath


def trial_factor(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def det(rows):
    """Fraction-exact determinant by elimination."""
    A = [[Fraction(x) for x in r] for r in rows]
    n = len(A)
    sign, out = 1, Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        out *= A[c][c]
        for i in range(c + 1, n):
            t = A[i][c] / A[c][c]
            A[i] = [a - t * b for a, b in zip(A[i], A[c])]
    return int(sign * out)


def sylvester_resultant(f, g):
    """Res(f, g) as the Sylvester determinant; coefficient lists constant first."""
    m, n = len(f) - 1, len(g) - 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    fr, gr = list(reversed(f)), list(reversed(g))
    rows = []
    for i in range(n):
        rows.append([0] * i + fr + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (m - 1 - i))
    return det(rows)


def mahler_height(coeffs, dps=50):
    """Height from numerically computed roots; an oracle, not certified."""
    with mpmath.workdps(dps):
        roots = mpmath.polyroots(list(reversed(coeffs)), maxsteps=500, extraprec=200)
        logm = mpmath.log(abs(coeffs[-1])) + sum(mpmath.log(max(1, abs(z))) for z in roots)
        return mpmath.nstr(logm / (len(coeffs) - 1), 40)


def brute_census(d, bound, box_factor=2):
    """Degree-d primitive irreducible polynomials of height < bound, over an enlarged box."""
    import math

    import sympy

    x = sympy.Symbol("x")
    cap = math.exp(d * bound)
    box = [int(box_factor * math.comb(d, i) * cap) + 1 for i in range(d + 1)]
    out = set()
    ranges = [range(-b, b + 1) for b in box[:-1]] + [range(1, box[-1] + 1)]
    for coeffs in product(*ranges):
        if math.gcd(*coeffs) != 1:
            continue
        poly = sympy.Poly(list(reversed(coeffs)), x)
        if poly.degree() != d or not poly.is_irreducible:
            continue
        if float(mahler_height(list(coeffs))) < bound:
            out.add(tuple(coeffs))
    return out
