"""Number fields given by a monic irreducible integer polynomial.

The maximal order is computed with the Round 2 algorithm: starting from an
order (by default ``Z[x]/(f)``), for each prime ``p`` whose square divides
the discriminant of the order the ring of multipliers of the ``p``-radical
is taken until it stops growing.

Composita are built from a primitive element ``α + kβ``; their starting
order is the image of ``O_K ⊗ O_L``, whose discriminant involves only the
primes ramified in ``K`` or ``L`` so no large cofactor ever has to be
factored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import lattice as lat
from .arith import factor_integer, primes_up_to
from .errors import DegreeCapError
from .polyz import IntPolynomial, discriminant, factor_over_Q, poly_gcd, resultant, splits_completely_mod_p

__all__ = [
    "NumberField",
    "NotInTowerError",
    "build_field",
    "compositum",
    "rel_disc_norm",
    "check_disc_divisibility",
    "DivisibilityReport",
    "embedding_screen",
    "RATIONALS",
]

DEGREE_CAP = 24
NON_DISJOINT_FLAG = "non-linearly-disjoint embedding choice"


class NotInTowerError(ValueError):
    """Raised when a relative discriminant norm is not a positive integer."""


@dataclass(frozen=True)
class NumberField:
    """``Q[x]/(f)`` with its ring of integers.

    ``integral_basis`` rows are elements of ``O_K`` written in the power
    basis ``1, x, ..., x^(n-1)``; ``index`` is ``[O_K : Z[x]]``.
    """

    min_poly: IntPolynomial
    integral_basis: tuple[tuple[Fraction, ...], ...]
    abs_disc: int
    index: int
    flags: tuple[str, ...] = field(default=(), compare=False)

    @property
    def degree(self) -> int:
        return self.min_poly.degree

    @property
    def poly_disc(self) -> int:
        return discriminant(self.min_poly)

    def basis_denominators(self) -> list[int]:
        return [math.lcm(*(c.denominator for c in row)) for row in self.integral_basis]

    def descriptor(self) -> str:
        return "poly=" + ",".join(map(str, self.min_poly.coeffs))

    def __str__(self) -> str:
        return f"Q[x]/({self.min_poly})"


# ---------------------------------------------------------------------------
# linear algebra helpers


def _rational_hnf(rows: Sequence[Sequence[Fraction]], n: int) -> list[list[Fraction]]:
    """Lower-triangular Hermite basis (row ``i`` involves ``x^0..x^i``) of a full-rank rational lattice."""
    D = math.lcm(*(Fraction(c).denominator for row in rows for c in row))
    scaled = [[int(Fraction(c) * D) for c in reversed(row)] for row in rows]
    H = lat.hnf(scaled, n)
    return [[Fraction(c, D) for c in reversed(row)] for row in reversed(H)]


def _solve_lower(W: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> list[Fraction]:
    """Coordinates ``c`` with ``sum c_i W_i == v`` for lower-triangular row basis ``W``."""
    n = len(W)
    v = list(v)
    c = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        ci = v[i] / W[i][i]
        c[i] = ci
        if ci:
            for j in range(i + 1):
                v[j] -= ci * W[i][j]
    return c


def _mulmod(a: Sequence[Fraction], b: Sequence[Fraction], f: IntPolynomial) -> list[Fraction]:
    """Product of power-basis vectors modulo the monic ``f``."""
    n = f.degree
    prod = [Fraction(0)] * (2 * n - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    fc = f.coeffs
    for top in range(2 * n - 2, n - 1, -1):
        c = prod[top]
        if c:
            for i in range(n):
                prod[top - n + i] -= c * fc[i]
    return prod[:n]


def _nullspace_mod_p(rows: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Basis of ``{v : v · rows == 0 (mod p)}`` (left kernel)."""
    n = len(rows)
    if n == 0:
        return []
    m = len(rows[0])
    # work on the transpose: columns of rows are equations in v
    A = [[rows[i][j] % p for i in range(n)] for j in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                t = A[i][c]
                A[i] = [(x - t * y) % p for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * n
        v[fcol] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -A[i][fcol] % p
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# Round 2


class _Order:
    """An order with basis ``W`` (power-basis rows) and integer structure constants."""

    def __init__(self, f: IntPolynomial, W: list[list[Fraction]]):
        self.f = f
        self.n = f.degree
        self.W = W
        n = self.n
        self.table = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                c = _solve_lower(W, _mulmod(W[i], W[j], f))
                if any(x.denominator != 1 for x in c):
                    raise ArithmeticError("basis does not span an order")
                ci = [int(x) for x in c]
                self.table[i][j] = self.table[j][i] = ci

    def mul(self, a: Sequence[int], b: Sequence[int], p: int | None = None) -> list[int]:
        n = self.n
        out = [0] * n
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        xy = x * y
                        row = self.table[i][j]
                        for k in range(n):
                            out[k] += xy * row[k]
        if p is not None:
            out = [c % p for c in out]
        return out

    def power_mod(self, a: Sequence[int], e: int, p: int) -> list[int]:
        one = _solve_lower(self.W, [Fraction(1)] + [Fraction(0)] * (self.n - 1))
        result = [int(c) % p for c in one]
        base = [c % p for c in a]
        while e:
            if e & 1:
                result = self.mul(result, base, p)
            base = self.mul(base, base, p)
            e >>= 1
        return result

    def det(self) -> Fraction:
        return math.prod((self.W[i][i] for i in range(self.n)), start=Fraction(1))


def _enlarge_at(order: _Order, p: int) -> _Order | None:
    """One Round 2 step at ``p``; ``None`` if ``order`` is already ``p``-maximal."""
    n = order.n
    j = 1
    while p**j < n:
        j += 1
    frob = [order.power_mod([int(i == k) for k in range(n)], p**j, p) for i in range(n)]
    kernel = _nullspace_mod_p(frob, p)
    # p-radical in W-coordinates
    rad = lat.hnf(kernel + [[p * int(i == k) for k in range(n)] for i in range(n)], n)
    # multiplier condition: x * beta_k in p * I_p
    rows = []
    for i in range(n):
        e = [int(i == k) for k in range(n)]
        entries = []
        for beta in rad:
            prod = order.mul(e, beta)
            entries.extend(c % p for c in lat.solve_upper_int(rad, prod))
        rows.append(entries)
    U = _nullspace_mod_p(rows, p)
    if not U:
        return None
    gens = [[Fraction(c, p) for c in u] for u in U] + [[Fraction(int(i == k)) for k in range(n)] for i in range(n)]
    W_new = [[sum(g[k] * order.W[k][c] for k in range(n)) for c in range(n)] for g in gens]
    W_new = _rational_hnf(W_new, n)
    new = _Order(order.f, W_new)
    if new.det() == order.det():
        return None
    return new


def _round2(f: IntPolynomial, W: list[list[Fraction]], disc_order: int) -> _Order:
    order = _Order(f, W)
    for p, e in factor_integer(abs(disc_order)).items():
        if e < 2:
            continue
        while True:
            nxt = _enlarge_at(order, p)
            if nxt is None:
                break
            order = nxt
    return order


def _field_from_order(f: IntPolynomial, W: list[list[Fraction]], flags=()) -> NumberField:
    df = discriminant(f)
    order = _Order(f, W)
    disc_order = df * order.det() ** 2
    assert disc_order.denominator == 1
    order = _round2(f, W, int(disc_order))
    det = order.det()
    index = 1 / abs(det)
    assert index.denominator == 1
    index = int(index)
    disc = Fraction(df) / index**2
    assert disc.denominator == 1
    basis = tuple(tuple(row) for row in order.W)
    return NumberField(f, basis, int(disc), index, tuple(flags))


def build_field(f: IntPolynomial, degree_cap: int = DEGREE_CAP, check_irreducible: bool = True) -> NumberField:
    """Number field ``Q[x]/(f)`` with maximal order and signed discriminant.

    >>> build_field(IntPolynomial([-5, 0, 1])).abs_disc
    5
    """
    if f.lc != 1:
        raise ValueError(f"{f} is not monic")
    if f.degree < 1:
        raise ValueError("field polynomial must have positive degree")
    if f.degree > degree_cap:
        raise DegreeCapError(f"degree {f.degree} exceeds cap {degree_cap}")
    if check_irreducible:
        facs = factor_over_Q(f)
        if len(facs) != 1 or facs[0][1] != 1:
            raise ValueError(f"{f} is reducible over Q")
    n = f.degree
    W = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return _field_from_order(f, W)


RATIONALS = NumberField(IntPolynomial([0, 1]), ((Fraction(1),),), 1, 1)


# ---------------------------------------------------------------------------
# composita


def _poly_eval_rows(u: Sequence[Fraction], X: Sequence[Fraction], h: IntPolynomial) -> list[Fraction]:
    """``u(X) mod h`` where ``u`` is given by power-basis coefficients."""
    n = h.degree
    acc = [Fraction(0)] * n
    for c in reversed(u):
        acc = _mulmod(acc, X, h) if any(acc) else acc
        acc[0] += c
    return acc


def _reduce_mod(v: Sequence[Fraction], h: IntPolynomial) -> list[Fraction]:
    n = h.degree
    v = list(v) + [Fraction(0)] * max(0, n - len(v))
    fc = h.coeffs
    for top in range(len(v) - 1, n - 1, -1):
        c = v[top]
        if c:
            for i in range(n):
                v[top - n + i] -= c * fc[i]
    return v[:n]


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Lagrange interpolation, coefficients constant first."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        num = [Fraction(1)]
        den = Fraction(1)
        for j in range(n):
            if j != i:
                num = [Fraction(0)] + num
                for t in range(len(num) - 1):
                    num[t] -= xs[j] * num[t + 1]
                den *= xs[i] - xs[j]
        for t in range(n):
            coeffs[t] += ys[i] * num[t] / den
    return coeffs


def _compositum_poly(f: IntPolynomial, g: IntPolynomial, k: int) -> IntPolynomial:
    """Monic polynomial with roots ``α_i + k β_j`` (``f(α) = g(β) = 0``): ``Res_y(g(y), f(x - k y))``."""
    N = f.degree * g.degree
    xs = list(range(-(N // 2), N - N // 2 + 1))
    ys = [resultant(g, f.compose(IntPolynomial([x0, -k]))) for x0 in xs]
    coeffs = _interpolate(xs, ys)
    assert all(c.denominator == 1 for c in coeffs)
    return IntPolynomial(int(c) for c in coeffs)


def _tensor_images(f: IntPolynomial, g: IntPolynomial, k: int, h: IntPolynomial):
    """Express ``α`` and ``β`` as polynomials in ``θ = α + kβ`` modulo ``h``."""
    m, n = f.degree, g.degree
    N = m * n

    def mul_alpha(v):
        out = [Fraction(0)] * N
        for a in range(m):
            for b in range(n):
                c = v[a * n + b]
                if not c:
                    continue
                if a + 1 < m:
                    out[(a + 1) * n + b] += c
                else:
                    for t in range(m):
                        out[t * n + b] -= c * f.coeffs[t]
        return out

    def mul_beta(v):
        out = [Fraction(0)] * N
        for a in range(m):
            for b in range(n):
                c = v[a * n + b]
                if not c:
                    continue
                if b + 1 < n:
                    out[a * n + b + 1] += c
                else:
                    for t in range(n):
                        out[a * n + t] -= c * g.coeffs[t]
        return out

    rows = []
    v = [Fraction(0)] * N
    v[0] = Fraction(1)
    for _ in range(N):
        rows.append(v)
        v = [x + k * y for x, y in zip(mul_alpha(v), mul_beta(v))]
    # solve c · rows = target by Gaussian elimination on the transpose
    def solve(target):
        A = [[rows[i][j] for i in range(N)] + [target[j]] for j in range(N)]
        for c in range(N):
            piv = next(i for i in range(c, N) if A[i][c])
            A[c], A[piv] = A[piv], A[c]
            inv = 1 / A[c][c]
            A[c] = [x * inv for x in A[c]]
            for i in range(N):
                if i != c and A[i][c]:
                    t = A[i][c]
                    A[i] = [x - t * y for x, y in zip(A[i], A[c])]
        return [A[i][N] for i in range(N)]

    e_alpha = [Fraction(0)] * N
    e_beta = [Fraction(0)] * N
    if m > 1:
        e_alpha[n] = Fraction(1)
        alpha = solve(e_alpha)
    else:
        alpha = [Fraction(-f.coeffs[0])] + [Fraction(0)] * (N - 1)
    if n > 1:
        e_beta[1] = Fraction(1)
        beta = solve(e_beta)
    else:
        beta = [Fraction(-g.coeffs[0])] + [Fraction(0)] * (N - 1)
    return alpha, beta


def compositum(K: NumberField, L: NumberField, degree_cap: int = DEGREE_CAP) -> NumberField:
    """A field generated by ``α + kβ`` over ``Q``, smallest ``k >= 1`` giving a squarefree polynomial.

    If that polynomial is reducible the fields are not linearly disjoint and a
    factor of maximal degree is used; the result carries the flag
    ``"non-linearly-disjoint embedding choice"``.
    """
    f, g = K.min_poly, L.min_poly
    N = f.degree * g.degree
    if N > degree_cap * degree_cap:
        raise DegreeCapError(f"compositum degree bound {N} too large")
    k = 1
    while True:
        h = _compositum_poly(f, g, k)
        if poly_gcd(h, h.derivative()).degree == 0:
            break
        k += 1
    flags = []
    factors = factor_over_Q(h)
    h1 = max((fac for fac, _ in factors), key=lambda q: (q.degree, [-c for c in q.coeffs[::-1]]))
    if len(factors) > 1:
        flags.append(NON_DISJOINT_FLAG)
    if h1.degree > degree_cap:
        raise DegreeCapError(f"degree {h1.degree} exceeds cap {degree_cap}")
    alpha, beta = _tensor_images(f, g, k, h)
    alpha = _reduce_mod(alpha, h1)
    beta = _reduce_mod(beta, h1)
    gens = []
    for u in K.integral_basis:
        ua = _poly_eval_rows(u, alpha, h1)
        for w in L.integral_basis:
            wb = _poly_eval_rows(w, beta, h1)
            gens.append(_mulmod(ua, wb, h1))
    d = h1.degree
    W = _rational_hnf(gens, d)
    return _field_from_order(h1, W, flags)


# ---------------------------------------------------------------------------
# relative discriminant norms


def rel_disc_norm(L: NumberField, K: NumberField, deg_LK: int) -> int:
    """``|N_{K/Q}(D_{L/K})| = |Δ_L| / |Δ_K|^[L:K]`` for a tower ``K ⊆ L``."""
    if deg_LK < 1 or K.degree * deg_LK != L.degree:
        raise NotInTowerError(f"[L:K] = {deg_LK} inconsistent with degrees {L.degree}, {K.degree}")
    q = Fraction(abs(L.abs_disc), abs(K.abs_disc) ** deg_LK)
    if q.denominator != 1:
        raise NotInTowerError("fields not in a tower: relative discriminant norm is not integral")
    return int(q)


@dataclass(frozen=True)
class DivisibilityReport:
    lhs: int
    rhs: int
    divides: bool
    quotient: Fraction
    compositum: NumberField


def check_disc_divisibility(K: NumberField, L: NumberField, Lp: NumberField) -> DivisibilityReport:
    """Norm form of ``D_{LL'/K} | D_{L/K}^[LL':L] · D_{L'/K}^[LL':L']``."""
    LL = compositum(L, Lp)
    lhs = rel_disc_norm(LL, K, LL.degree // K.degree)
    rhs = rel_disc_norm(L, K, L.degree // K.degree) ** (LL.degree // L.degree) * rel_disc_norm(
        Lp, K, Lp.degree // K.degree
    ) ** (LL.degree // Lp.degree)
    return DivisibilityReport(lhs, rhs, rhs % lhs == 0, Fraction(rhs, lhs), LL)


def embedding_screen(K: NumberField, L: NumberField, n_primes: int = 50) -> bool:
    """Necessary condition for ``K ⊆ L``: ``f_K`` has a root mod ``r`` whenever ``f_L`` splits mod ``r``.

    A screen, not a proof: only primes not dividing either polynomial
    discriminant are used.
    """
    if L.degree % K.degree:
        return False
    bad = abs(K.poly_disc * L.poly_disc)
    checked = 0
    for r in primes_up_to(100000):
        if bad % r == 0:
            continue
        if splits_completely_mod_p(L.min_poly, r) and not splits_completely_mod_p(K.min_poly, r):
            return False
        checked += 1
        if checked >= n_primes:
            break
    return True
