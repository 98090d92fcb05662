"""Univariate polynomials over the integers.

Coefficient sequences are stored constant term first.  Besides ring
arithmetic the module provides subresultant resultants, discriminants,
arithmetic over ``GF(p)`` and complete factorization over the rationals by
the Berlekamp-Zassenhaus route (modular factorization, Hensel lifting,
subset recombination).
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .arith import next_prime
from .errors import CapError

__all__ = [
    "IntPolynomial",
    "FactorizationCapError",
    "resultant",
    "discriminant",
    "poly_gcd",
    "squarefree_decomposition",
    "factor_over_Q",
    "is_irreducible",
    "factor_mod_p",
    "degree_pattern_mod_p",
    "splits_completely_mod_p",
    "cyclotomic_polynomial",
    "MAX_MODULAR_FACTORS",
]

MAX_MODULAR_FACTORS = 24
_EDF_SEED = 0x5EED


class FactorizationCapError(CapError):
    """Too many modular factors for subset recombination."""


def _strip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


class IntPolynomial:
    """Immutable polynomial with integer coefficients, constant term first.

    >>> f = IntPolynomial([-1, -1, 0, 1])      # x^3 - x - 1
    >>> f.derivative()
    IntPolynomial([-1, 0, 3])
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        object.__setattr__(self, "coeffs", tuple(_strip(c)))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # -- construction ---------------------------------------------------
    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        out = cls([1])
        for r in roots:
            out = out * cls([-r, 1])
        return out

    @classmethod
    def from_rational(cls, coeffs: Sequence[Fraction]) -> "IntPolynomial":
        """Primitive integer multiple of a rational polynomial."""
        den = math.lcm(*(Fraction(a).denominator for a in coeffs)) if coeffs else 1
        return cls([int(Fraction(a) * den) for a in coeffs]).primitive_part()

    # -- basic views ----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __lt__(self, other: "IntPolynomial") -> bool:
        return (self.degree, self.coeffs[::-1]) < (other.degree, other.coeffs[::-1])

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial([other])
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-a for a in self.coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial([other])
        return self + (-other)

    def __rsub__(self, other: int) -> "IntPolynomial":
        return IntPolynomial([other]) - self

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([a * other for a in self.coeffs])
        return IntPolynomial(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x):
        acc = 0 * x
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * a for i, a in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        """Gcd of the coefficients, signed like the leading coefficient."""
        if not self.coeffs:
            return 0
        g = reduce(math.gcd, self.coeffs)
        return -g if self.lc < 0 else g

    def primitive_part(self) -> "IntPolynomial":
        c = self.content()
        if c == 0:
            return self
        return IntPolynomial([a // c for a in self.coeffs])

    def monic_rational(self) -> list[Fraction]:
        return [Fraction(a, self.lc) for a in self.coeffs]

    def reversed(self) -> "IntPolynomial":
        """``x**deg * f(1/x)``; roots become their reciprocals."""
        return IntPolynomial(self.coeffs[::-1])

    def compose(self, g: "IntPolynomial") -> "IntPolynomial":
        out = IntPolynomial()
        for a in reversed(self.coeffs):
            out = out * g + a
        return out

    def shift(self, a: int) -> "IntPolynomial":
        """``f(x + a)``."""
        return self.compose(IntPolynomial([a, 1]))

    def pseudo_divmod(self, g: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial", int]:
        """Return ``(q, r, k)`` with ``lc(g)**k * self == q*g + r`` and ``deg r < deg g``."""
        if g.is_zero():
            raise ZeroDivisionError("pseudo-division by the zero polynomial")
        q, r, k = _pseudo_divmod(list(self.coeffs), list(g.coeffs))
        return IntPolynomial(q), IntPolynomial(r), k

    def divmod_exact(self, g: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Division over the rationals whose quotient and remainder are integral.

        Raises ``ValueError`` if the rational quotient or remainder is not an
        integer polynomial.
        """
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        q, r = _divmod_q(self.coeffs, g.coeffs)
        if any(c.denominator != 1 for c in q + r):
            raise ValueError(f"{self} is not divisible by {g} over the integers")
        return IntPolynomial(int(c) for c in q), IntPolynomial(int(c) for c in r)

    def __divmod__(self, g: "IntPolynomial"):
        return self.divmod_exact(g)

    def __floordiv__(self, g: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod_exact(g)
        if not r.is_zero():
            raise ValueError(f"{g} does not divide {self}")
        return q

    def __mod__(self, g: "IntPolynomial") -> "IntPolynomial":
        return self.divmod_exact(g)[1]

    def divides(self, f: "IntPolynomial") -> bool:
        q, r = _divmod_q(f.coeffs, self.coeffs)
        return not any(r) and all(c.denominator == 1 for c in q)

    def height(self) -> int:
        return max((abs(a) for a in self.coeffs), default=0)

    def norm2(self) -> float:
        return math.sqrt(sum(a * a for a in self.coeffs))


# ---------------------------------------------------------------------------
# list-level kernels over Z and Q


def _mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pseudo_divmod(f: list[int], g: list[int]) -> tuple[list[int], list[int], int]:
    dg = len(g) - 1
    lc = g[-1]
    q = [0] * max(len(f) - dg, 0)
    r = list(f)
    k = 0
    while len(r) - 1 >= dg and r:
        shift = len(r) - 1 - dg
        t = r[-1]
        r = [c * lc for c in r]
        q = [c * lc for c in q]
        q[shift] += t
        for i, c in enumerate(g):
            r[shift + i] -= t * c
        k += 1
        _strip(r)
    return _strip(q), r, k


def _divmod_q(f: Sequence, g: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    r = [Fraction(c) for c in f]
    dg = len(g) - 1
    lc = Fraction(g[-1])
    q = [Fraction(0)] * max(len(f) - dg, 0)
    while r and len(r) - 1 >= dg:
        shift = len(r) - 1 - dg
        t = r[-1] / lc
        q[shift] = t
        for i, c in enumerate(g):
            r[shift + i] -= t * c
        r.pop()
        _strip(r)
    return _strip(q), r


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Resultant by the subresultant PRS (Cohen, Alg. 3.3.7).

    >>> resultant(IntPolynomial([-2, 0, 1]), IntPolynomial([-3, 0, 1]))
    1
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    A, B = list(f.primitive_part().coeffs), list(g.primitive_part().coeffs)
    t = f.content() ** (len(B) - 1) * g.content() ** (len(A) - 1)
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 and (len(B) - 1) % 2:
            s = -1
    gg = hh = 1
    while len(B) > 1:
        delta = len(A) - len(B)
        if (len(A) - 1) % 2 and (len(B) - 1) % 2:
            s = -s
        _, R, k = _pseudo_divmod(A, B)
        if not R:
            return 0
        if delta + 1 > k:
            R = [c * B[-1] ** (delta + 1 - k) for c in R]
        A = B
        den = gg * hh**delta
        B = [c // den for c in R]
        gg = A[-1]
        if delta == 1:
            hh = gg
        elif delta > 1:
            hh = gg**delta // hh ** (delta - 1)
    degA = len(A) - 1
    h = B[-1] ** degA // hh ** (degA - 1)
    return s * t * h


def discriminant(f: IntPolynomial) -> int:
    """``(-1)**(n(n-1)/2) * Res(f, f') / lc(f)``.

    >>> discriminant(IntPolynomial([-1, -1, 0, 1]))
    -23
    """
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs positive degree")
    if n == 1:
        return 1
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, f.lc)
    assert rem == 0
    return q


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (contents are ignored)."""
    if f.is_zero() and g.is_zero():
        return IntPolynomial()
    A, B = f.primitive_part(), g.primitive_part()
    if A.degree < B.degree:
        A, B = B, A
    while not B.is_zero():
        _, R, _ = A.pseudo_divmod(B)
        A, B = B, R.primitive_part()
    A = A.primitive_part()
    return -A if A.lc < 0 else A


def squarefree_decomposition(f: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: pairs ``(a_i, i)`` with ``pp(f) = prod a_i**i``, constants omitted."""
    f = f.primitive_part()
    if f.lc < 0:
        f = -f
    if f.degree < 1:
        return []
    fp = f.derivative()
    g = poly_gcd(f, fp)
    b = f // g
    d = fp // g - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        d = d // a - b.derivative()
        i += 1
    return out


# ---------------------------------------------------------------------------
# arithmetic over GF(p), lists constant term first


def _pstrip(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _pstrip([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _pstrip([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _pmul(a, b, p):
    return _pstrip([c % p for c in _mul(a, b)])


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(r) - db, 0)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        t = r[-1] * inv % p
        q[shift] = t
        for i, c in enumerate(b):
            r[shift + i] = (r[shift + i] - t * c) % p
        _pstrip(r)
    return _pstrip(q), r


def _pmonic(a, p):
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _pgcd(a, b, p):
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return _pmonic(a, p) if a else a


def _ppowmod(a, e, mod, p):
    out = [1]
    base = _pdivmod(a, mod, p)[1]
    while e:
        if e & 1:
            out = _pdivmod(_pmul(out, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return out


def _pderiv(a, p):
    return _pstrip([i * c % p for i, c in enumerate(a)][1:])


def _distinct_degree(f, p):
    """Pairs ``(g, d)``: ``g`` is the product of the degree-``d`` factors of squarefree monic ``f``."""
    out = []
    h = [0, 1]
    d = 0
    f = list(f)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _ppowmod(h, p, f, p)
        g = _pgcd(f, _psub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _pdivmod(f, g, p)[0]
            h = _pdivmod(h, f, p)[1]
    if len(f) > 1:
        out.append((_pmonic(f, p), len(f) - 1))
    return out


def _equal_degree(f, d, p, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _pstrip([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            t = a
            acc = a
            for _ in range(d - 1):
                t = _pdivmod(_pmul(t, t, p), f, p)[1]
                acc = _padd(acc, t, p)
            b = acc
        else:
            b = _psub(_ppowmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = _pgcd(f, b, p)
        if 1 < len(g) < len(f):
            h = _pdivmod(f, g, p)[0]
            return _equal_degree(g, d, p, rng) + _equal_degree(_pmonic(h, p), d, p, rng)


def factor_mod_p(f: IntPolynomial, p: int, seed: int = _EDF_SEED) -> list[list[int]]:
    """Monic irreducible factors of ``f`` modulo ``p``; ``f`` must be squarefree mod ``p``."""
    a = _pstrip([c % p for c in f.coeffs])
    if len(a) < 2:
        return []
    a = _pmonic(a, p)
    rng = random.Random(seed)
    out = []
    for g, d in _distinct_degree(a, p):
        out.extend(_equal_degree(g, d, p, rng))
    out.sort(key=lambda g: (len(g), g[::-1]))
    return out


def _squarefree_mod_p(f: IntPolynomial, p: int) -> bool:
    a = _pstrip([c % p for c in f.coeffs])
    if len(a) - 1 != f.degree:
        return False
    return len(_pgcd(a, _pderiv(a, p), p)) == 1


def degree_pattern_mod_p(f: IntPolynomial, p: int) -> list[int]:
    """Sorted degrees of the irreducible factors of squarefree ``f`` mod ``p``."""
    if not _squarefree_mod_p(f, p):
        raise ValueError(f"{f} is not squarefree modulo {p}")
    return sorted(len(g) - 1 for g in factor_mod_p(f, p))


def splits_completely_mod_p(f: IntPolynomial, p: int) -> bool:
    """Whether ``f`` has ``deg f`` distinct roots modulo ``p``."""
    a = _pstrip([c % p for c in f.coeffs])
    if len(a) - 1 != f.degree:
        return False
    a = _pmonic(a, p)
    xp = _ppowmod([0, 1], p, a, p)
    g = _pgcd(a, _psub(xp, [0, 1], p), p)
    return len(g) - 1 == f.degree


# ---------------------------------------------------------------------------
# Hensel lifting and recombination


def _sym(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _zmul_mod(a, b, m):
    return [c % m for c in _mul(a, b)]


def _zdivmod_monic(a, b, m):
    """Division by a monic ``b`` modulo ``m``."""
    r = [c % m for c in a]
    db = len(b) - 1
    q = [0] * max(len(r) - db, 0)
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        shift = len(r) - 1 - db
        t = r[-1]
        q[shift] = t
        for i, c in enumerate(b):
            r[shift + i] = (r[shift + i] - t * c) % m
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _pext_gcd(a, b, p):
    """``s, t`` with ``s*a + t*b == 1`` over GF(p) for coprime ``a, b``."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
    inv = pow(r0[0], -1, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


def _hensel_step(m, f, g, h, s, t):
    """One quadratic Hensel step (von zur Gathen & Gerhard, Alg. 15.10)."""
    M = m * m
    e = [(x - y) % M for x, y in itertools.zip_longest(f, _zmul_mod(g, h, M), fillvalue=0)]
    q, r = _zdivmod_monic(_zmul_mod(s, e, M), h, M)
    g1 = [(x + y) % M for x, y in itertools.zip_longest(g, _zmul_mod(t, e, M), fillvalue=0)]
    g1 = [(x + y) % M for x, y in itertools.zip_longest(g1, _zmul_mod(q, g, M), fillvalue=0)]
    h1 = [(x + y) % M for x, y in itertools.zip_longest(h, r, fillvalue=0)]
    while h1 and h1[-1] == 0:
        h1.pop()
    while g1 and g1[-1] == 0:
        g1.pop()
    b = [(x + y) % M for x, y in itertools.zip_longest(_zmul_mod(s, g1, M), _zmul_mod(t, h1, M), fillvalue=0)]
    b[0] -= 1
    b = [c % M for c in b]
    c, d = _zdivmod_monic(_zmul_mod(s, b, M), h1, M)
    s1 = [(x - y) % M for x, y in itertools.zip_longest(s, d, fillvalue=0)]
    t1 = [(x - y) % M for x, y in itertools.zip_longest(t, _zmul_mod(t, b, M), fillvalue=0)]
    t1 = [(x - y) % M for x, y in itertools.zip_longest(t1, _zmul_mod(c, g1, M), fillvalue=0)]
    while s1 and s1[-1] == 0:
        s1.pop()
    while t1 and t1[-1] == 0:
        t1.pop()
    return g1, h1, s1, t1


def _hensel_lift(f: list[int], factors: list[list[int]], p: int, k: int) -> list[list[int]]:
    """Lift monic factors of ``f`` mod ``p`` to factors mod ``p**k`` (multifactor tree)."""
    r = len(factors)
    lc = f[-1]
    if r == 1:
        pk = p**k
        inv = pow(lc, -1, pk)
        return [[c * inv % pk for c in f]]
    mid = r // 2
    g = reduce(lambda a, b: _pmul(a, b, p), factors[:mid], [1])
    h = reduce(lambda a, b: _pmul(a, b, p), factors[mid:], [1])
    g = [c * lc % p for c in g]
    s, t = _pext_gcd(g, h, p)
    m = p
    d = max(1, math.ceil(math.log2(k))) if k > 1 else 0
    for _ in range(d):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    pk = p**k
    g = [c % pk for c in g]
    h = [c % pk for c in h]
    return _hensel_lift(g, factors[:mid], p, k) + _hensel_lift(h, factors[mid:], p, k)


def _mignotte_bound(f: IntPolynomial) -> int:
    n = f.degree
    norm = math.isqrt(sum(a * a for a in f.coeffs)) + 1
    return (math.comb(n, n // 2) * norm) * abs(f.lc)


def _choose_prime(f: IntPolynomial) -> int:
    disc = discriminant(f)
    key = f.lc * disc
    p = 2
    while key % p == 0:
        p = next_prime(p)
    return p


def _zassenhaus(f: IntPolynomial) -> list[IntPolynomial]:
    """Irreducible factors of a primitive squarefree ``f`` with ``lc > 0``."""
    n = f.degree
    if n == 1:
        return [f]
    p = _choose_prime(f)
    modular = factor_mod_p(f, p)
    r = len(modular)
    if r == 1:
        return [f]
    if r > MAX_MODULAR_FACTORS:
        raise FactorizationCapError(f"{r} modular factors mod {p} exceeds cap {MAX_MODULAR_FACTORS}")
    bound = 2 * _mignotte_bound(f) + 1
    k = 1
    while p**k < bound:
        k += 1
    pk = p**k
    lifted = _hensel_lift([c % pk for c in f.coeffs], modular, p, k)

    factors = []
    indices = list(range(len(lifted)))
    F = f
    s = 1
    while 2 * s <= len(indices):
        for S in itertools.combinations(indices, s):
            b = F.lc
            G = reduce(lambda a, c: _zmul_mod(a, c, pk), (lifted[i] for i in S), [b % pk])
            G = IntPolynomial(_sym(c, pk) for c in G).primitive_part()
            q, rem = _divmod_q(F.coeffs, G.coeffs)
            if not rem and all(c.denominator == 1 for c in q):
                factors.append(G if G.lc > 0 else -G)
                F = IntPolynomial(int(c) for c in q).primitive_part()
                if F.lc < 0:
                    F = -F
                indices = [i for i in indices if i not in S]
                break
        else:
            s += 1
    factors.append(F)
    return factors


def factor_over_Q(f: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Complete factorization into primitive irreducibles with positive leading coefficient.

    The product of the returned factors raised to their multiplicities equals
    ``f`` up to a rational constant.

    >>> [(str(g), e) for g, e in factor_over_Q(IntPolynomial([-1, 0, 0, 0, 1]))]
    [('x - 1', 1), ('x + 1', 1), ('x^2 + 1', 1)]
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    out: list[tuple[IntPolynomial, int]] = []
    # factor out powers of x first: keeps the modular stage on nonzero constant terms
    coeffs = list(f.coeffs)
    zeros = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        zeros += 1
    if zeros:
        out.append((IntPolynomial([0, 1]), zeros))
    rest = IntPolynomial(coeffs)
    for g, mult in squarefree_decomposition(rest):
        for h in _zassenhaus(g):
            out.append((h, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs[::-1], t[1]))
    return out


def is_irreducible(f: IntPolynomial) -> bool:
    """Irreducibility over the rationals of a nonconstant polynomial."""
    if f.degree < 1:
        return False
    facs = factor_over_Q(f)
    return len(facs) == 1 and facs[0][1] == 1


def cyclotomic_polynomial(n: int) -> IntPolynomial:
    """``Phi_n`` by exact division of ``x**n - 1`` by ``Phi_d``, ``d | n``, ``d < n``."""
    return _cyclotomic(n)


_CYCLO_CACHE: dict[int, IntPolynomial] = {}


def _cyclotomic(n: int) -> IntPolynomial:
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    f = IntPolynomial([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            f = f // _cyclotomic(d)
    _CYCLO_CACHE[n] = f
    return f
