"""Exact integer factorization and power products with rational exponents.

A :class:`FactoredReal` stands for ``prod(p ** e for p, e in factors)`` with
distinct primes ``p`` and nonzero rational exponents ``e``.  All discriminant
powers handled by the package live in this type, so every inequality between
them can be decided exactly.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

import mpmath
from mpmath.ctx_iv import MPIntervalContext

__all__ = [
    "FactoredReal",
    "factor_integer",
    "fr_compare",
    "is_prime",
    "next_prime",
    "primes_up_to",
]

Rational = Union[int, Fraction]

TRIAL_LIMIT = 10**6
# Above this many bits the cleared-denominator integers are not materialized.
CLEAR_BITS_LIMIT = 1 << 16

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


@lru_cache(maxsize=4)
def primes_up_to(n: int) -> tuple[int, ...]:
    """All primes ``<= n`` by the sieve of Eratosthenes."""
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first twenty prime bases.

    Deterministic for ``n < 3.3e24``; every integer this package meets is far
    below that.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    n = max(n, 1) + 1
    while not is_prime(n):
        n += 1
    return n


def _pollard_brent(n: int, seed: int) -> int:
    rng = random.Random(seed)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _factor_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    root = math.isqrt(n)
    if root * root == n:
        _factor_large(root, out)
        _factor_large(root, out)
        return
    d = _pollard_brent(n, seed=n & 0xFFFF)
    _factor_large(d, out)
    _factor_large(n // d, out)


def factor_integer(n: int) -> "FactoredReal":
    """Prime factorization of a positive integer as a :class:`FactoredReal`.

    >>> factor_integer(2304)
    FactoredReal({2: 8, 3: 2})
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"factor_integer needs n >= 1, got {n}")
    out: dict[int, int] = {}
    bound = min(TRIAL_LIMIT, math.isqrt(n))
    for p in primes_up_to(bound if bound < 2**12 else TRIAL_LIMIT):
        if p > bound:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
            bound = min(bound, math.isqrt(n))
    if n > 1:
        _factor_large(n, out)
    return FactoredReal(out, _trusted=True)


class FactoredReal:
    """Positive real number ``prod p**e`` over distinct primes ``p``.

    Instances are immutable and canonical: zero exponents are dropped and
    every base is checked to be prime on construction.  Arithmetic is exponent
    arithmetic; comparison is exact (see :func:`fr_compare`).
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, factors: Mapping[int, Rational] | Iterable[tuple[int, Rational]] = (), *, _trusted: bool = False):
        items = dict(factors).items() if not isinstance(factors, Mapping) else factors.items()
        clean = []
        for p, e in items:
            e = Fraction(e)
            if e == 0:
                continue
            p = int(p)
            if not _trusted and not is_prime(p):
                raise ValueError(f"base {p} is not prime")
            clean.append((p, e))
        clean.sort()
        if len({p for p, _ in clean}) != len(clean):
            raise ValueError("duplicate prime base")
        self._items: tuple[tuple[int, Fraction], ...] = tuple(clean)
        self._hash = hash(self._items)

    # -- constructors -------------------------------------------------
    @classmethod
    def one(cls) -> "FactoredReal":
        return cls()

    @classmethod
    def from_int(cls, n: int) -> "FactoredReal":
        return factor_integer(abs(int(n)))

    @classmethod
    def from_rational(cls, q: Rational) -> "FactoredReal":
        q = Fraction(q)
        if q <= 0:
            raise ValueError("FactoredReal represents positive reals only")
        return factor_integer(q.numerator) / factor_integer(q.denominator)

    # -- views ----------------------------------------------------------
    @property
    def factors(self) -> dict[int, Fraction]:
        return dict(self._items)

    def items(self):
        return self._items

    def is_one(self) -> bool:
        return not self._items

    def is_integer(self) -> bool:
        return all(e.denominator == 1 and e > 0 for _, e in self._items)

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not a positive integer")
        return math.prod(p ** int(e) for p, e in self._items)

    def to_fraction(self) -> Fraction:
        if any(e.denominator != 1 for _, e in self._items):
            raise ValueError(f"{self} is not rational")
        num = math.prod(p ** int(e) for p, e in self._items if e > 0)
        den = math.prod(p ** int(-e) for p, e in self._items if e < 0)
        return Fraction(num, den)

    def log(self, prec: int = 113) -> mpmath.mpf:
        """Natural logarithm, for display only."""
        with mpmath.workprec(prec):
            return mpmath.fsum(mpmath.mpf(e.numerator) / e.denominator * mpmath.log(p) for p, e in self._items)

    def decimal(self, digits: int = 12) -> str:
        """Decimal rendering with ``digits`` significant digits (reports only)."""
        with mpmath.workdps(digits + 10):
            value = mpmath.exp(self.log(prec=int((digits + 10) * 3.33)))
            return mpmath.nstr(value, digits)

    def __float__(self) -> float:
        return float(mpmath.exp(self.log()))

    # -- arithmetic -----------------------------------------------------
    def __mul__(self, other: "FactoredReal") -> "FactoredReal":
        if not isinstance(other, FactoredReal):
            return NotImplemented
        acc = dict(self._items)
        for p, e in other._items:
            acc[p] = acc.get(p, 0) + e
        return FactoredReal(acc, _trusted=True)

    def inverse(self) -> "FactoredReal":
        return FactoredReal({p: -e for p, e in self._items}, _trusted=True)

    def __truediv__(self, other: "FactoredReal") -> "FactoredReal":
        if not isinstance(other, FactoredReal):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, q: Rational) -> "FactoredReal":
        q = Fraction(q)
        return FactoredReal({p: e * q for p, e in self._items}, _trusted=True)

    def root(self, k: int) -> "FactoredReal":
        return self ** Fraction(1, k)

    # -- comparison -----------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other > 0:
            other = FactoredReal.from_int(other)
        if not isinstance(other, FactoredReal):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "FactoredReal") -> bool:
        return fr_compare(self, other) < 0

    def __le__(self, other: "FactoredReal") -> bool:
        return fr_compare(self, other) <= 0

    def __gt__(self, other: "FactoredReal") -> bool:
        return fr_compare(self, other) > 0

    def __ge__(self, other: "FactoredReal") -> bool:
        return fr_compare(self, other) >= 0

    # -- rendering ------------------------------------------------------
    def __repr__(self) -> str:
        body = ", ".join(f"{p}: {e}" for p, e in self._items)
        return f"FactoredReal({{{body}}})"

    def __str__(self) -> str:
        if not self._items:
            return "1"
        parts = []
        for p, e in self._items:
            parts.append(f"{p}" if e == 1 else f"{p}^{e}" if e.denominator == 1 and e > 0 else f"{p}^({e})")
        return "*".join(parts)

    def to_json(self) -> dict[str, str]:
        return {str(p): str(e) for p, e in self._items}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "FactoredReal":
        return cls({int(p): Fraction(e) for p, e in data.items()})


def _sign_of_log(x: FactoredReal) -> int:
    """Sign of ``sum e*log p`` by outward-rounded interval evaluation.

    Logarithms of distinct primes are linearly independent over the
    rationals, so a non-empty ``x`` has a nonzero logarithm and the loop
    terminates.
    """
    prec = 64
    while True:
        ctx = MPIntervalContext()
        ctx.prec = prec
        total = ctx.mpf(0)
        for p, e in x.items():
            total += ctx.mpf(e.numerator) / e.denominator * ctx.log(p)
        if total.a > 0:
            return 1
        if total.b < 0:
            return -1
        prec *= 2


def fr_compare(a: FactoredReal, b: FactoredReal) -> int:
    """Exact three-way comparison, returning -1, 0 or 1.

    The exponents are brought to a common denominator ``d`` and the integers
    ``prod p**(e*d)`` are compared.  When those integers would exceed
    ``CLEAR_BITS_LIMIT`` bits the sign of the logarithm of ``a/b`` is decided
    instead with rigorous interval arithmetic.

    >>> fr_compare(FactoredReal({2: Fraction(1, 2), 3: Fraction(1, 8)}), FactoredReal({3: 1}))
    -1
    """
    if a._items == b._items:
        return 0
    q = a / b
    d = math.lcm(*(e.denominator for _, e in q.items()))
    pos = [(p, e * d) for p, e in q.items() if e > 0]
    neg = [(p, -e * d) for p, e in q.items() if e < 0]
    bits = sum(float(e) * math.log2(p) for p, e in pos) + sum(float(e) * math.log2(p) for p, e in neg)
    if bits > CLEAR_BITS_LIMIT:
        return _sign_of_log(q)
    lhs = math.prod(p ** int(e) for p, e in pos)
    rhs = math.prod(p ** int(e) for p, e in neg)
    return (lhs > rhs) - (lhs < rhs)
