"""Weil heights via Mahler measure, bounded-height enumeration, field probes.

For an algebraic number with primitive minimal polynomial ``f`` of degree
``d``, ``h = log M(f) / d`` where ``M(f) = |lc| * prod max(1, |z_i|)``.

Roots are approximated with :func:`mpmath.polyroots` and then certified:
with ``W_i = f(z_i) / (lc * prod_{j != i} (z_i - z_j))`` every root lies in
the union of the disks ``|z - z_i| <= d |W_i|``, and a component made of
``k`` disks holds exactly ``k`` roots.  The corrections are evaluated
exactly on dyadic Gaussian rationals, so pairwise disjoint disks isolate
every root with a rigorous radius.
"""

from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath
from mpmath.ctx_iv import MPIntervalContext

from .abelian import AbelianField, abelian_disc
from .arith import is_prime, primes_up_to
from .errors import CapError
from .numfield import build_field
from .polyz import (
    IntPolynomial,
    cyclotomic_polynomial,
    discriminant,
    factor_over_Q,
    resultant,
    splits_completely_mod_p,
)

__all__ = [
    "AlgebraicNumber",
    "HeightBound",
    "HeightInterval",
    "IsolationError",
    "WorkCapError",
    "enumerate_bounded",
    "height_below",
    "min_height_probe",
    "power_poly",
    "reciprocal_poly",
    "rows_to_csv",
    "weil_height",
]

DEFAULT_TOL = Fraction(1, 10**10)
WORK_CAP = 2_000_000
REFINE_STEPS = 6
CSV_COLUMNS = ["min_poly", "degree", "height_lo", "height_hi", "field_id", "screen_N"]


class IsolationError(ArithmeticError):
    """Root isolation did not certify within the precision budget."""


class WorkCapError(CapError):
    """The coefficient box is larger than the configured work cap."""


def _iv(prec: int) -> MPIntervalContext:
    ctx = MPIntervalContext()
    ctx.prec = prec
    return ctx


def _raw_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    if not man and exp:
        raise ArithmeticError("non-finite interval endpoint")
    q = Fraction(int(man) * 2**exp) if exp >= 0 else Fraction(int(man), 2**-exp)
    return -q if sign else q


def _bounds(v) -> tuple[Fraction, Fraction]:
    """Exact rational endpoints of an interval value."""
    lo, hi = v._mpi_
    return _raw_fraction(lo), _raw_fraction(hi)


def _iv_fraction(ctx, q: Fraction):
    return ctx.mpf(q.numerator) / q.denominator


@dataclass(frozen=True)
class HeightInterval:
    """Closed interval ``[lo, hi]`` containing a height.

    ``mahler`` is the exact Mahler measure when it is known to be rational;
    ``exact`` then names the height in closed form.
    """

    lo: Fraction
    hi: Fraction
    mahler: Fraction | None = None
    degree: int = 1

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def exact(self) -> str | None:
        if self.mahler is None:
            return None
        if self.mahler == 1:
            return "0"
        return f"log({self.mahler})" if self.degree == 1 else f"log({self.mahler})/{self.degree}"

    def mid(self) -> float:
        return float((self.lo + self.hi) / 2)

    def overlaps(self, other: "HeightInterval", slack: Fraction = Fraction(0)) -> bool:
        return self.lo <= other.hi + slack and other.lo <= self.hi + slack

    def scaled(self, k: int) -> "HeightInterval":
        return HeightInterval(self.lo * k, self.hi * k)

    def __str__(self) -> str:
        if self.exact is not None:
            return self.exact
        return f"[{mpmath.nstr(mpmath.mpf(self.lo.numerator) / self.lo.denominator, 15)}, {mpmath.nstr(mpmath.mpf(self.hi.numerator) / self.hi.denominator, 15)}]"


@dataclass(frozen=True)
class HeightBound:
    """A height bound ``B``, either a rational number or ``log(c)`` for rational ``c > 1``."""

    value: Fraction | None = None
    log_of: Fraction | None = None

    @classmethod
    def parse(cls, text: str | float | Fraction) -> "HeightBound":
        if isinstance(text, (int, Fraction)):
            return cls(value=Fraction(text))
        if isinstance(text, float):
            return cls(value=Fraction(repr(text)))
        s = text.strip().replace(" ", "")
        m = re.fullmatch(r"(?:log|ln)\(?([0-9/.]+)\)?", s)
        if m:
            c = Fraction(m.group(1))
            if c <= 1:
                raise ValueError("log bound needs an argument > 1")
            return cls(log_of=c)
        v = Fraction(s)
        if v <= 0:
            raise ValueError("height bound must be positive")
        return cls(value=v)

    def interval(self, ctx):
        if self.log_of is not None:
            return ctx.log(_iv_fraction(ctx, self.log_of))
        return _iv_fraction(ctx, self.value)

    def mahler_cap(self, d: int) -> Fraction:
        """A rational upper bound for ``exp(d B)``, exact when ``B = log c``."""
        if self.log_of is not None:
            return self.log_of**d
        ctx = _iv(64 + 4 * d)
        return _bounds(ctx.exp(d * _iv_fraction(ctx, self.value)))[1]

    def __str__(self) -> str:
        return f"log({self.log_of})" if self.log_of is not None else str(self.value)


# ---------------------------------------------------------------------------
# root isolation


def _gauss_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _isolate(f: IntPolynomial, bits: int) -> list[tuple[int, int, Fraction]] | None:
    """Certified disks ``((a + b i) / 2^bits, radius)`` for all roots, or ``None``."""
    d = f.degree
    with mpmath.workprec(bits + 20):
        try:
            approx = mpmath.polyroots(list(reversed(f.coeffs)), maxsteps=200 + 20 * d, extraprec=bits + 20)
        except mpmath.libmp.libhyper.NoConvergence:
            return None
        scale = mpmath.mpf(2) ** bits
        pts = [(int(mpmath.nint(mpmath.re(z) * scale)), int(mpmath.nint(mpmath.im(z) * scale))) for z in approx]
    if len(set(pts)) < d:
        return None
    lc = f.lc
    coeffs = f.coeffs
    disks = []
    for i, z in enumerate(pts):
        # 2^(bits d) f(z / 2^bits) as a Gaussian integer
        num = (0, 0)
        for j in range(d, -1, -1):
            num = _gauss_mul(num, z)
            num = (num[0] + coeffs[j] * 2 ** (bits * (d - j)), num[1])
        den = (1, 0)
        for k, w in enumerate(pts):
            if k != i:
                den = _gauss_mul(den, (z[0] - w[0], z[1] - w[1]))
        # W = num / (lc * den * 2^bits)
        n2 = num[0] ** 2 + num[1] ** 2
        d2 = (lc * lc) * (den[0] ** 2 + den[1] ** 2) * 4**bits
        # radius d |W| rounded up to a dyadic rational
        t = 2 * bits + 64
        r = Fraction(math.isqrt(n2 * 4**t // d2) + 1, 2**t) * d
        disks.append((z[0], z[1], r))
    for i in range(d):
        for k in range(i + 1, d):
            ax, ay, ra = disks[i]
            bx, by, rb = disks[k]
            dist2 = Fraction((ax - bx) ** 2 + (ay - by) ** 2, 4**bits)
            if dist2 <= (ra + rb) ** 2:
                return None
    return disks


def _disk_abs_bounds(x: int, y: int, r: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational bounds ``lo <= |z| <= hi`` for every ``z`` in the disk."""
    n2 = x * x + y * y
    root = math.isqrt(n2)
    lo = Fraction(root, 2**bits) - r
    hi = Fraction(root + (0 if root * root == n2 else 1), 2**bits) + r
    return max(lo, Fraction(0)), hi


def _is_cyclotomic(f: IntPolynomial) -> bool:
    d = f.degree
    if f.lc != 1 or abs(f.coeffs[0]) != 1:
        return False
    # phi(n) = d forces n <= 2 d^2 + 6 (crudely; phi(n) >= sqrt(n/2))
    for n in range(1, 2 * d * d + 7):
        if _phi(n) == d and cyclotomic_polynomial(n) == f:
            return True
    return False


def _phi(n: int) -> int:
    out, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


def _log_mahler(f: IntPolynomial, tol: Fraction) -> tuple[Fraction, Fraction, Fraction | None]:
    """``(lo, hi, M)`` with ``lo <= log M(f) <= hi``; ``M`` exact when rational and known."""
    d = f.degree
    lc, a0 = abs(f.lc), abs(f.coeffs[0])
    if d == 1:
        M = Fraction(max(lc, a0))
        return (*_log_rational(M, tol), M)
    if _is_cyclotomic(f):
        return Fraction(0), Fraction(0), Fraction(1)
    bits = 64
    while True:
        disks = _isolate(f, bits)
        if disks is not None:
            bounds = [_disk_abs_bounds(x, y, r, bits) for x, y, r in disks]
            if all(hi < 1 for _, hi in bounds):
                M = Fraction(lc)
                return (*_log_rational(M, tol), M)
            if all(lo > 1 for lo, _ in bounds):
                M = Fraction(a0)
                return (*_log_rational(M, tol), M)
            ctx = _iv(bits + 32)
            lo_sum = ctx.log(lc)
            hi_sum = ctx.log(lc)
            for lo, hi in bounds:
                if lo > 1:
                    lo_sum += ctx.log(_iv_fraction(ctx, lo))
                if hi > 1:
                    hi_sum += ctx.log(_iv_fraction(ctx, hi))
            L, H = _bounds(lo_sum)[0], _bounds(hi_sum)[1]
            if H - L <= tol * d:
                return L, H, None
        bits *= 2
        if bits > 1 << 14:
            raise IsolationError(f"could not isolate the roots of {f}")


def _log_rational(M: Fraction, tol: Fraction) -> tuple[Fraction, Fraction]:
    if M == 1:
        return Fraction(0), Fraction(0)
    prec = 64
    while True:
        ctx = _iv(prec)
        v = ctx.log(_iv_fraction(ctx, M))
        lo, hi = _bounds(v)
        if hi - lo <= tol:
            return lo, hi
        prec *= 2


def weil_height(f: IntPolynomial, tol: Fraction | float = DEFAULT_TOL, check_irreducible: bool = True) -> HeightInterval:
    """Certified interval for the height of a root of the irreducible ``f``.

    >>> str(weil_height(IntPolynomial([-2, 1])))
    'log(2)'
    """
    tol = Fraction(tol) if not isinstance(tol, float) else Fraction(repr(tol))
    if f.degree < 1:
        raise ValueError("constant polynomial")
    f = f.primitive_part()
    if f.lc < 0:
        f = -f
    if check_irreducible:
        facs = factor_over_Q(f)
        if len(facs) != 1 or facs[0][1] != 1 or facs[0][0].degree != f.degree:
            raise ValueError(f"{f} is reducible")
    d = f.degree
    lo, hi, M = _log_mahler(f, tol)
    return HeightInterval(lo / d, hi / d, M, d)


def height_below(f: IntPolynomial, B: HeightBound, tol: Fraction = DEFAULT_TOL) -> tuple[bool | None, HeightInterval]:
    """Decide ``h < B`` exactly; ``None`` if refinement could not separate them."""
    d = f.degree
    h = weil_height(f, tol, check_irreducible=False)
    if h.mahler is not None and B.log_of is not None:
        return h.mahler < B.log_of**d, h
    for step in range(REFINE_STEPS):
        ctx = _iv(96 + 64 * step)
        b = B.interval(ctx)
        blo, bhi = _bounds(b)
        if h.hi < blo:
            return True, h
        if h.lo >= bhi:
            return False, h
        if h.mahler is not None:
            h = HeightInterval(*[x / d for x in _log_rational(h.mahler, tol / 10 ** (4 * (step + 1)))], h.mahler, d)
        else:
            h = weil_height(f, tol / 10 ** (4 * (step + 1)), check_irreducible=False)
    return None, h


# ---------------------------------------------------------------------------
# algebraic numbers and enumeration


@dataclass(frozen=True)
class AlgebraicNumber:
    """A Galois orbit, given by its primitive minimal polynomial."""

    min_poly: IntPolynomial
    height: HeightInterval
    root_index: int = 0

    @property
    def degree(self) -> int:
        return self.min_poly.degree

    def to_row(self, field_id: str = "", screen: int | str = "") -> dict:
        return {
            "min_poly": ",".join(map(str, self.min_poly.coeffs)),
            "degree": self.degree,
            "height_lo": _fmt(self.height.lo),
            "height_hi": _fmt(self.height.hi),
            "field_id": field_id,
            "screen_N": screen,
        }


def _fmt(q: Fraction) -> str:
    with mpmath.workdps(20):
        return mpmath.nstr(mpmath.mpf(q.numerator) / q.denominator, 15)


@dataclass
class Census:
    degree: int
    bound: HeightBound
    numbers: list[AlgebraicNumber]
    ambiguous: list[IntPolynomial] = field(default_factory=list)
    box: tuple[int, ...] = ()

    @property
    def polynomials(self) -> int:
        return len(self.numbers)

    @property
    def roots(self) -> int:
        return self.degree * len(self.numbers)


def poly_order(f: IntPolynomial) -> tuple:
    """Census order: leading coefficient, then absolute values from the top, then the coefficients."""
    return (f.lc, [abs(c) for c in reversed(f.coeffs)], f.coeffs)


def coefficient_box(d: int, B: HeightBound) -> tuple[int, ...]:
    """``|a_i| <= C(d, i) exp(d B)``, floored; ``M(f) >= |a_i| / C(d, i)``."""
    cap = B.mahler_cap(d)
    return tuple(math.floor(math.comb(d, i) * cap) for i in range(d + 1))


def _box_size(box: Sequence[int]) -> int:
    return math.prod(2 * b + 1 for b in box[:-1]) * box[-1]


def _box_polys(box: Sequence[int]) -> Iterable[IntPolynomial]:
    d = len(box) - 1
    ranges = [range(-b, b + 1) for b in box[:-1]] + [range(1, box[-1] + 1)]

    def rec(i, acc):
        if i < 0:
            yield IntPolynomial(acc)
            return
        for a in ranges[i]:
            yield from rec(i - 1, [a] + acc)

    # leading coefficient outermost so output is grouped by it
    def gen():
        for lead in ranges[d]:
            yield from rec(d - 1, [lead])

    return gen()


def _irreducible_primitive(f: IntPolynomial) -> bool:
    if f.degree >= 2 and f.coeffs[0] == 0:
        return False
    if f.content() != 1:
        return False
    facs = factor_over_Q(f)
    return len(facs) == 1 and facs[0][1] == 1 and facs[0][0].degree == f.degree


def enumerate_bounded(d: int, B: HeightBound | str | float, work_cap: int = WORK_CAP, tol: Fraction = DEFAULT_TOL) -> Census:
    """All algebraic numbers of degree exactly ``d`` with ``h < B``, one per minimal polynomial."""
    if d < 1:
        raise ValueError("degree must be positive")
    if not isinstance(B, HeightBound):
        B = HeightBound.parse(B)
    box = coefficient_box(d, B)
    size = _box_size(box)
    if size > work_cap:
        raise WorkCapError(f"coefficient box {box} has {size} points, cap {work_cap}")
    cap = B.mahler_cap(d)
    out, ambiguous = [], []
    for f in _box_polys(box):
        # cheap exact rejections: M(f) >= |lc|, |a0|
        if f.lc >= cap or abs(f.coeffs[0]) >= cap:
            continue
        if not _irreducible_primitive(f):
            continue
        ok, h = height_below(f, B, tol)
        if ok is None:
            ambiguous.append(f)
        elif ok:
            out.append(AlgebraicNumber(f, h))
    out.sort(key=lambda a: poly_order(a.min_poly))
    return Census(d, B, out, ambiguous, box)


def reciprocal_poly(f: IntPolynomial) -> IntPolynomial:
    """Minimal polynomial of ``1/α``, normalized to a positive leading coefficient."""
    g = f.reversed()
    return g if g.lc > 0 else -g


def power_poly(f: IntPolynomial, k: int) -> IntPolynomial:
    """Minimal polynomial of ``α^k`` from ``Res_y(f(y), x - y^k)``."""
    d = f.degree
    # the resultant has degree d in x: sample and interpolate
    xs = list(range(d + 1))
    ys = [resultant(f, IntPolynomial([x0] + [0] * (k - 1) + [-1])) for x0 in xs]
    coeffs = _interpolate(xs, ys)
    R = IntPolynomial([int(c) for c in coeffs])
    g = factor_over_Q(R)[0][0]
    return g if g.lc > 0 else -g


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        num = [Fraction(1)]
        den = 1
        for j in range(n):
            if j != i:
                num = [Fraction(0)] + num
                for t in range(len(num) - 1):
                    num[t] -= xs[j] * num[t + 1]
                den *= xs[i] - xs[j]
        for t in range(n):
            coeffs[t] += Fraction(ys[i]) * num[t] / den
    assert all(c.denominator == 1 for c in coeffs)
    return coeffs


# ---------------------------------------------------------------------------
# field identification and minimum-height probes


def _monic_associate(g: IntPolynomial) -> IntPolynomial:
    """Monic integer polynomial of ``lc * α``: same field as ``g``."""
    a = g.lc
    d = g.degree
    return IntPolynomial([c * a ** (d - 1 - i) if i < d else 1 for i, c in enumerate(g.coeffs)])


@dataclass(frozen=True)
class Identification:
    status: str  # identified | rejected | inconclusive
    reason: str
    primes_used: int


def identify(g: IntPolynomial, L: AbelianField, screen_size: int = 50, prime_limit: int = 100000) -> Identification:
    """Does ``g`` define ``L``?  Degree, discriminant, then a splitting screen."""
    p = L.degree
    if g.degree != p:
        return Identification("rejected", "degree", 0)
    K = build_field(_monic_associate(g), check_irreducible=False)
    if abs(K.abs_disc) != abelian_disc(L).to_int():
        return Identification("rejected", "discriminant", 0)
    m = L.conductor
    bad = abs(m * discriminant(g) * g.lc)
    used = 0
    for r in primes_up_to(prime_limit):
        if bad % r == 0:
            continue
        if splits_completely_mod_p(g, r) != L.contains_residue(r % m):
            return Identification("rejected", f"splitting at {r}", used + 1)
        used += 1
        if used >= screen_size:
            return Identification("identified", "splitting screen", used)
    return Identification("inconclusive", "too few screening primes", used)


@dataclass
class ProbeReport:
    field: AbelianField
    bound: HeightBound
    screen_size: int
    candidates: list[tuple[AlgebraicNumber, Identification]]
    ambiguous: list[IntPolynomial]

    @property
    def members(self) -> list[AlgebraicNumber]:
        return [a for a, ident in self.candidates if ident.status == "identified"]

    @property
    def min_height(self) -> HeightInterval | None:
        mem = self.members
        if not mem:
            return None
        return min((a.height for a in mem), key=lambda h: (h.hi, h.lo))

    @property
    def witness(self) -> AlgebraicNumber | None:
        mem = self.members
        return min(mem, key=lambda a: (a.height.hi, a.height.lo)) if mem else None

    def rows(self) -> list[dict]:
        return [
            a.to_row(self.field.descriptor() if ident.status == "identified" else ident.status + ":" + ident.reason, self.screen_size)
            for a, ident in self.candidates
        ]

    def to_json(self) -> dict:
        mh = self.min_height
        return {
            "field": self.field.descriptor(),
            "bound": str(self.bound),
            "screen_size": self.screen_size,
            "candidates": self.rows(),
            "min_height": "none below B" if mh is None else {"lo": _fmt(mh.lo), "hi": _fmt(mh.hi), "exact": mh.exact},
            "witness": None if self.witness is None else ",".join(map(str, self.witness.min_poly.coeffs)),
            "inconclusive": [a.to_row() for a, i in self.candidates if i.status == "inconclusive"],
            "boundary_ambiguous": [",".join(map(str, f.coeffs)) for f in self.ambiguous],
            "note": "finite table of infima over degree-p elements; the limit statement itself is not checked",
        }


def min_height_probe(L: AbelianField, B: HeightBound | str | float, screen_size: int = 50, work_cap: int = WORK_CAP) -> ProbeReport:
    """Smallest height of an element of ``L \\ Q`` below ``B``, if any.

    Elements of ``L`` outside ``Q`` have degree exactly ``[L:Q]``, so the
    degree-``p`` census below ``B`` contains all of them.
    """
    p = L.degree
    if not is_prime(p):
        raise ValueError(f"field degree {p} is not prime")
    if not isinstance(B, HeightBound):
        B = HeightBound.parse(B)
    census = enumerate_bounded(p, B, work_cap=work_cap)
    cands = [(a, identify(a.min_poly, L, screen_size)) for a in census.numbers]
    return ProbeReport(L, B, screen_size, cands, census.ambiguous)


def rows_to_csv(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, delimiter=";", lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow(row)
    return buf.getvalue()
