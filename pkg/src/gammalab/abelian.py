"""Abelian number fields as fixed fields of subgroups of ``(Z/mZ)^*``.

An :class:`AbelianField` is stored by its conductor ``m`` and the fixing
subgroup ``H <= (Z/mZ)^*``.  The unit group is identified with
``Z^r / diag(n)`` through discrete logarithms on each prime-power factor:
an odd prime ``p`` contributes one coordinate (the logarithm to a primitive
root modulo ``p^2``), the prime 2 contributes the pair ``(a, b)`` of
``(-1)^a 5^b``.  With these generators reducing to a smaller modulus keeps
every coordinate unchanged, so lifting a field to a larger modulus is just
an embedding of lattices.  ``H`` is stored as the Hermite basis of its
lattice, which makes equality, join (intersection of subgroups) and meet
(sum of subgroups) exact lattice operations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import lattice as lat
from .arith import FactoredReal, factor_integer, is_prime
from .errors import CapError, DegreeCapError
from .polyz import IntPolynomial, cyclotomic_polynomial, poly_gcd

__all__ = [
    "AbelianField",
    "NotSubfieldError",
    "SubgroupCapError",
    "abelian_disc",
    "cyclic_subfield",
    "generator_polynomial",
    "gaussian_period_polynomial",
    "intermediate_fields",
    "join",
    "kronecker",
    "linearly_disjoint",
    "meet",
    "QQ",
]

SUBGROUP_CAP = 4096
ELEMENT_LIST_CAP = 4096
PERIOD_MODULUS_CAP = 20000


class NotSubfieldError(ValueError):
    """Raised when a containment precondition between fields fails."""


class SubgroupCapError(CapError):
    """Subgroup enumeration would exceed the configured cap."""


# ---------------------------------------------------------------------------
# the unit group (Z/mZ)^* in logarithmic coordinates


@lru_cache(maxsize=None)
def _primitive_root_p2(p: int) -> int:
    """Least primitive root modulo ``p`` that is also primitive modulo ``p^2``."""
    order = p - 1
    qs = list(factor_integer(order).factors)
    g = 2
    while True:
        if all(pow(g, order // q, p) != 1 for q in qs):
            break
        g += 1
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


@lru_cache(maxsize=None)
def _frame(m: int) -> tuple[tuple[tuple[int, int], int], ...]:
    """Coordinate keys and their moduli for ``(Z/mZ)^*``; trivial factors omitted."""
    out = []
    for p, e in factor_integer(m).items():
        e = int(e)
        if p == 2:
            if e >= 2:
                out.append(((2, 0), 2))
            if e >= 3:
                out.append(((2, 1), 2 ** (e - 2)))
        else:
            out.append(((p, 0), (p - 1) * p ** (e - 1)))
    return tuple(out)


def _component_modulus(key: tuple[int, int], e: int) -> int:
    """Modulus of coordinate ``key`` for the prime-power exponent ``e``."""
    p, idx = key
    if p == 2:
        if idx == 0:
            return 2 if e >= 2 else 1
        return 2 ** (e - 2) if e >= 3 else 1
    return (p - 1) * p ** (e - 1) if e >= 1 else 1


def _dlog(a: int, g: int, n: int, mod: int) -> int:
    """``x mod n`` with ``g**x == a (mod mod)``; ``g`` has order ``n`` (Pohlig-Hellman)."""
    a %= mod
    residues, moduli = [], []
    for ell, k in factor_integer(n).items():
        k = int(k)
        gamma = pow(g, n // ell, mod)
        x = 0
        table = {}
        step = math.isqrt(ell) + 1
        cur = 1
        for j in range(step):
            table.setdefault(cur, j)
            cur = cur * gamma % mod
        giant = pow(gamma, -step, mod)
        g_inv = pow(g, -1, mod)
        for j in range(k):
            h = pow(a * pow(g_inv, x, mod) % mod, n // ell ** (j + 1), mod)
            y = h
            for i in range(step + 1):
                if y in table:
                    d = i * step + table[y]
                    break
                y = y * giant % mod
            else:
                raise ArithmeticError("discrete logarithm does not exist")
            x += (d % ell) * ell**j
        residues.append(x)
        moduli.append(ell**k)
    x, M = 0, 1
    for r, mm in zip(residues, moduli):
        # CRT step
        t = (r - x) * pow(M, -1, mm) % mm
        x += M * t
        M *= mm
    return x % n


def residue_coords(a: int, m: int) -> tuple[int, ...]:
    """Logarithmic coordinates of the unit ``a`` modulo ``m``."""
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    out = []
    fac = factor_integer(m).factors
    for (p, idx), n in _frame(m):
        e = int(fac[p])
        pe = p**e
        if p == 2:
            sign = 1 if a % 4 == 3 else 0
            if idx == 0:
                out.append(sign)
            else:
                b = a % pe if not sign else (-a) % pe
                out.append(_dlog(b, 5, n, pe))
        else:
            out.append(_dlog(a % pe, _primitive_root_p2(p), n, pe))
    return tuple(out)


def coords_residue(x: Sequence[int], m: int) -> int:
    """Inverse of :func:`residue_coords`."""
    fac = factor_integer(m).factors
    parts: dict[int, int] = {}
    for ((p, idx), n), c in zip(_frame(m), x):
        pe = p ** int(fac[p])
        if p == 2:
            if idx == 0:
                factor = pe - 1 if c % 2 else 1
            else:
                factor = pow(5, c % n, pe)
            parts[2] = parts.get(2, 1) * factor % pe
        else:
            parts[p] = pow(_primitive_root_p2(p), c % n, pe)
    r, M = 0, 1
    for p, e in fac.items():
        pe = p ** int(e)
        v = parts.get(p, 1) % pe
        t = (v - r) * pow(M, -1, pe) % pe
        r += M * t
        M *= pe
    return r % m if m > 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol ``(a/n)`` for ``n >= 1``."""
    if n <= 0:
        raise ValueError("kronecker symbol needs n >= 1")
    result = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


# ---------------------------------------------------------------------------
# fields


@dataclass(frozen=True)
class AbelianField:
    """Fixed field of ``H <= (Z/mZ)^*`` acting on ``Q(zeta_m)``, ``m`` the conductor.

    ``basis`` is the Hermite basis of the lattice of ``H`` in logarithmic
    coordinates; use the constructors rather than building it by hand.
    """

    conductor: int
    basis: tuple[tuple[int, ...], ...]
    _degree: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_degree", lat.det(self.basis) if self.basis else 1)

    # -- constructors ---------------------------------------------------
    @classmethod
    def rationals(cls) -> "AbelianField":
        return cls(1, ())

    @classmethod
    def from_subgroup(cls, m: int, generators: Iterable[int]) -> "AbelianField":
        """Fixed field of the subgroup of ``(Z/mZ)^*`` generated by ``generators``."""
        if m < 1:
            raise ValueError("modulus must be positive")
        fr = _frame(m)
        rows = [residue_coords(int(g) % m, m) for g in generators] if m > 2 else []
        basis = lat.hnf_mod(rows, [n for _, n in fr])
        return _canonical(m, basis)

    @classmethod
    def cyclotomic(cls, m: int) -> "AbelianField":
        return cls.from_subgroup(m, [])

    @classmethod
    def quadratic(cls, d: int) -> "AbelianField":
        """``Q(sqrt(d))`` for a squarefree integer ``d != 0, 1``."""
        if d in (0, 1) or any(e > 1 for e in factor_integer(abs(d)).factors.values()):
            raise ValueError(f"{d} is not a squarefree integer other than 0, 1")
        D = d if d % 4 == 1 else 4 * d
        m = abs(D)
        gens = [a for a in range(1, m) if math.gcd(a, m) == 1 and kronecker(D, a) == 1]
        return cls.from_subgroup(m, gens)

    @classmethod
    def parse(cls, text: str) -> "AbelianField":
        """Parse ``m=<modulus>;H={r1,r2,...}`` or ``m=<modulus>;H=<g1,g2,...>``.

        Both forms list residues generating ``H``; an element list is a
        generating set of itself.
        """
        try:
            mpart, hpart = (s.strip() for s in text.split(";"))
            if not mpart.startswith("m=") or not hpart.startswith("H="):
                raise ValueError
            m = int(mpart[2:])
            body = hpart[2:].strip()
            if body[:1] + body[-1:] not in ("{}", "<>"):
                raise ValueError
            inner = body[1:-1].strip()
            gens = [int(s) for s in inner.split(",")] if inner else []
        except ValueError:
            raise ValueError(f"bad abelian field descriptor {text!r}") from None
        if m < 1 or any(math.gcd(g, m) != 1 for g in gens):
            raise ValueError(f"bad abelian field descriptor {text!r}: residues must be units")
        return cls.from_subgroup(m, gens)

    # -- views ----------------------------------------------------------
    @property
    def degree(self) -> int:
        return self._degree

    @property
    def modulus(self) -> int:
        return self.conductor

    @property
    def frame(self):
        return _frame(self.conductor)

    def subgroup_order(self) -> int:
        return _phi(self.conductor) // self.degree

    def is_rational(self) -> bool:
        return self.conductor == 1

    def generators(self) -> list[int]:
        """Residues generating ``H`` (images of the Hermite basis rows)."""
        m = self.conductor
        if m <= 2:
            return []
        return sorted({coords_residue(row, m) for row in self.basis} - {1})

    def elements(self, cap: int = ELEMENT_LIST_CAP) -> list[int]:
        """Sorted element list of ``H``; refuses subgroups larger than ``cap``."""
        m = self.conductor
        if m <= 2:
            return [1]
        order = self.subgroup_order()
        if order > cap:
            raise SubgroupCapError(f"|H| = {order} exceeds element-list cap {cap}")
        elems = {1}
        frontier = [1]
        gens = self.generators()
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g % m
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(elems)

    def contains_residue(self, a: int) -> bool:
        """Whether the class of ``a`` (a unit mod a multiple of the conductor) lies in ``H``."""
        m = self.conductor
        if m <= 2:
            return True
        return lat.contains(self.basis, residue_coords(a % m, m))

    def descriptor(self) -> str:
        """Canonical text ``m=<conductor>;H={sorted residues}`` (generators for big ``H``)."""
        try:
            body = "{" + ",".join(map(str, self.elements())) + "}"
        except SubgroupCapError:
            body = "<" + ",".join(map(str, self.generators())) + ">"
        return f"m={self.conductor};H={body}"

    def sort_key(self):
        return (self.degree, self.conductor, self.basis)

    def __str__(self) -> str:
        return self.descriptor()

    def __le__(self, other: "AbelianField") -> bool:
        """Field containment ``self ⊆ other``."""
        return is_subfield(self, other)

    def __lt__(self, other: "AbelianField") -> bool:
        return self != other and is_subfield(self, other)


QQ = AbelianField.rationals()


def _phi(m: int) -> int:
    out = 1
    for p, e in factor_integer(m).items():
        out *= (p - 1) * p ** (int(e) - 1)
    return out


def _lift(A: AbelianField, m: int) -> tuple[tuple[int, ...], ...]:
    """Lattice of ``H_A`` lifted to the frame of ``m`` (a multiple of the conductor)."""
    if m % A.conductor:
        raise ValueError(f"{m} is not a multiple of the conductor {A.conductor}")
    big = _frame(m)
    small_keys = [k for k, _ in A.frame]
    pos = {k: i for i, (k, _) in enumerate(big)}
    rows = []
    for row in A.basis:
        v = [0] * len(big)
        for k, c in zip(small_keys, row):
            v[pos[k]] = c
        rows.append(v)
    for k, _ in big:
        if k not in small_keys:
            rows.append([int(kk == k) for kk, _ in big])
    if not big:
        return ()
    return lat.hnf_mod(rows, [n for _, n in big])


def _canonical(m: int, basis) -> AbelianField:
    """Reduce a subgroup lattice modulo ``m`` to conductor form."""
    if m <= 2:
        return AbelianField(1, ())
    fr = _frame(m)
    fac = factor_integer(m).factors
    index = {k: i for i, (k, _) in enumerate(fr)}
    cond = 1
    for p, e in fac.items():
        e = int(e)
        keys = [k for k, _ in fr if k[0] == p]
        for f in range(0, e + 1):
            ok = True
            for k in keys:
                v = [0] * len(fr)
                v[index[k]] = _component_modulus(k, f)
                if not lat.contains(basis, v):
                    ok = False
                    break
            if ok:
                break
        cond *= p**f
    new = _frame(cond)
    keep = [index[k] for k, _ in new]
    if not new:
        return AbelianField(1, ())
    # coordinates dropped from the frame carry unit vectors in the lattice
    rows = [[row[i] for i in keep] for row in basis]
    return AbelianField(cond, lat.hnf_mod(rows, [n for _, n in new]))


def is_subfield(A: AbelianField, B: AbelianField) -> bool:
    """``A ⊆ B``, i.e. ``H_B <= H_A`` after lifting to a common modulus."""
    if B.conductor % A.conductor:
        return False
    m = B.conductor
    return lat.is_sublattice(_lift(B, m), _lift(A, m))


@lru_cache(maxsize=65536)
def join(A: AbelianField, B: AbelianField) -> AbelianField:
    """Compositum: intersection of the lifted fixing subgroups."""
    m = math.lcm(A.conductor, B.conductor)
    r = len(_frame(m))
    return _canonical(m, lat.lattice_intersection(_lift(A, m), _lift(B, m), r))


@lru_cache(maxsize=65536)
def meet(A: AbelianField, B: AbelianField) -> AbelianField:
    """Intersection: the subgroup generated by both lifted fixing subgroups."""
    m = math.lcm(A.conductor, B.conductor)
    r = len(_frame(m))
    return _canonical(m, lat.lattice_sum(_lift(A, m), _lift(B, m), r))


def cyclic_subfield(q: int, p: int) -> AbelianField:
    """The degree-``p`` subfield of ``Q(zeta_q)`` for primes ``q ≡ 1 (mod p)``."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if not is_prime(p) or (q - 1) % p:
        raise ValueError(f"need a prime p dividing q - 1, got q={q}, p={p}")
    return AbelianField(q, ((p,),))


def linearly_disjoint(A: AbelianField, B: AbelianField, over: AbelianField) -> bool:
    """``[AB : E] = [A : E][B : E]`` and ``A ∩ B = E`` for ``E = over``."""
    if not (is_subfield(over, A) and is_subfield(over, B)):
        raise NotSubfieldError("base field is not contained in both fields")
    e = over.degree
    return join(A, B).degree * e == A.degree * B.degree and meet(A, B) == over


# ---------------------------------------------------------------------------
# discriminants


def _kernel_gens(m: int, p: int, j: int) -> list[list[int]]:
    """Generators of ker((Z/m)^* -> (Z/(m / p^(e-j)))^*) in coordinates."""
    fr = _frame(m)
    out = []
    for i, (k, _) in enumerate(fr):
        if k[0] == p:
            v = [0] * len(fr)
            v[i] = _component_modulus(k, j)
            out.append(v)
    return out


@lru_cache(maxsize=65536)
def abelian_disc(A: AbelianField) -> FactoredReal:
    """``|Δ_A|`` by the conductor-discriminant formula.

    The exponent of ``p`` is the sum over characters ``χ`` of ``G/H`` of the
    ``p``-exponent of the conductor of ``χ``.  The characters whose
    ``p``-part has conductor exponent ``<= j`` are those trivial on the kernel
    ``K_j`` of reduction to ``p^j``; there are ``[G : H K_j]`` of them, so the
    exponent is ``sum_{j<e} (deg - [G : H K_j])``.
    """
    m = A.conductor
    if m == 1:
        return FactoredReal()
    r = len(A.frame)
    out = {}
    for p, e in factor_integer(m).items():
        total = 0
        for j in range(int(e)):
            sub = lat.hnf(list(A.basis) + _kernel_gens(m, p, j), r)
            total += A.degree - lat.det(sub)
        out[p] = total
    return FactoredReal(out, _trusted=True)


def character_conductors(A: AbelianField) -> list[int]:
    """Conductors of the characters of ``(Z/mZ)^*/H`` (each with multiplicity).

    Characters are enumerated explicitly as exponent vectors on the
    coordinate generators and their conductors found by testing trivial
    kernels of reduction to each divisor of ``m``.  Exponential in the rank;
    intended for small fields and for cross-checking :func:`abelian_disc`.
    """
    m = A.conductor
    if m == 1:
        return [1]
    fr = A.frame
    mods = [n for _, n in fr]
    # characters of Z^r/diag(n): chi_k(x) = exp(2 pi i sum k_c x_c / n_c)
    L = math.lcm(*mods)
    scale = [L // n for n in mods]
    chars = []
    for k in itertools.product(*(range(n) for n in mods)):
        if all(sum(kc * sc * xc for kc, sc, xc in zip(k, scale, row)) % L == 0 for row in A.basis):
            chars.append(k)
    divisors = sorted(d for d in range(1, m + 1) if m % d == 0)
    out = []
    for k in chars:
        for d in divisors:
            # kernel of reduction mod d, generated by units ≡ 1 (mod d)
            gens = [a for a in range(1, m, d) if math.gcd(a, m) == 1]
            if all(sum(kc * sc * xc for kc, sc, xc in zip(k, scale, residue_coords(a, m))) % L == 0 for a in gens):
                out.append(d)
                break
    return sorted(out)


# ---------------------------------------------------------------------------
# intermediate fields


def _pgroup_subgroups(orders: Sequence[int], cap: int) -> list[tuple[tuple[int, ...], ...]]:
    """All subgroups of ``⊕ Z/orders[i]`` (a p-group), each as a tuple of generators."""
    size = math.prod(orders)
    if size > cap:
        raise SubgroupCapError(f"primary component of order {size} exceeds cap {cap}")
    elements = list(itertools.product(*(range(n) for n in orders)))
    zero = tuple(0 for _ in orders)

    def add(x, y):
        return tuple((a + b) % n for a, b, n in zip(x, y, orders))

    def close(S: frozenset, x) -> frozenset:
        out = set(S)
        frontier = list(S)
        while frontier:
            nxt = []
            for s in frontier:
                y = add(s, x)
                if y not in out:
                    out.add(y)
                    nxt.append(y)
            frontier = nxt
        return frozenset(out)

    start = frozenset([zero])
    found = {start: ()}
    frontier = [start]
    while frontier:
        nxt = []
        for S in frontier:
            for x in elements:
                if x in S:
                    continue
                T = close(S, x)
                if T not in found:
                    found[T] = found[S] + (x,)
                    nxt.append(T)
                    if len(found) > cap:
                        raise SubgroupCapError(f"more than {cap} subgroups")
        frontier = nxt
    return list(found.values())


def intermediate_fields(K: AbelianField, M: AbelianField, cap: int = SUBGROUP_CAP) -> list[AbelianField]:
    """All fields ``F`` with ``K ⊆ F ⊆ M``, sorted by (degree, conductor, subgroup).

    Subgroups of the finite abelian group ``H_K / H_M`` are enumerated one
    primary component at a time; the cap bounds the order of each primary
    component and the total number of subgroups.
    """
    if not is_subfield(K, M):
        raise NotSubfieldError(f"{K} is not a subfield of {M}")
    m = M.conductor
    r = len(_frame(m))
    LM, LK = _lift(M, m), _lift(K, m)
    if r == 0:
        return [M]
    d, gens = lat.smith_quotient(LM, LK, r)
    primes = sorted({p for di in d for p in factor_integer(di).factors})
    per_prime = []
    for p in primes:
        comps = []
        for di, g in zip(d, gens):
            a = 0
            t = di
            while t % p == 0:
                t //= p
                a += 1
            if a:
                comps.append((p**a, [di // p**a * x for x in g]))
        orders = [o for o, _ in comps]
        subs = _pgroup_subgroups(orders, cap)
        vecs = []
        for sub in subs:
            vecs.append([[sum(c * v[i] for c, (_, v) in zip(x, comps)) for i in range(r)] for x in sub])
        per_prime.append(vecs)
    total = math.prod(len(v) for v in per_prime)
    if total > cap:
        raise SubgroupCapError(f"{total} intermediate fields exceed cap {cap}")
    mods = [n for _, n in _frame(m)]
    out = set()
    for combo in itertools.product(*per_prime):
        rows = list(LM) + [v for part in combo for v in part]
        out.add(_canonical(m, lat.hnf_mod(rows, mods)))
    return sorted(out, key=AbelianField.sort_key)


# ---------------------------------------------------------------------------
# generators via Gaussian periods


def _coset_reps(A: AbelianField) -> list[int]:
    m = A.conductor
    r = len(A.frame)
    identity = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    d, gens = lat.smith_quotient(A.basis, identity, r)
    reps = []
    for c in itertools.product(*(range(di) for di in d)):
        v = [sum(ci * g[i] for ci, g in zip(c, gens)) for i in range(r)]
        reps.append(coords_residue(v, m))
    return reps


def _cyclo_mul_sparse(dense: list[int], sparse: dict[int, int], m: int) -> list[int]:
    out = [0] * m
    for i, a in enumerate(dense):
        if a:
            for k, c in sparse.items():
                out[(i + k) % m] += a * c
    return out


def _reduce_to_integer(vec: list[int], m: int) -> int:
    """Rational integer represented by ``vec`` in ``Z[x]/(x^m - 1)`` modulo ``Phi_m``."""
    phi = cyclotomic_polynomial(m).coeffs
    r = list(vec)
    dp = len(phi) - 1
    for top in range(len(r) - 1, dp - 1, -1):
        c = r[top]
        if c:
            shift = top - dp
            for i, a in enumerate(phi):
                r[shift + i] -= c * a
    if any(r[1:dp]):
        raise ArithmeticError("period polynomial coefficient is not rational")
    return r[0]


def _period_polynomial(A: AbelianField, element: dict[int, int], H: list[int], reps: list[int]) -> IntPolynomial:
    """Characteristic polynomial of ``Tr_{Q(zeta_m)/A}(sum c_k zeta^k)``."""
    m = A.conductor
    conj = []
    for g in reps:
        sparse: dict[int, int] = {}
        for k, c in element.items():
            for h in H:
                e = g * k * h % m
                sparse[e] = sparse.get(e, 0) + c
        conj.append({k: c for k, c in sparse.items() if c})
    # coefficients (constant first) as dense vectors in Z[x]/(x^m - 1)
    one = [1] + [0] * (m - 1)
    poly = [one]
    for eta in conj:
        new = [[0] * m for _ in range(len(poly) + 1)]
        for i, c in enumerate(poly):
            shifted = new[i + 1]
            for t in range(m):
                shifted[t] += c[t]
            prod = _cyclo_mul_sparse(c, eta, m)
            tgt = new[i]
            for t in range(m):
                tgt[t] -= prod[t]
        poly = new
    return IntPolynomial([_reduce_to_integer(c, m) for c in poly])


def gaussian_period_polynomial(A: AbelianField, degree_cap: int = 24) -> tuple[IntPolynomial, str]:
    """Minimal polynomial of a generator of ``A`` and a label for the element used.

    The first choice is the Gaussian period ``sum_{h in H} zeta_m^h``.  When
    that period lies in a proper subfield (its characteristic polynomial is
    not squarefree) the elements ``sum_{j<=J} t^(j-1) Tr(zeta_m^j)`` are tried
    for growing ``J`` and ``t = 1, 2, 3``; since the traces of the powers of
    ``zeta_m`` span ``A`` some combination generates it.
    """
    if A.is_rational():
        return IntPolynomial([-1, 1]), "period"
    if A.degree > degree_cap:
        raise DegreeCapError(f"degree {A.degree} exceeds cap {degree_cap}")
    m = A.conductor
    if _phi(m) > PERIOD_MODULUS_CAP:
        raise CapError(f"conductor {m} too large for exact period arithmetic")
    H = A.elements(cap=PERIOD_MODULUS_CAP)
    reps = _coset_reps(A)
    candidates = [({1: 1}, "period")]
    for J in range(2, m + 1):
        for t in (1, 2, 3):
            candidates.append(({j: t ** (j - 1) for j in range(1, J + 1)}, f"fallback J={J} t={t}"))
    for element, label in candidates:
        f = _period_polynomial(A, element, H, reps)
        if poly_gcd(f, f.derivative()).degree == 0:
            return f, label
    raise ArithmeticError(f"no generator found for {A}")


def generator_polynomial(A: AbelianField, degree_cap: int = 24) -> IntPolynomial:
    """Monic integer minimal polynomial of a Gaussian-period generator of ``A``."""
    return gaussian_period_polynomial(A, degree_cap)[0]
