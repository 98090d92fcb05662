"""Full-rank integer lattices in ``Z^r``: Hermite and Smith normal forms.

Subgroups of a finite abelian group ``Z^r / diag(n)`` are handled as the
lattices between ``diag(n) Z^r`` and ``Z^r``; sum and intersection of
subgroups become sum and intersection of lattices.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence



def hnf(rows: Sequence[Sequence[int]], r: int) -> tuple[tuple[int, ...], ...]:
    """Upper-triangular Hermite basis of the lattice spanned by ``rows``.

    The diagonal is positive and entries above a pivot are reduced into
    ``[0, pivot)``.  Raises ``ValueError`` if the span is not of full rank.
    """
    work = [list(map(int, row)) for row in rows if any(row)]
    basis: list[list[int]] = []
    for col in range(r):
        live = [row for row in work if row[col] != 0]
        rest = [row for row in work if row[col] == 0]
        while len(live) > 1:
            live.sort(key=lambda row: abs(row[col]))
            piv = live[0]
            nxt = [piv]
            for row in live[1:]:
                q = row[col] // piv[col]
                red = [a - q * b for a, b in zip(row, piv)]
                if red[col] != 0:
                    nxt.append(red)
                elif any(red):
                    rest.append(red)
            live = nxt
        if not live:
            raise ValueError("lattice is not of full rank")
        piv = live[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        basis.append(piv)
        work = rest
    for i in range(r):
        for k in range(i):
            q = basis[k][i] // basis[i][i]
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return tuple(tuple(row) for row in basis)


def hnf_mod(rows: Sequence[Sequence[int]], moduli: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """HNF of ``rows`` together with ``diag(moduli)``, entries kept small by reduction."""
    r = len(moduli)
    if r == 0:
        return ()
    gens = [[a % n if n else a for a, n in zip(row, moduli)] for row in rows]
    gens += [[n if i == j else 0 for j in range(r)] for i, n in enumerate(moduli)]
    return hnf(gens, r)


def det(basis: Sequence[Sequence[int]]) -> int:
    return math.prod(basis[i][i] for i in range(len(basis)))


def solve_upper(basis: Sequence[Sequence[int]], v: Sequence[int]) -> list[Fraction] | None:
    """Coordinates of ``v`` in the row basis ``basis`` (upper triangular)."""
    v = [Fraction(a) for a in v]
    out = []
    for i, row in enumerate(basis):
        c = v[i] / row[i]
        out.append(c)
        if c:
            for j in range(i, len(v)):
                v[j] -= c * row[j]
    return out


def solve_upper_int(basis: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    """Integer coordinates of a vector known to lie in the lattice."""
    v = list(v)
    out = []
    for i, row in enumerate(basis):
        c, rem = divmod(v[i], row[i])
        if rem:
            raise ValueError("vector not in lattice")
        out.append(c)
        if c:
            for j in range(i, len(v)):
                v[j] -= c * row[j]
    return out


def contains(basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    v = list(v)
    for i, row in enumerate(basis):
        if v[i] % row[i]:
            return False
        c = v[i] // row[i]
        if c:
            v = [a - c * b for a, b in zip(v, row)]
    return True


def is_sublattice(small: Sequence[Sequence[int]], big: Sequence[Sequence[int]]) -> bool:
    return all(contains(big, row) for row in small)


def lattice_sum(a, b, r: int):
    return hnf(list(a) + list(b), r)


def _dual(basis: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Rows ``c_j`` of the dual lattice with ``b_i . c_j == [i == j]`` (columns of ``basis**-1``)."""
    r = len(basis)
    out = []
    for j in range(r):
        c = [Fraction(0)] * r
        for i in range(r - 1, -1, -1):
            s = Fraction(int(i == j)) - sum(basis[i][k] * c[k] for k in range(i + 1, r))
            c[i] = s / basis[i][i]
        out.append(c)
    return out


def lattice_intersection(a, b, r: int):
    """``a ∩ b`` for full-rank lattices, via ``(a* + b*)*``."""
    if r == 0:
        return ()
    da, db = _dual(a), _dual(b)
    rows = da + db
    D = math.lcm(*(x.denominator for row in rows for x in row))
    scaled = hnf([[int(x * D) for x in row] for row in rows], r)
    dual_scaled = _dual(scaled)
    return hnf([[int(x * D) for x in row] for row in dual_scaled], r)


def smith_quotient(small, big, r: int) -> tuple[list[int], list[list[int]]]:
    """Invariant factors of ``big / small`` and lattice vectors generating each factor.

    Returns ``(d, gens)`` with ``big/small ≅ ⊕ Z/d_i`` and ``gens[i]`` a
    vector of ``big`` whose class generates the ``i``-th summand.  Summands
    with ``d_i == 1`` are dropped.
    """
    # T with small = T * big
    T = []
    for row in small:
        coords = solve_upper(big, row)
        assert all(c.denominator == 1 for c in coords), "not a sublattice"
        T.append([int(c) for c in coords])
    n = len(T)
    A = [list(row) for row in T]
    Vinv = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_add(i, j, c):  # col_i += c * col_j
        for row in A:
            row[i] += c * row[j]
        Vinv[j] = [a - c * b for a, b in zip(Vinv[j], Vinv[i])]

    def col_swap(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    for t in range(n):
        while True:
            entries = [(abs(A[i][j]), i, j) for i in range(t, n) for j in range(t, n) if A[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            A[t], A[pi] = A[pi], A[t]
            if pj != t:
                col_swap(t, pj)
            piv = A[t][t]
            done = True
            for i in range(t + 1, n):
                q = A[i][t] // piv
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // piv
                if q:
                    col_add(j, t, -q)
                if A[t][j]:
                    done = False
            if not done:
                continue
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, n) if A[i][j] % piv), None)
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
    new_basis = [[sum(Vinv[i][k] * big[k][c] for k in range(n)) for c in range(r)] for i in range(n)]
    d, gens = [], []
    for i in range(n):
        if abs(A[i][i]) != 1:
            d.append(abs(A[i][i]))
            gens.append(new_basis[i])
    return d, gens
