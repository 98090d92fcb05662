"""Discriminant-growth invariants of field extensions and the cyclic tower.

For number fields ``F`` and ``M`` with compositum ``MF``::

    gamma_M(F) = |Δ_MF|^(1/([MF:Q][MF:F])) / |Δ_F|^(1/[MF:Q])

``gamma_prime(M, K)`` is the supremum over the fields ``K ⊆ F ⊆ M``.  All
values are :class:`~gammalab.arith.FactoredReal` and every comparison is
exact.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import abelian as ab
from .abelian import AbelianField, NotSubfieldError, abelian_disc, intermediate_fields, is_subfield, join, meet
from .arith import FactoredReal, fr_compare, is_prime, next_prime
from .errors import CapError

__all__ = [
    "GammaReport",
    "ExternalReport",
    "CFTower",
    "TowerStage",
    "ScanReport",
    "SearchBoundError",
    "gamma_M_F",
    "gamma_of",
    "gamma_prime",
    "gamma_external_sample",
    "default_external_sample",
    "coprime_compositum_bound",
    "build_cf_tower",
    "liminf_scan",
    "THREE",
]

THREE = FactoredReal({3: 1})
SUBSET_CAP = 12
Q_SEARCH_LIMIT = 10**7


class SearchBoundError(CapError):
    """No admissible prime below the search limit."""


def gamma_M_F(M_abs_disc: FactoredReal, F_abs_disc: FactoredReal, MF_abs_disc: FactoredReal, deg_MF: int, deg_F: int) -> FactoredReal:
    """``gamma_M(F)`` from the three absolute discriminants and two degrees.

    ``M_abs_disc`` does not enter the formula; it is accepted so that callers
    pass a complete triple.

    >>> gamma_M_F(FactoredReal({2: 3}), FactoredReal({2: 2, 3: 1}), FactoredReal({2: 8, 3: 2}), 4, 2)
    FactoredReal({2: 1/2})
    """
    if deg_F < 1 or deg_MF < 1 or deg_MF % deg_F:
        raise ValueError(f"[F:Q] = {deg_F} does not divide [MF:Q] = {deg_MF}")
    rel = deg_MF // deg_F
    return MF_abs_disc ** Fraction(1, deg_MF * rel) / F_abs_disc ** Fraction(1, deg_MF)


def gamma_of(M: AbelianField, F: AbelianField) -> FactoredReal:
    """``gamma_M(F)`` for abelian fields, with ``MF`` their join."""
    MF = join(M, F)
    return gamma_M_F(abelian_disc(M), abelian_disc(F), abelian_disc(MF), MF.degree, F.degree)


def _first_max(values: Sequence[FactoredReal]) -> int:
    best = 0
    for i in range(1, len(values)):
        if fr_compare(values[i], values[best]) > 0:
            best = i
    return best


@dataclass
class GammaReport:
    base: AbelianField
    field: AbelianField
    entries: list[tuple[AbelianField, FactoredReal]]
    sup_value: FactoredReal
    sup_witness: AbelianField
    compositum_bound: FactoredReal | None = None

    def to_json(self) -> dict:
        out = {
            "base": self.base.descriptor(),
            "field": self.field.descriptor(),
            "degree": self.field.degree,
            "entries": [
                {"F": F.descriptor(), "degree": F.degree, "gamma": str(g), "exponents": g.to_json(), "decimal": g.decimal()}
                for F, g in self.entries
            ],
            "sup": str(self.sup_value),
            "sup_decimal": self.sup_value.decimal(),
            "sup_witness": self.sup_witness.descriptor(),
        }
        if self.compositum_bound is not None:
            out["compositum_bound"] = str(self.compositum_bound)
        return out


def gamma_prime(M: AbelianField, K: AbelianField, cap: int = ab.SUBGROUP_CAP) -> GammaReport:
    """Supremum of ``gamma_M(F)`` over the intermediate fields ``K ⊆ F ⊆ M``.

    Since ``F ⊆ M`` the compositum ``MF`` is ``M`` itself.  Ties go to the
    first field in (degree, conductor, subgroup) order.
    """
    fields = intermediate_fields(K, M, cap=cap)
    dM = abelian_disc(M)
    entries = [(F, gamma_M_F(dM, abelian_disc(F), dM, M.degree, F.degree)) for F in fields]
    i = _first_max([g for _, g in entries])
    return GammaReport(K, M, entries, entries[i][1], entries[i][0])


# ---------------------------------------------------------------------------
# external sampling


@dataclass
class ExternalReport:
    M: AbelianField
    K: AbelianField
    internal_sup: FactoredReal
    rows: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "M": self.M.descriptor(),
            "K": self.K.descriptor(),
            "internal_sup": str(self.internal_sup),
            "rows": self.rows,
            "failures": self.failures,
        }


def default_external_sample(M: AbelianField, K: AbelianField = ab.QQ) -> list[AbelianField]:
    """Quadratic fields with squarefree ``|d| <= 30`` and a few small cyclic fields.

    Fields inside ``M`` and fields not containing ``K`` are left out.
    """
    cands = []
    for d in range(-30, 31):
        if d in (0, 1) or any(e > 1 for e in FactoredReal.from_int(abs(d)).factors.values()):
            continue
        cands.append(AbelianField.quadratic(d))
    for q, p in ((7, 3), (13, 3), (19, 3), (11, 5), (31, 5), (29, 7), (43, 7)):
        cands.append(ab.cyclic_subfield(q, p))
    if not K.is_rational():
        cands = [join(F, K) for F in cands]
    out = []
    seen = set()
    for F in cands:
        if F in seen or is_subfield(F, M) or not is_subfield(K, F):
            continue
        seen.add(F)
        out.append(F)
    return out


def gamma_external_sample(M: AbelianField, K: AbelianField, sample: Iterable[AbelianField] | None = None) -> ExternalReport:
    """Check ``gamma_M(F) <= gamma_M(M ∩ F) <= gamma'(M/K)`` for each sampled ``F``.

    Abelian fields are linearly disjoint from ``M`` over ``M ∩ F``, so both
    inequalities must hold; any violation is recorded in ``failures``.
    """
    if not is_subfield(K, M):
        raise NotSubfieldError(f"{K} is not a subfield of {M}")
    sup = gamma_prime(M, K).sup_value
    rep = ExternalReport(M, K, sup)
    for F in default_external_sample(M, K) if sample is None else sample:
        if not is_subfield(K, F):
            raise NotSubfieldError(f"sampled field {F} does not contain {K}")
        E = meet(M, F)
        g = gamma_of(M, F)
        gE = gamma_of(M, E)
        row = {
            "F": F.descriptor(),
            "meet": E.descriptor(),
            "gamma_F": str(g),
            "gamma_meet": str(gE),
            "le_meet": fr_compare(g, gE) <= 0,
            "le_sup": fr_compare(gE, sup) <= 0,
        }
        rep.rows.append(row)
        if not (row["le_meet"] and row["le_sup"]):
            rep.failures.append(row)
    return rep


def coprime_compositum_bound(fields: Sequence[AbelianField]) -> FactoredReal:
    """``max |Δ_i|^(1/p_i^2)`` over fields of distinct prime degrees ``p_i``.

    The discriminants must be pairwise coprime.
    """
    if not fields:
        raise ValueError("empty field list")
    degs = [L.degree for L in fields]
    if any(not is_prime(p) for p in degs) or len(set(degs)) != len(degs):
        raise ValueError(f"degrees {degs} are not distinct primes")
    discs = [abelian_disc(L) for L in fields]
    for a, b in itertools.combinations(discs, 2):
        if set(a.factors) & set(b.factors):
            raise ValueError("discriminants are not pairwise coprime")
    vals = [d ** Fraction(1, p * p) for d, p in zip(discs, degs)]
    return vals[_first_max(vals)]


# ---------------------------------------------------------------------------
# the cyclic tower


@dataclass(frozen=True)
class TowerStage:
    p: int
    q: int
    field: AbelianField

    @property
    def abs_disc(self) -> FactoredReal:
        return abelian_disc(self.field)

    @property
    def value(self) -> FactoredReal:
        return self.abs_disc ** Fraction(1, self.p * self.p)

    def to_json(self) -> dict:
        v = self.value
        return {
            "p": self.p,
            "q": self.q,
            "field": self.field.descriptor(),
            "abs_disc": str(self.abs_disc),
            "value": str(v),
            "decimal": v.decimal(),
            "le_3": fr_compare(v, THREE) <= 0,
        }


@dataclass(frozen=True)
class CFTower:
    stages: tuple[TowerStage, ...]

    def fields(self) -> list[AbelianField]:
        return [s.field for s in self.stages]

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.stages]


def build_cf_tower(n: int, search_limit: int = Q_SEARCH_LIMIT) -> CFTower:
    """First ``n`` stages: for the ``i``-th prime ``p`` the least unused prime
    ``q ≡ 1 (mod p)`` with ``q^(p-1) <= 3^(p^2)``, and the degree-``p``
    subfield of ``Q(zeta_q)``.
    """
    if n < 1:
        raise ValueError("need at least one stage")
    stages = []
    used = set()
    p = 2
    for _ in range(n):
        bound = 3 ** (p * p)
        q = p + 1
        while True:
            if q > search_limit or q ** (p - 1) > bound:
                raise SearchBoundError(f"no prime q ≡ 1 mod {p} with q^({p}-1) <= 3^({p}^2) below {min(search_limit, q)}")
            if q not in used and is_prime(q):
                break
            q += p
        used.add(q)
        stages.append(TowerStage(p, q, ab.cyclic_subfield(q, p)))
        p = next_prime(p)
    return CFTower(tuple(stages))


@dataclass
class ScanReport:
    base: AbelianField
    n_stages: int
    rows: list[dict]
    max_value: FactoredReal
    max_field: AbelianField
    bound: FactoredReal
    pairs_checked: int
    failures: list[dict]

    @property
    def verdict(self) -> bool:
        return fr_compare(self.max_value, THREE) <= 0

    def to_json(self) -> dict:
        return {
            "base": self.base.descriptor(),
            "stages": self.n_stages,
            "subcomposita": len(self.rows),
            "rows": self.rows,
            "max": str(self.max_value),
            "max_decimal": self.max_value.decimal(),
            "max_field": self.max_field.descriptor(),
            "compositum_bound": str(self.bound),
            "compositum_bound_decimal": self.bound.decimal(),
            "max_le_3": self.verdict,
            "bound_le_3": fr_compare(self.bound, THREE) <= 0,
            "closed_form_pairs": self.pairs_checked,
            "failures": self.failures,
        }


def _join_all(fields: Iterable[AbelianField]) -> AbelianField:
    acc = ab.QQ
    for F in fields:
        acc = join(acc, F)
    return acc


def _scan_one(tower: CFTower, J: tuple[int, ...], K: AbelianField, cap: int):
    stage_fields = tower.fields()
    M = _join_all(stage_fields[i] for i in J)
    rep = gamma_prime(M, K, cap=cap)
    checked = 0
    failures = []
    for F, g in rep.entries:
        inside = [i for i in J if is_subfield(stage_fields[i], F)]
        Mp = _join_all(stage_fields[i] for i in J if i not in inside)
        closed = abelian_disc(Mp) ** Fraction(1, Mp.degree * Mp.degree)
        checked += 1
        if closed != g:
            failures.append({"M": M.descriptor(), "F": F.descriptor(), "direct": str(g), "closed_form": str(closed)})
    row = {
        "stages": [tower.stages[i].p for i in J],
        "degree": M.degree,
        "subfields": len(rep.entries),
        "gamma_prime": str(rep.sup_value),
        "decimal": rep.sup_value.decimal(),
        "witness": rep.sup_witness.descriptor(),
    }
    return M, rep.sup_value, row, checked, failures


def liminf_scan(tower: CFTower, K: AbelianField = ab.QQ, subset_cap: int = SUBSET_CAP, cap: int = ab.SUBGROUP_CAP, workers: int = 1) -> ScanReport:
    """``gamma'(M/K)`` for every join ``M`` of stage fields containing ``K``.

    Each ``(M, F)`` value is also recomputed from the closed form
    ``|Δ_M'|^(1/[M':Q]^2)``, ``M'`` the join of the stages of ``M`` not
    inside ``F``; disagreements are reported as failures.
    """
    n = len(tower.stages)
    if n > subset_cap:
        raise CapError(f"{n} stages exceed the subset cap {subset_cap}")
    stage_fields = tower.fields()
    support = [i for i, L in enumerate(stage_fields) if K.conductor % tower.stages[i].q == 0]
    top = _join_all(stage_fields)
    if not is_subfield(K, top):
        raise NotSubfieldError(f"{K} is not inside the tower compositum")
    subsets = []
    for r in range(1, n + 1):
        for J in itertools.combinations(range(n), r):
            if set(support) <= set(J):
                subsets.append(J)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda J: _scan_one(tower, J, K, cap), subsets))
    else:
        results = [_scan_one(tower, J, K, cap) for J in subsets]
    rows, failures = [], []
    checked = 0
    values = []
    for M, v, row, c, fails in results:
        rows.append(row)
        values.append((v, M))
        checked += c
        failures.extend(fails)
    i = _first_max([v for v, _ in values])
    bound = coprime_compositum_bound(stage_fields)
    return ScanReport(K, n, rows, values[i][0], values[i][1], bound, checked, failures)
