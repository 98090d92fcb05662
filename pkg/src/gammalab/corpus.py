"""Seeded random fields and the property checks run by ``gammalab verify``."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import abelian as ab
from .abelian import AbelianField, abelian_disc, join, meet
from .arith import fr_compare
from .gamma import build_cf_tower, coprime_compositum_bound, gamma_of, gamma_prime
from .numfield import RATIONALS, NumberField, build_field, check_disc_divisibility
from .polyz import IntPolynomial, is_irreducible


def random_number_field(rng: random.Random, max_degree: int = 4, coeff: int = 5) -> NumberField:
    """A field ``Q[x]/(f)`` for a random monic irreducible ``f`` of degree 2..``max_degree``."""
    while True:
        d = rng.randint(2, max_degree)
        f = IntPolynomial([rng.randint(-coeff, coeff) for _ in range(d)] + [1])
        if f.coeffs[0] != 0 and is_irreducible(f):
            return build_field(f, check_irreducible=False)


def coprime_pair(rng: random.Random, max_degree: int = 4) -> tuple[NumberField, NumberField]:
    """Two random fields whose polynomial discriminants are coprime."""
    while True:
        L, Lp = random_number_field(rng, max_degree), random_number_field(rng, max_degree)
        if math.gcd(L.poly_disc, Lp.poly_disc) == 1:
            return L, Lp


def random_abelian(rng: random.Random, max_conductor: int = 60, max_degree: int = 12) -> AbelianField:
    """Fixed field of a random subgroup of ``(Z/mZ)^*``, degree at most ``max_degree``."""
    while True:
        m = rng.randint(3, max_conductor)
        if m % 4 == 2:
            continue
        units = [a for a in range(1, m) if math.gcd(a, m) == 1]
        gens = rng.sample(units, rng.randint(0, 2))
        A = AbelianField.from_subgroup(m, gens)
        if 1 < A.degree <= max_degree:
            return A


def cross_engine_corpus(n: int = 30, seed: int = 0, max_degree: int = 12) -> list[AbelianField]:
    """``n`` distinct abelian fields, the quintic of conductor 11 first."""
    rng = random.Random(seed)
    out = [ab.cyclic_subfield(11, 5)]
    while len(out) < n:
        A = random_abelian(rng, max_degree=max_degree)
        if A not in out:
            out.append(A)
    return out


@dataclass
class CheckResult:
    name: str
    trials: int
    passed: int = 0
    counterexample: dict | None = None
    rows: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.trials

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "trials": self.trials,
            "passed": self.passed,
            "failed": self.trials - self.passed,
            "first_counterexample": self.counterexample,
        }


def _record(res: CheckResult, ok: bool, detail: dict) -> None:
    if ok:
        res.passed += 1
    elif res.counterexample is None:
        res.counterexample = detail


def check_disc_divisibility_suite(trials: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("disc-divisibility", trials)
    for _ in range(trials):
        L, Lp = coprime_pair(rng)
        rep = check_disc_divisibility(RATIONALS, L, Lp)
        _record(res, rep.divides, {"L": L.descriptor(), "Lp": Lp.descriptor(), "lhs": rep.lhs, "rhs": rep.rhs})
    return res


def check_disjoint_meet_suite(trials: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("disjoint-meet", trials)
    for _ in range(trials):
        M = random_abelian(rng, max_conductor=40, max_degree=8)
        F = random_abelian(rng, max_conductor=40, max_degree=8)
        E = meet(M, F)
        g, gE = gamma_of(M, F), gamma_of(M, E)
        sup = gamma_prime(M, ab.QQ).sup_value
        ok = fr_compare(g, gE) <= 0 and fr_compare(gE, sup) <= 0
        _record(res, ok, {"M": M.descriptor(), "F": F.descriptor(), "gamma_F": str(g), "gamma_meet": str(gE), "sup": str(sup)})
    return res


def check_tower_closed_form_suite(trials: int, seed: int, stages: int = 8) -> CheckResult:
    rng = random.Random(seed)
    tower = build_cf_tower(stages)
    Ls = tower.fields()
    res = CheckResult("tower-closed-form", trials)
    for _ in range(trials):
        J = [i for i in range(stages) if rng.random() < 0.5] or [rng.randrange(stages)]
        I = [i for i in J if rng.random() < 0.5]
        M = _join(Ls[i] for i in J)
        F = _join(Ls[i] for i in I)
        Mp = _join(Ls[i] for i in J if i not in I)
        direct = gamma_of(M, F)
        closed = abelian_disc(Mp) ** Fraction(1, Mp.degree**2)
        bound = coprime_compositum_bound([Ls[i] for i in J])
        ok = direct == closed and fr_compare(direct, bound) <= 0
        _record(res, ok, {"J": J, "I": I, "direct": str(direct), "closed_form": str(closed), "bound": str(bound)})
    return res


def check_external_sample_suite(trials: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("external-sample", trials)
    for _ in range(trials):
        M = random_abelian(rng, max_conductor=40, max_degree=8)
        F = random_abelian(rng, max_conductor=60, max_degree=12)
        sup = gamma_prime(M, ab.QQ).sup_value
        g = gamma_of(M, F)
        _record(res, fr_compare(g, sup) <= 0, {"M": M.descriptor(), "F": F.descriptor(), "gamma_F": str(g), "sup": str(sup)})
    return res


def check_cross_engine_suite(trials: int, seed: int) -> CheckResult:
    res = CheckResult("cross-engine", trials)
    for A in cross_engine_corpus(trials, seed):
        K = build_field(ab.generator_polynomial(A))
        a, b = abelian_disc(A).to_int(), abs(K.abs_disc)
        _record(res, a == b, {"field": A.descriptor(), "conductor_discriminant": a, "round2": b})
    return res


def _join(fields) -> AbelianField:
    acc = ab.QQ
    for F in fields:
        acc = join(acc, F)
    return acc


SUITES = {
    "disc-divisibility": check_disc_divisibility_suite,
    "disjoint-meet": check_disjoint_meet_suite,
    "tower-closed-form": check_tower_closed_form_suite,
    "external-sample": check_external_sample_suite,
    "cross-engine": check_cross_engine_suite,
}
CHECKS = tuple(SUITES)


def run_check(name: str, trials: int, seed: int) -> CheckResult:
    return SUITES[name](trials, seed)
