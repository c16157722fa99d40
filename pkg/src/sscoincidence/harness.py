"""Per-prime evaluation of the four characterizations, their agreement,
and the Kodaira-dimension status of the moduli space A_p."""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping

from . import SUPERSINGULAR_PRIMES
from .arith import DecimalConstant, ValidatedPrime, decimal_mod, multiply_digits, primes_up_to
from .jacobi import JacobiDimension, jacobi_cusp_dim
from .modcurve import GenusProfile, genus_profile
from .supersingular import SupersingularReport, supersingular_report

MONSTER_ORDER = DecimalConstant.parse("808017424794512875886459904961710757005754368000000000")
MONSTER_FACTORIZATION: Mapping[int, int] = {
    2: 46, 3: 20, 5: 9, 7: 6, 11: 2, 13: 3, 17: 1, 19: 1, 23: 1,
    29: 1, 31: 1, 41: 1, 47: 1, 59: 1, 71: 1,
}

# Composite-index facts, reported for context only.
COMPOSITE_INDEX_NOTES = (
    "d >= 13: non-negative Kodaira dimension, except possibly d in {14, 15, 16, 18, 20, 24, 30, 36}",
    "d in {14, 16, 18, 20}: since shown unirational",
    "d in {15, 24, 30, 36}: Kodaira dimension unknown",
)


class KodairaStatus(enum.Enum):
    Unirational = "Unirational"
    GeneralType = "GeneralType"
    NonNegativeOpen = "NonNegativeOpen"


def kodaira_status(p: int) -> KodairaStatus:
    if p <= 11:
        return KodairaStatus.Unirational
    if p in SUPERSINGULAR_PRIMES:
        return KodairaStatus.NonNegativeOpen
    return KodairaStatus.GeneralType


@dataclass(frozen=True)
class ConditionReport:
    p: int
    c1_monster: bool
    c2_genus_plus_zero: bool
    c3_ss_rational: bool
    c4_jacobi_zero: bool
    consistent: bool
    in_S: bool
    kodaira: KodairaStatus
    genus: GenusProfile
    jacobi: JacobiDimension
    supersingular: SupersingularReport


def condition_report(p: int | ValidatedPrime) -> ConditionReport:
    q = ValidatedPrime.of(p).value
    genus = genus_profile(q)
    jac = jacobi_cusp_dim(q)
    ss = supersingular_report(q)
    c = (
        decimal_mod(MONSTER_ORDER, q) == 0,
        genus.genus_plus == 0,
        ss.all_rational,
        jac.dim == 0,
    )
    return ConditionReport(
        p=q,
        c1_monster=c[0],
        c2_genus_plus_zero=c[1],
        c3_ss_rational=c[2],
        c4_jacobi_zero=c[3],
        consistent=len(set(c)) == 1,
        in_S=q in SUPERSINGULAR_PRIMES,
        kodaira=kodaira_status(q),
        genus=genus,
        jacobi=jac,
        supersingular=ss,
    )


@dataclass
class VerifyConfig:
    bound: int = 1000
    workers: int = 1


@dataclass
class CoincidenceSummary:
    bound: int
    checked: int
    inconsistencies: list[int] = field(default_factory=list)
    zero_set: list[int] = field(default_factory=list)
    records: list[ConditionReport] = field(default_factory=list)

    @property
    def expected_zero_set(self) -> list[int]:
        return [p for p in SUPERSINGULAR_PRIMES if p <= self.bound]

    @property
    def ok(self) -> bool:
        return not self.inconsistencies and self.zero_set == self.expected_zero_set


def verify_coincidence(bound: int | VerifyConfig) -> CoincidenceSummary:
    cfg = bound if isinstance(bound, VerifyConfig) else VerifyConfig(bound=bound)
    if cfg.bound < 2:
        raise ValueError("bound must be >= 2")
    primes = primes_up_to(cfg.bound)
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            # map preserves input order, so the summary stays ascending
            records = list(pool.map(condition_report, primes, chunksize=16))
    else:
        records = [condition_report(p) for p in primes]
    summary = CoincidenceSummary(bound=cfg.bound, checked=len(records), records=records)
    for rec in records:
        if not rec.consistent or (rec.c1_monster != rec.in_S):
            summary.inconsistencies.append(rec.p)
        if rec.c1_monster and rec.c2_genus_plus_zero and rec.c3_ss_rational and rec.c4_jacobi_zero:
            summary.zero_set.append(rec.p)
    return summary


def validate_monster_constant(
    digits: DecimalConstant = MONSTER_ORDER,
    factorization: Mapping[int, int] = MONSTER_FACTORIZATION,
) -> bool:
    """Cross-check the stored Monster order against its stored factorization."""
    product = DecimalConstant((1,))
    for q, e in sorted(factorization.items()):
        base = DecimalConstant.parse(str(q))
        for _ in range(e):
            product = multiply_digits(product, base)
    if product != digits:
        return False
    if sorted(factorization) != list(SUPERSINGULAR_PRIMES):
        return False
    divisors = [q for q in primes_up_to(1000) if decimal_mod(digits, q) == 0]
    return divisors == list(SUPERSINGULAR_PRIMES)
