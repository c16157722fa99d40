"""Genus of X_0(p), fixed points of the Fricke involution, and the genus
of the quotient X_0(p)^+."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import ValidatedPrime, legendre
from .quadforms import class_number


class GenusInconsistencyError(ArithmeticError):
    """Genus or Riemann-Hurwitz data failed an integrality check."""


@dataclass(frozen=True)
class GenusProfile:
    p: int
    index_mu: int
    nu2: int
    nu3: int
    nu_inf: int
    genus: int
    fricke_fixed_points: int | None = None
    genus_plus: int | None = None
    dim_weight2_plus: int | None = None


def elliptic_points(p: int) -> tuple[int, int]:
    """(nu2, nu3) for Gamma_0(p)."""
    if p == 2:
        return 1, 0
    nu2 = 1 + legendre(-1, p)
    nu3 = 1 if p == 3 else 1 + legendre(-3, p)
    return nu2, nu3


def genus_x0(p: int | ValidatedPrime) -> GenusProfile:
    q = ValidatedPrime.of(p).value
    mu, nu_inf = q + 1, 2
    nu2, nu3 = elliptic_points(q)
    g = 1 + Fraction(mu, 12) - Fraction(nu2, 4) - Fraction(nu3, 3) - Fraction(nu_inf, 2)
    if g.denominator != 1 or g < 0:
        raise GenusInconsistencyError(f"genus formula gave {g} at p={q}")
    return GenusProfile(q, mu, nu2, nu3, nu_inf, int(g))


def fricke_fixed_points(p: int | ValidatedPrime) -> int:
    vp = ValidatedPrime.of(p)
    q = vp.value
    if q == 2:
        return 2  # h(-4) + h(-8)
    if vp.residue_mod_4 == 1:
        return class_number(-4 * q)
    return class_number(-q) + class_number(-4 * q)


@lru_cache(maxsize=None)
def genus_plus(p: int | ValidatedPrime) -> int:
    q = int(p)
    g = genus_x0(q).genus
    f = fricke_fixed_points(q)
    # Riemann-Hurwitz for the double cover X_0(p) -> X_0(p)^+
    num = 2 * g + 2 - f
    if num % 4 or num < 0:
        raise GenusInconsistencyError(f"2g + 2 - f = {num} at p={q} (g={g}, f={f})")
    return num // 4


def dim_weight2_plus(p: int | ValidatedPrime) -> int:
    # g + m - 1 with a single cusp on the quotient: both cusps of X_0(p) are swapped
    cusps_on_quotient = 1
    return genus_plus(p) + cusps_on_quotient - 1


def genus_profile(p: int | ValidatedPrime) -> GenusProfile:
    """Full profile including the Fricke quotient data."""
    base = genus_x0(p)
    return GenusProfile(
        base.p,
        base.index_mu,
        base.nu2,
        base.nu3,
        base.nu_inf,
        base.genus,
        fricke_fixed_points(base.p),
        genus_plus(base.p),
        dim_weight2_plus(base.p),
    )
