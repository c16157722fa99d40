"""Supersingular j-invariants in characteristic p.

`supersingular_report` scans every j in F_p. A vectorized x-only Montgomery
ladder rejects ordinary j quickly: a supersingular curve and its quadratic
twist both have p + 1 points, so [p+1]P = O for every x-coordinate. The
rejection is only ever a necessary-condition test; every surviving j is
confirmed by an exact point count before it is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import ValidatedPrime, legendre
from .fields import Fp2Element, FpElement, least_nonresidue

# int64 products of two residues stay exact below this bound.
SCAN_LIMIT = 2**31
ORACLE_RANGE = (5, 50)


@dataclass(frozen=True)
class SupersingularReport:
    p: int
    expected_count: int
    found_in_fp: tuple[FpElement, ...]
    all_rational: bool

    @property
    def j_values(self) -> list[int]:
        return [j.value for j in self.found_in_fp]


def expected_ss_count(p: int | ValidatedPrime) -> int:
    vp = ValidatedPrime.of(p)
    if vp.value in (2, 3):
        return 1
    return vp.value // 12 + {1: 0, 5: 1, 7: 1, 11: 2}[vp.residue_mod_12]


def curve_from_j(j: int, p: int) -> tuple[int, int]:
    """Coefficients (A, B) of y^2 = x^3 + A x + B with j-invariant j over F_p, p >= 5."""
    j %= p
    if j == 0:
        return 0, 1
    if j == 1728 % p:
        return 1, 0
    k = (1728 - j) % p
    return 3 * j * k % p, 2 * j * k * k % p


def _check_nonsingular(A, B, p: int) -> None:
    if (4 * A**3 + 27 * B**2) % p == 0:
        raise RuntimeError(f"singular curve A={A} B={B} over F_{p}")


def _require_large_char(p: int | ValidatedPrime) -> int:
    q = ValidatedPrime.of(p).value
    if q < 5:
        raise ValueError(f"need p >= 5, got {q}")
    return q


def point_count(A: int, B: int, p: int) -> int:
    """#E(F_p) for y^2 = x^3 + A x + B, summing Legendre symbols one x at a time."""
    s = 0
    for x in range(p):
        s += legendre(x * x * x + A * x + B, p)
    return p + 1 + s


def is_supersingular_j_over_fp(j: FpElement | int, p: int | ValidatedPrime) -> bool:
    q = _require_large_char(p)
    A, B = curve_from_j(int(j), q)
    _check_nonsingular(A, B, q)
    trace = q + 1 - point_count(A, B, q)
    return trace % q == 0


@lru_cache(maxsize=8)
def _chi_table(p: int) -> np.ndarray:
    chi = np.full(p, -1, dtype=np.int64)
    chi[0] = 0
    x = np.arange(1, p, dtype=np.int64)
    chi[x * x % p] = 1
    return chi


def _fast_point_count(A: int, B: int, p: int) -> int:
    x = np.arange(p, dtype=np.int64)
    f = (x * x % p * x + A * x % p + B) % p
    return p + 1 + int(_chi_table(p)[f].sum())


def _ladder_candidates(A: np.ndarray, B: np.ndarray, p: int, x0: int = 1) -> np.ndarray:
    """Mask of curves that might satisfy [p+1]P = O for x(P) = x0.

    False entries are certainly ordinary. Any intermediate hit of the point
    at infinity flags the curve as a candidate, since the ladder formulas
    are invalid there.
    """
    n = p + 1

    def dbl(X, Z):
        XX, ZZ = X * X % p, Z * Z % p
        t = (XX - A * ZZ) % p
        X2 = (t * t - 8 * B % p * X % p * (ZZ * Z % p)) % p
        Z2 = 4 * Z % p * ((XX * X + A * X % p * ZZ + B * ZZ % p * Z) % p) % p
        return X2, Z2

    def add(X1, Z1, X2, Z2):
        ZZ = Z1 * Z2 % p
        t = (X1 * X2 - A * ZZ) % p
        X3 = (t * t - 4 * B % p * ZZ % p * ((X1 * Z2 + X2 * Z1) % p)) % p
        d = (X1 * Z2 - X2 * Z1) % p
        Z3 = x0 * (d * d % p) % p
        return X3, Z3

    X0 = np.full_like(A, x0)
    Z0 = np.ones_like(A)
    X1, Z1 = dbl(X0, Z0)
    degenerate = Z1 == 0
    for bit in bin(n)[3:]:
        if bit == "1":
            X0, Z0 = add(X0, Z0, X1, Z1)
            X1, Z1 = dbl(X1, Z1)
        else:
            X1, Z1 = add(X0, Z0, X1, Z1)
            X0, Z0 = dbl(X0, Z0)
        degenerate |= (Z0 == 0) | (Z1 == 0)
    return degenerate | (Z0 == 0)


def _curve_arrays(p: int) -> tuple[np.ndarray, np.ndarray]:
    j = np.arange(p, dtype=np.int64)
    k = (1728 - j) % p
    A = 3 * j * k % p
    B = 2 * j % p * (k * k % p) % p
    for jj in (0, 1728 % p):
        A[jj], B[jj] = curve_from_j(jj, p)
    return A, B


def supersingular_report(p: int | ValidatedPrime) -> SupersingularReport:
    vp = ValidatedPrime.of(p)
    q = vp.value
    if q in (2, 3):
        return SupersingularReport(q, 1, (FpElement(q, 0),), True)
    if q >= SCAN_LIMIT:
        raise ValueError(f"F_p scan supports p < 2**31, got {q}")
    A, B = _curve_arrays(q)
    cand = np.flatnonzero(_ladder_candidates(A, B, q))
    # re-filter the survivors with further base points before exact counting
    for x0 in (2, 3):
        if x0 < q and cand.size:
            cand = cand[_ladder_candidates(A[cand], B[cand], q, x0)]
    found = []
    for j in cand:
        a, b = int(A[j]), int(B[j])
        _check_nonsingular(a, b, q)
        if _fast_point_count(a, b, q) == q + 1:
            found.append(FpElement(q, int(j)))
    expected = expected_ss_count(vp)
    if len(found) > expected:
        raise RuntimeError(f"found {len(found)} supersingular j in F_{q}, expected at most {expected}")
    return SupersingularReport(q, expected, tuple(found), len(found) == expected)


def oracle_enumerate_fp2(p: int | ValidatedPrime) -> list[Fp2Element]:
    """Every supersingular j in F_{p^2}, by counting points over F_{p^2}.

    Brute force, O(p^4); only for small p, as an independent check on the
    F_p scan and on the count formula.
    """
    q = ValidatedPrime.of(p).value
    lo, hi = ORACLE_RANGE
    if not lo <= q <= hi:
        raise ValueError(f"oracle restricted to {lo} <= p <= {hi}, got {q}")
    r = least_nonresidue(q)
    size = q * q
    half = (size - 1) // 2

    # quadratic character of F_{p^2}, indexed by a*p + b, via z^((p^2-1)/2)
    chi = np.zeros(size, dtype=np.int64)
    for idx in range(1, size):
        z = Fp2Element(q, idx // q, idx % q, r) ** half
        chi[idx] = 1 if (z.a, z.b) == (1, 0) else -1

    xa = np.arange(size, dtype=np.int64) // q
    xb = np.arange(size, dtype=np.int64) % q

    def mul(a1, b1, a2, b2):
        return (a1 * a2 + r * b1 % q * b2) % q, (a1 * b2 + a2 * b1) % q

    sa, sb = mul(xa, xb, xa, xb)
    ca, cb = mul(sa, sb, xa, xb)

    zero, one = Fp2Element(q, 0, 0, r), Fp2Element(q, 1, 0, r)
    j1728 = Fp2Element(q, 1728 % q, 0, r)
    found = []
    for idx in range(size):
        j = Fp2Element(q, idx // q, idx % q, r)
        if j.is_zero():
            A, B = zero, one
        elif j == j1728:
            A, B = one, zero
        else:
            k = j1728 - j
            A, B = 3 * j * k, 2 * j * k * k
        if (4 * A**3 + 27 * B**2).is_zero():
            raise RuntimeError(f"singular curve for j={j}")
        fa = (ca + A.a * xa + r * A.b % q * xb + B.a) % q
        fb = (cb + A.a * xb + A.b * xa + B.b) % q
        s = int(chi[fa * q + fb].sum())
        # trace = p^2 + 1 - #E = -s
        if s % q == 0:
            found.append(j)
    return found
