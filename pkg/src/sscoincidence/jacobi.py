"""Dimension of the space of weight-2 Jacobi cusp forms of prime index p.

    dim = sum_{j=1}^{p} ( floor((1+j)/6) - delta6(j) - floor(j^2/(4p)) )

with delta6(j) = 1 iff 6 | j. For weight 2 and squarefree index there are
no Jacobi Eisenstein series, so this is also dim J_{2,p}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import ValidatedPrime, floor_div, primes_up_to


class NegativeDimensionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class JacobiDimension:
    p: int
    terms: tuple[int, ...]
    dim: int


def delta6(j: int) -> int:
    if j < 1:
        raise ValueError("j must be positive")
    return 1 if j % 6 == 0 else 0


def jacobi_term(j: int, p: int) -> int:
    return floor_div(1 + j, 6) - delta6(j) - floor_div(j * j, 4 * p)


@lru_cache(maxsize=None)
def jacobi_cusp_dim(p: int | ValidatedPrime) -> JacobiDimension:
    q = ValidatedPrime.of(p).value
    terms = tuple(jacobi_term(j, q) for j in range(1, q + 1))
    dim = sum(terms)
    if dim < 0:
        raise NegativeDimensionError(f"dimension sum is {dim} at p={q}")
    return JacobiDimension(q, terms, dim)


def positivity_scan(bound: int) -> list[int]:
    """Primes p <= bound for which no weight-2 Jacobi cusp form of index p exists."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    return [p for p in primes_up_to(bound) if jacobi_cusp_dim(p).dim == 0]
