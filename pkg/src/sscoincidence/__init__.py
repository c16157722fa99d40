"""Exact cross-checks of the four computable characterizations of the
supersingular primes {2, 3, 5, ..., 71}."""

__version__ = "0.1.0"

SUPERSINGULAR_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71)
