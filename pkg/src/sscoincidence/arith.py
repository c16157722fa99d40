"""Exact integer helpers: primality, Legendre symbols, floors, and
reduction of long decimal constants modulo small integers."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

PRIME_LIMIT = 2**32

_TRIAL_LIMIT = 10_000
# Deterministic for every n < 3.3e24, which covers our whole range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _trial_division(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def _miller_rabin(n: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    if n < _TRIAL_LIMIT:
        return _trial_division(n)
    for q in _MR_BASES:
        if n % q == 0:
            return False
    return _miller_rabin(n)


def smallest_factor(n: int) -> int:
    """Smallest prime factor of n >= 2."""
    if n < 2:
        raise ValueError(f"{n} has no prime factor")
    if n % 2 == 0:
        return 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return d
    return n


def primes_up_to(bound: int) -> list[int]:
    """Sieve of Eratosthenes; ascending primes <= bound."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


@dataclass(frozen=True)
class ValidatedPrime:
    """A prime below 2**32 with its residues mod 4 and mod 12 cached."""

    value: int
    residue_mod_4: int
    residue_mod_12: int

    @classmethod
    def of(cls, n: int) -> "ValidatedPrime":
        if isinstance(n, ValidatedPrime):
            return n
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError(f"expected an int, got {type(n).__name__}")
        if not 1 <= n < PRIME_LIMIT:
            raise ValueError(f"{n} outside supported range [2, 2**32)")
        if not is_prime(n):
            if n == 1:
                raise ValueError("1 is not prime")
            raise ValueError(f"{n} is not prime (divisible by {smallest_factor(n)})")
        return cls(n, n % 4, n % 12)

    def __int__(self) -> int:
        return self.value


def as_prime(p: int | ValidatedPrime) -> ValidatedPrime:
    return ValidatedPrime.of(p)


def legendre(a: int, p: int | ValidatedPrime) -> int:
    """Legendre symbol (a|p) via Euler's criterion."""
    q = int(p)
    if q == 2:
        raise ValueError("Legendre symbol needs an odd prime")
    ValidatedPrime.of(q)
    r = pow(a % q, (q - 1) // 2, q)
    if r == q - 1:
        return -1
    return r


@dataclass(frozen=True)
class DecimalConstant:
    """A nonnegative integer held as its base-10 digit sequence."""

    digits: tuple[int, ...]

    def __post_init__(self):
        if not self.digits:
            raise ValueError("empty digit sequence")
        if any(not 0 <= d <= 9 for d in self.digits):
            raise ValueError("digits must lie in 0..9")
        if len(self.digits) > 1 and self.digits[0] == 0:
            raise ValueError("leading zero")

    @classmethod
    def parse(cls, text: str) -> "DecimalConstant":
        if not text.isdigit() or not text.isascii():
            raise ValueError(f"not a decimal string: {text!r}")
        return cls(tuple(int(ch) for ch in text))

    def __str__(self) -> str:
        return "".join(map(str, self.digits))


def decimal_mod(c: DecimalConstant | str, m: int) -> int:
    """Residue of a decimal constant mod m by left-to-right Horner reduction."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if isinstance(c, str):
        c = DecimalConstant.parse(c)
    r = 0
    for d in c.digits:
        r = (10 * r + d) % m
    return r


def floor_div(a: int, b: int) -> int:
    if b < 1:
        raise ValueError("divisor must be positive")
    if a < 0:
        raise ValueError("dividend must be nonnegative")
    return a // b


def multiply_digits(x: DecimalConstant, y: DecimalConstant) -> DecimalConstant:
    """Schoolbook product on digit sequences, independent of Python bigints."""
    xs, ys = x.digits[::-1], y.digits[::-1]
    acc = [0] * (len(xs) + len(ys))
    for i, dx in enumerate(xs):
        if dx == 0:
            continue
        carry = 0
        for k, dy in enumerate(ys):
            t = acc[i + k] + dx * dy + carry
            acc[i + k] = t % 10
            carry = t // 10
        k = i + len(ys)
        while carry:
            t = acc[k] + carry
            acc[k] = t % 10
            carry = t // 10
            k += 1
    while len(acc) > 1 and acc[-1] == 0:
        acc.pop()
    return DecimalConstant(tuple(acc[::-1]))
