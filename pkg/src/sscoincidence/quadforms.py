"""Class numbers of negative discriminants by enumerating reduced
primitive positive-definite binary quadratic forms."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt
from typing import NamedTuple

MAX_ABS_DISCRIMINANT = 2**24


class ReducedForm(NamedTuple):
    """a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c


def check_discriminant(D: int) -> None:
    if D >= 0:
        raise ValueError(f"discriminant must be negative, got {D}")
    if D % 4 not in (0, 1):
        raise ValueError(f"discriminant must be 0 or 1 mod 4, got {D}")
    if -D > MAX_ABS_DISCRIMINANT:
        raise ValueError(f"|D| = {-D} exceeds 2**24")


def is_reduced(a: int, b: int, c: int) -> bool:
    if a <= 0 or not (abs(b) <= a <= c):
        return False
    if (abs(b) == a or a == c) and b < 0:
        return False
    return True


def enumerate_reduced_forms(D: int) -> list[ReducedForm]:
    check_discriminant(D)
    forms = []
    for a in range(1, isqrt(-D // 3) + 1):
        # b must share the parity of D
        for b in range(-a + ((a + D) & 1), a + 1, 2):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (b < 0 and (a == c or -b == a)):
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            forms.append(ReducedForm(a, b, c))
    return forms


@lru_cache(maxsize=None)
def class_number(D: int) -> int:
    return len(enumerate_reduced_forms(D))
