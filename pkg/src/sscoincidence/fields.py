"""Arithmetic in F_p and in F_{p^2} = F_p[t]/(t^2 - r), with r the least
positive quadratic non-residue mod p."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import ValidatedPrime, legendre


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


@dataclass(frozen=True, order=True)
class FpElement:
    p: int
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            raise ValueError(f"{self.value} not reduced mod {self.p}")

    def __int__(self) -> int:
        return self.value


@lru_cache(maxsize=None)
def least_nonresidue(p: int) -> int:
    vp = ValidatedPrime.of(p)
    if vp.value == 2:
        raise ValueError("F_{p^2} model needs an odd prime")
    r = 2
    while legendre(r, vp) != -1:
        r += 1
    return r


@dataclass(frozen=True)
class Fp2Element:
    """a + b*t with t^2 = r."""

    p: int
    a: int
    b: int
    r: int

    def __post_init__(self):
        if not (0 <= self.a < self.p and 0 <= self.b < self.p):
            raise ValueError("coordinates must be reduced mod p")

    @classmethod
    def make(cls, p: int, a: int = 0, b: int = 0) -> "Fp2Element":
        return cls(p, a % p, b % p, least_nonresidue(p))

    def _check(self, other: "Fp2Element") -> None:
        if self.p != other.p or self.r != other.r:
            raise FieldMismatchError(f"F_{self.p}^2 vs F_{other.p}^2")

    def _lift(self, other) -> "Fp2Element":
        if isinstance(other, int):
            return Fp2Element.make(self.p, other)
        self._check(other)
        return other

    def __add__(self, other):
        o = self._lift(other)
        return Fp2Element(self.p, (self.a + o.a) % self.p, (self.b + o.b) % self.p, self.r)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return Fp2Element(self.p, (self.a - o.a) % self.p, (self.b - o.b) % self.p, self.r)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return Fp2Element(self.p, -self.a % self.p, -self.b % self.p, self.r)

    def __mul__(self, other):
        o = self._lift(other)
        p = self.p
        a = (self.a * o.a + self.r * self.b * o.b) % p
        b = (self.a * o.b + self.b * o.a) % p
        return Fp2Element(p, a, b, self.r)

    __rmul__ = __mul__

    def norm(self) -> int:
        return (self.a * self.a - self.r * self.b * self.b) % self.p

    def inverse(self) -> "Fp2Element":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in F_{p^2}")
        ninv = pow(n, -1, self.p)
        return Fp2Element(self.p, self.a * ninv % self.p, -self.b * ninv % self.p, self.r)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __pow__(self, e: int) -> "Fp2Element":
        if e < 0:
            return self.inverse() ** (-e)
        result = Fp2Element(self.p, 1, 0, self.r)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0


def fp2_arith(x: Fp2Element, y: Fp2Element, op: str) -> Fp2Element:
    x._check(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")


def frobenius(x: Fp2Element) -> Fp2Element:
    return x**x.p


def conjugate(x: Fp2Element) -> Fp2Element:
    """Closed form of Frobenius: a + b t -> a - b t, since t^p = -t."""
    return Fp2Element(x.p, x.a, -x.b % x.p, x.r)


def is_in_base_field(x: Fp2Element) -> bool:
    return x.b == 0
