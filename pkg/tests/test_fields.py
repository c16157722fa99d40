import pytest
from hypothesis import given
from hypothesis import strategies as st

from sscoincidence.arith import legendre
from sscoincidence.fields import (
    FieldMismatchError,
    Fp2Element,
    conjugate,
    fp2_arith,
    frobenius,
    is_in_base_field,
    least_nonresidue,
)

ODD_PRIMES_50 = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


@st.composite
def elements(draw, p=None, count=1):
    p = p or draw(st.sampled_from(ODD_PRIMES_50))
    coords = st.integers(0, p - 1)
    return [Fp2Element.make(p, draw(coords), draw(coords)) for _ in range(count)]


def test_nonresidue_is_canonical():
    assert least_nonresidue(3) == 2
    assert least_nonresidue(5) == 2
    assert least_nonresidue(7) == 3
    for p in ODD_PRIMES_50:
        r = least_nonresidue(p)
        assert legendre(r, p) == -1
        assert all(legendre(s, p) == 1 for s in range(1, r))


def test_t_squared_is_r():
    t = Fp2Element.make(3, 0, 1)
    assert fp2_arith(t, t, "mul") == Fp2Element.make(3, 2, 0)


def test_self_division():
    x = Fp2Element.make(5, 1, 1)
    assert fp2_arith(x, x, "div") == Fp2Element.make(5, 1, 0)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        fp2_arith(Fp2Element.make(7, 1, 2), Fp2Element.make(7, 0, 0), "div")


def test_mismatched_fields():
    with pytest.raises(FieldMismatchError):
        fp2_arith(Fp2Element.make(7, 1), Fp2Element.make(11, 1), "add")


def test_frobenius_examples():
    assert frobenius(Fp2Element.make(3, 0, 1)) == Fp2Element.make(3, 0, 2)
    assert frobenius(Fp2Element.make(13, 9, 0)) == Fp2Element.make(13, 9, 0)


def test_base_field_membership():
    assert is_in_base_field(Fp2Element.make(7, 4, 0))
    assert not any(is_in_base_field(Fp2Element.make(p, 0, 1)) for p in ODD_PRIMES_50)


@given(elements(count=3))
def test_field_axioms(xs):
    x, y, z = xs
    one = Fp2Element.make(x.p, 1)
    assert (x * y) * z == x * (y * z)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert fp2_arith(x, one, "mul") == x
    assert fp2_arith(fp2_arith(x, y, "add"), y, "sub") == x
    if not x.is_zero():
        assert x * x.inverse() == one


@given(elements())
def test_frobenius_properties(xs):
    (x,) = xs
    assert frobenius(x) == conjugate(x)
    assert frobenius(frobenius(x)) == x
    assert x ** (x.p * x.p) == x
    assert is_in_base_field(x) == (x.b == 0) == (frobenius(x) == x)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_multiplicative_generator_exists(p):
    n = p * p - 1
    prime_factors = [q for q in range(2, n + 1) if n % q == 0 and all(q % d for d in range(2, q))]
    one = Fp2Element.make(p, 1)
    generators = [
        Fp2Element.make(p, a, b)
        for a in range(p)
        for b in range(p)
        if (a, b) != (0, 0) and all(Fp2Element.make(p, a, b) ** (n // q) != one for q in prime_factors)
    ]
    assert generators
    g = generators[0]
    powers = set()
    x = one
    for _ in range(n):
        powers.add((x.a, x.b))
        x = x * g
    assert len(powers) == n
