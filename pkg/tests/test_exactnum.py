from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from loopchain.exactnum import (
    ONE, SQRT5, ZERO, IrrationalError, QuadRat, alpha, as_rational, beta,
    quad_add, quad_inv, quad_mul, quad_pow,
)

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f.numerator) < 10**6)
quads = st.builds(QuadRat, fractions, fractions)
nonzero_quads = quads.filter(bool)


def test_add_examples():
    assert quad_add(alpha(), beta()) == QuadRat(1, 0)
    x = QuadRat(Fraction(3, 7), -2)
    assert quad_add(x, ZERO) == x
    assert quad_add(QuadRat(Fraction(1, 2), Fraction(1, 2)), QuadRat(Fraction(1, 2), Fraction(-1, 2))) == ONE


def test_mul_examples():
    assert quad_mul(alpha(), beta()) == QuadRat(-1)
    assert quad_mul(alpha(), alpha()) == QuadRat(Fraction(3, 2), Fraction(1, 2))
    x = QuadRat(5, Fraction(-1, 3))
    assert quad_mul(x, ONE) == x


def test_inverse_examples():
    assert quad_inv(alpha()) == -beta() == QuadRat(Fraction(-1, 2), Fraction(1, 2))
    assert quad_inv(ONE) == ONE
    assert quad_inv(beta()) == -alpha()
    with pytest.raises(ZeroDivisionError):
        quad_inv(ZERO)


def _fib_by_recurrence(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def test_pow_examples():
    assert quad_pow(alpha(), 2) == QuadRat(Fraction(3, 2), Fraction(1, 2))
    assert quad_pow(alpha(), -1) == -beta()
    assert quad_pow(alpha(), 0) == ONE
    assert _fib_by_recurrence(10) == 55
    assert quad_pow(alpha(), 10) - quad_pow(beta(), 10) == QuadRat(0, 55)
    with pytest.raises(ZeroDivisionError):
        quad_pow(ZERO, -1)


def test_as_rational():
    assert as_rational(QuadRat(7)) == 7
    assert as_rational(alpha() + beta()) == 1
    with pytest.raises(IrrationalError):
        as_rational(alpha())


def test_golden_identities():
    a, b = alpha(), beta()
    assert a + b == 1
    assert a * b == -1
    d = a - b
    assert d.rat == 0 and d.irr == 1 and d == SQRT5
    for root in (a, b):
        assert root * root - root - 1 == ZERO


def test_immutable():
    x = QuadRat(1, 2)
    with pytest.raises(AttributeError):
        x.rat = Fraction(3)


@given(quads, quads, quads)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z


@given(nonzero_quads)
def test_inverse_property(x):
    assert x * quad_inv(x) == ONE


@given(nonzero_quads, st.integers(-20, 20), st.integers(-20, 20))
def test_pow_exponent_law(x, a, b):
    assert quad_pow(x, a + b) == quad_pow(x, a) * quad_pow(x, b)


@given(quads, quads)
def test_results_are_canonical(x, y):
    for v in (x + y, x * y, x - y):
        for part in (v.rat, v.irr):
            assert part.denominator > 0
            assert Fraction(part.numerator, part.denominator) == part
    assert isinstance((x * y).rat, Fraction)
