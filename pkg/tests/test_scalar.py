import random

import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from envalg.dsl import parse_scalar
from envalg.scalar import I, ONE, ZERO, Scalar, random_scalar

seeds = st.integers(min_value=0, max_value=2**32)


def three(seed):
    rng = random.Random(seed)
    return [random_scalar(rng) for _ in range(3)]


@given(seeds)
def test_ring_axioms(seed):
    a, b, c = three(seed)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO and not (a - a)


@given(seeds)
def test_print_parse_round_trip(seed):
    for a in three(seed):
        assert parse_scalar(str(a)) == a


def test_imaginary_unit():
    assert I * I == Scalar(-1)
    assert (1 + I) * (1 - I) == Scalar(2)
    assert (Scalar.gaussian(3, 4)).conjugate() == Scalar.gaussian(3, -4)


def test_exact_rationals():
    third = Scalar(mpq(1, 3))
    assert third * 3 == ONE
    assert str(Scalar(mpq(-2, 6))) == "-1/3"


def test_parameters():
    a1, hbar = Scalar.param("a1"), Scalar.param("hbar")
    e = (a1 + hbar) ** 2
    assert e.degree() == 2 and e.degree_in("hbar") == 2
    assert e.substitute("hbar", 0) == a1 * a1
    assert not (e - a1 * a1 - 2 * a1 * hbar - hbar * hbar)
    with pytest.raises(ValueError):
        Scalar.param("b7")


def test_inverse_of_constant_only():
    assert Scalar(4).inverse() == Scalar(mpq(1, 4))
    assert (1 + I).inverse() * (1 + I) == ONE
    with pytest.raises((ValueError, ZeroDivisionError)):
        Scalar.param("a1").inverse()
