import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_phase, random_weyl
from envalg.realize import (HbarPoleError, PhaseElement, WeylElement, classical_T, hbar_limit, ideal_member,
                            poisson_bracket, quantum_T, sphere_ideal, verify_membership, weyl_commutator)
from envalg.scalar import Scalar

seeds = st.integers(min_value=0, max_value=2**32)
P, W = PhaseElement, WeylElement


@settings(max_examples=60)
@given(seeds)
def test_poisson_leibniz_and_antisymmetry(seed):
    rng = random.Random(seed)
    f, g, h = (random_phase(rng) for _ in range(3))
    assert poisson_bracket(f, g) == -poisson_bracket(g, f)
    assert poisson_bracket(f, g * h) == poisson_bracket(f, g) * h + g * poisson_bracket(f, h)


@settings(max_examples=40)
@given(seeds)
def test_poisson_jacobi(seed):
    rng = random.Random(seed)
    f, g, h = (random_phase(rng, max_terms=2) for _ in range(3))
    pb = poisson_bracket
    assert not (pb(f, pb(g, h)) + pb(g, pb(h, f)) + pb(h, pb(f, g)))


@settings(max_examples=40)
@given(seeds)
def test_weyl_associative(seed):
    rng = random.Random(seed)
    a, b, c = (random_weyl(rng, max_terms=2) for _ in range(3))
    assert (a * b) * c == a * (b * c)


def test_canonical_relations():
    for i in range(3):
        for j in range(3):
            expect = 1 if i == j else 0
            assert poisson_bracket(P.var(i), P.var(3 + j)) == P.scalar(expect)
            assert weyl_commutator(W.var(3 + i), W.var(j)) == W.scalar(expect)


def test_laurent_derivative():
    x1 = P.var(0)
    inv = P.monomial((-1, 0, 0, 0, 0, 0))
    assert inv * x1 == P.scalar(1)
    assert poisson_bracket(inv, P.var(3)) == -P.monomial((-2, 0, 0, 0, 0, 0))
    d1 = W.var(3)
    assert d1 * W.monomial((-1, 0, 0, 0, 0, 0)) == (W.monomial((-1, 0, 0, 1, 0, 0))
                                                    - W.monomial((-2, 0, 0, 0, 0, 0)))


def test_hbar_limit_of_integrals():
    for l in (1, 2, 3):
        assert hbar_limit(quantum_T(l)) == classical_T(l)
    with pytest.raises(HbarPoleError):
        hbar_limit(W.var(3))


def test_sphere_membership():
    ideal = sphere_ideal(P, momentum=True)
    s = [P.var(k) for k in range(3)]
    p = [P.var(k) for k in range(3, 6)]
    sphere = s[0] * s[0] + s[1] * s[1] + s[2] * s[2] - 1
    e = sphere * p[0] * p[1] + (s[0] * p[0] + s[1] * p[1] + s[2] * p[2]) * Scalar.param("a1")
    m = ideal_member(e, ideal, e.degree() + 2)
    assert m.is_member
    assert verify_membership(e, ideal, m)
    assert ideal_member(s[0], ideal, 4).status == "not_member"
    assert ideal_member(e, ideal, 1).status == "undecided"


def test_laurent_membership_clears_denominators():
    ideal = sphere_ideal(P)
    s = [P.var(k) for k in range(3)]
    inv = P.monomial((0, -2, 0, 0, 0, 0))
    e = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2] - 1) * inv
    assert ideal_member(e, ideal, e.cleared_degree() + 2).is_member


def test_weyl_right_ideal():
    ideal = sphere_ideal(W)
    s = [W.var(k) for k in range(3)]
    g = s[0] * s[0] + s[1] * s[1] + s[2] * s[2] - 1
    d1 = W.var(3)
    assert ideal_member(g * d1, ideal, 4).is_member
    # d1 * g is not in the right ideal generated by g
    assert not ideal_member(d1 * g, ideal, 4).is_member
