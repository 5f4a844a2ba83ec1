import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import pbw_words
from envalg.lie import LieAlgebra, LieAlgebraError, abelian, jacobi_defect, su3
from envalg.rep import GMat, adjoint, su3_fundamental
from envalg.uea import (AlgebraMismatch, EAElement, RepresentationError, anticommutator, casimir2, casimir3,
                        check_rep, commutant_check, commutator, eval_in_rep, mul, normal_form, random_element,
                        sym3, sym3_permutation_invariant, word_element)

L = su3()
words = st.lists(st.integers(min_value=1, max_value=8), min_size=0, max_size=6)


@given(words)
def test_strategies_agree(word):
    left = normal_form([(word, 1)], L, "left")
    assert normal_form([(word, 1)], L, "right") == left
    assert normal_form([(word, 1)], L, "random", random.Random(len(word))) == left
    assert word_element(L, word) == left


@given(words)
def test_normal_form_idempotent(word):
    e = normal_form([(word, 1)], L)
    assert normal_form(pbw_words(e), L) == e


@settings(max_examples=50)
@given(st.integers(min_value=0, max_value=2**32))
def test_associative(seed):
    rng = random.Random(seed)
    a, b, c = (random_element(L, rng) for _ in range(3))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


def test_basic_bracket():
    X = {k: EAElement.gen(L, k) for k in range(1, 9)}
    assert str(mul(X[4], X[3])) == "X3*X4 - 2*X1"
    assert commutator(X[5], X[6]) == 2 * X[1] + 2 * X[2]
    assert anticommutator(X[1], X[2]) == 2 * mul(X[1], X[2])


def test_casimirs_central():
    C2, C3 = casimir2(), casimir3()
    for k in range(1, 9):
        g = EAElement.gen(L, k)
        assert not commutator(C2, g)
        assert not commutator(C3, g)


def test_commutant_check():
    ok, _ = commutant_check(casimir2(), [1, 2])
    assert ok
    ok, bad = commutant_check(EAElement.gen(L, 3), [1])
    assert not ok and bad


def test_sym3_symmetric():
    X = [EAElement.gen(L, k) for k in (3, 5, 8)]
    assert sym3_permutation_invariant(*X)
    assert sym3(X[0], X[0], X[0]) == mul(X[0], mul(X[0], X[0]))


def test_jacobi_and_json_round_trip():
    assert jacobi_defect(L) == []
    assert LieAlgebra.from_json(L.to_json()) == L


def test_broken_table_rejected():
    table = dict(L.table)
    (i, j), terms = next(iter(table.items()))
    table[(i, j)] = tuple((k, 2 * c) for k, c in terms)
    with pytest.raises(LieAlgebraError):
        LieAlgebra("bad", L.labels, table)
    bad = LieAlgebra("bad", L.labels, table, check_jacobi=False)
    assert jacobi_defect(bad)


def test_mixing_algebras_rejected():
    with pytest.raises(AlgebraMismatch):
        EAElement.gen(L, 1) + EAElement.gen(abelian(2), 1)


def test_representations():
    check_rep(L, su3_fundamental())
    check_rep(L, adjoint(L))
    rep = {k: (v.scale(2) if k == 3 else v) for k, v in su3_fundamental().items()}
    with pytest.raises(RepresentationError):
        check_rep(L, rep)


def test_casimir2_scalar_in_fundamental():
    m = eval_in_rep(casimir2(), su3_fundamental())
    assert m.as_scalar() is not None
    assert m == GMat.scalar(m.n, m.as_scalar())
