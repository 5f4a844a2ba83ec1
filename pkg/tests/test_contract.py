import pytest

from envalg.contract import (SMORODINSKY, ContractionSpec, DivergentContraction, contract_algebra,
                             contract_element)
from envalg.lie import LieAlgebra, jacobi_defect, su3
from envalg.uea import EAElement, casimir2, commutator

# brackets of su3 that vanish under the (0,0,1,1,0,0,1,1) contraction
VANISHED = {(3, 4), (3, 7), (3, 8), (4, 7), (4, 8), (7, 8)}


def vanished(L, C):
    return {(i, j) for i in range(1, 9) for j in range(i + 1, 9) if L.bracket(i, j) and not C.bracket(i, j)}


def test_six_brackets_vanish():
    L = su3()
    C = contract_algebra(L, SMORODINSKY)
    assert vanished(L, C) == VANISHED
    assert jacobi_defect(C) == []
    assert C.labels == ("X1", "X2", "X'3", "X'4", "X5", "X6", "X'7", "X'8")


def test_surviving_brackets_unchanged():
    L = su3()
    C = contract_algebra(L, SMORODINSKY)
    for (i, j), terms in C.table.items():
        assert set(terms) <= set(L.bracket(i, j))


def test_trivial_and_json():
    L = su3()
    assert contract_algebra(L, ContractionSpec((0,) * 8)) is L
    C = contract_algebra(L, SMORODINSKY)
    assert LieAlgebra.from_json(C.to_json()) == C


def test_divergent():
    with pytest.raises(DivergentContraction, match="diverges"):
        contract_algebra(su3(), ContractionSpec.parse("1,0,0,0,0,0,0,0"))


@pytest.mark.parametrize("text", ["1,2", "a,b,c", "-1,0,0,0,0,0,0,0"])
def test_bad_specs(text):
    with pytest.raises(ValueError):
        contract_algebra(su3(), ContractionSpec.parse(text))


def test_casimir_leading_term_central():
    C = contract_algebra(su3(), SMORODINSKY)
    lead = contract_element(casimir2(), SMORODINSKY, C)
    assert lead.degree() == 2
    for k in range(1, 9):
        assert not commutator(lead, EAElement.gen(C, k))
