"""Graded Inonu-Wigner contractions.

With weights ``w`` the scaled generators are ``X'_i = R^(-w_i) X_i``, so the
bracket coefficient ``c`` of ``X_k`` in ``[X_i, X_j]`` picks up ``R^(w_k - w_i - w_j)``.
As ``R -> oo`` a term survives iff ``w_i + w_j - w_k == 0`` and the limit
diverges if that exponent is negative.
"""
from __future__ import annotations

from dataclasses import dataclass

from .lie import LieAlgebra, LieAlgebraError
from .uea import EAElement


class DivergentContraction(LieAlgebraError):
    pass


@dataclass(frozen=True)
class ContractionSpec:
    weights: tuple

    def __post_init__(self):
        if any((not isinstance(w, int)) or w < 0 for w in self.weights):
            raise ValueError("contraction weights must be non-negative integers")

    @classmethod
    def parse(cls, text: str) -> "ContractionSpec":
        try:
            return cls(tuple(int(t) for t in text.split(",")))
        except ValueError:
            raise ValueError(f"bad weight list {text!r}; expected comma-separated integers") from None

    def trivial(self) -> bool:
        return not any(self.weights)


SMORODINSKY = ContractionSpec((0, 0, 1, 1, 0, 0, 1, 1))


def contracted_labels(L: LieAlgebra, spec: ContractionSpec) -> list:
    return [lab.replace("X", "X'", 1) if w and lab.startswith("X") else lab
            for lab, w in zip(L.labels, spec.weights)]


def contract_algebra(L: LieAlgebra, spec: ContractionSpec, check_jacobi: bool = True) -> LieAlgebra:
    if len(spec.weights) != L.dim:
        raise ValueError(f"need {L.dim} weights, got {len(spec.weights)}")
    if spec.trivial():
        return L
    w = (0,) + spec.weights  # k == 0 is the central slot, weight 0
    table = {}
    for (i, j), terms in L.table.items():
        kept = []
        for k, c in terms:
            e = w[i] + w[j] - w[k]
            if e < 0:
                raise DivergentContraction(
                    f"bracket [X{i},X{j}] term in X{k} scales as R^{-e}; the limit diverges at ({i},{j},{k})")
            if e == 0:
                kept.append((k, c))
        table[(i, j)] = kept
    return LieAlgebra(f"{L.name}-contracted", contracted_labels(L, spec), table, check_jacobi=check_jacobi)


def contract_element(p: EAElement, spec: ContractionSpec, target: LieAlgebra | None = None) -> EAElement:
    """Leading R-power part of p after substituting X_i = R^(w_i) X'_i in each PBW monomial."""
    target = target or contract_algebra(p.algebra, spec)
    if spec.trivial():
        return EAElement.from_terms(target, p.terms)
    terms = p.terms
    if not terms:
        return EAElement.scalar(target, 0)
    power = {m: sum(e * w for e, w in zip(m, spec.weights)) for m in terms}
    top = max(power.values())
    lead = {m: c for m, c in terms.items() if power[m] == top}
    return EAElement.from_terms(target, lead)
