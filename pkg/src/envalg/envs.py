"""Named-element environments: the derived elements every identity is stated over.

Definitions are DSL text so the same source can be evaluated by PBW
arithmetic and, independently, as representation matrices.
"""
from __future__ import annotations

from functools import lru_cache

from .contract import SMORODINSKY, contract_algebra, contract_element
from .dsl import parse
from .engines import (CONTRACTED, POISSON, UEA, WEYL, MatrixEngine, PhaseEngine, UEAEngine,
                      WeylEngine)
from .lie import LieAlgebra, su3
from .realize import (PhaseElement, WeylElement, classical_images, classical_realize, classical_T,
                      quantum_T)
from .uea import casimir2

CARTAN_T = [
    ("T1", "-1/4*(X7^2 + X8^2 + X2^2)"),
    ("T2", "-1/4*(X5^2 + X6^2 + X1^2 + 2*X1*X2 + X2^2)"),
    ("T3", "-1/4*(X3^2 + X4^2 + X1^2)"),
]

PLAIN_T = [
    ("T1", "-1/4*(X7^2 + X8^2)"),
    ("T2", "-1/4*(X5^2 + X6^2)"),
    ("T3", "-1/4*(X3^2 + X4^2)"),
]

NESTED = [
    ("T12", "comm(T1, T2)"),
    ("T13", "comm(T1, T3)"),
    ("T23", "comm(T2, T3)"),
    ("T121", "comm(T12, T1)"),
    ("T122", "comm(T12, T2)"),
    ("T123", "comm(T12, T3)"),
]

COMMON = [
    ("H", "-2*(T1 + T2 + T3)"),
    ("C2", "-2/3*(X1^2 + X2*X1 + X2^2) - 1/2*(X3^2 + X4^2 + X5^2 + X6^2 + X7^2 + X8^2)"),
    ("C3", "(X8*X6 + X7*X5)*X4 + (X8*X5 - X7*X6)*X3 + 4/27*(X1 - X2)*(2*X1 + X2)*(X1 + 2*X2)"
           " + 1/6*acomm(X1 + 2*X2, X3^2 + X4^2) + 1/6*acomm(X1 - X2, X5^2 + X6^2)"
           " - 1/6*acomm(2*X1 + X2, X7^2 + X8^2) - 4/3*(X1 - X2)"),
    ("Ap", "1/2*(X3 - i*X4)"),
    ("Am", "1/2*(-X3 - i*X4)"),
    ("A", "-1/2*i*X1"),
    ("Bp", "1/2*(X5 - i*X6)"),
    ("Bm", "1/2*(-X5 - i*X6)"),
    ("C", "-1/2*i*X2"),
    ("B", "A + C"),
    ("Cp", "1/2*(X7 - i*X8)"),
    ("Cm", "1/2*(-X7 - i*X8)"),
    ("Y1", "Ap*Cp*Bm"),
    ("Y2", "Bp*Cm*Am"),
    ("W", "(X8*X6 + X7*X5)*X4 + (X8*X5 - X7*X6)*X3"),
]

# The printed bracket "[X1^2 + X1X2 + X3]" is read as X1^2 + X1*X2 + X2^2.
K_DEF = [
    ("K", "T12^2 - 2*acomm(T1^2, T2) - 2*acomm(T2^2, T1) + 4*(T1^2 + T2^2)"
          " + (4 + C2 - 1/3*(X1^2 + X1*X2 + X2^2))*acomm(T1, T2)"
          " - (2*C2 + 1/2*(X1 + X2)*C3 - 1/3*(3*X1^2 + 2*X1*X2 + X2^2) - 1/6*(X1^2 - X2^2)*C2"
          " - 1/108*(X1 + X2)*(X1 - X2)^3)*(T1 + 1)"
          " - (2*C2 + 1/2*X2*C3 - 1/3*(2*X1^2 + X2^2) + 1/6*X2*(2*X1 + X2)*C2"
          " + 1/108*X2*(2*X1 + X2)^3)*(T2 - 1)"),
]

CONTRACTED_DEFS = [
    ("T1", "-1/4*(X'7^2 + X'8^2 + X2^2)"),
    ("T2", "-1/4*(X5^2 + X6^2 + X1^2 + 2*X1*X2 + X2^2)"),
    ("T3", "-1/4*(X'3^2 + X'4^2 + X1^2)"),
    *NESTED,
    ("C2", "1/2*(X'3^2 + X'4^2 + X'7^2 + X'8^2)"),
    ("T1A", "-1/4*(X'7^2 + X'8^2)"),
    ("T2A", "-1/4*(X5^2 + X6^2)"),
    ("T3A", "-1/4*(X'3^2 + X'4^2)"),
    ("T12A", "comm(T1A, T2A)"),
]

CLASSICAL_DEFS = [
    ("T12", "pb(T1, T2)"),
    ("T13", "pb(T1, T3)"),
    ("T23", "pb(T2, T3)"),
    ("T121", "pb(T12, T1)"),
    ("T122", "pb(T12, T2)"),
    ("T123", "pb(T12, T3)"),
    # the printed p2^3 is read as p3^2
    ("H", "1/2*(p1^2 + p2^2 + p3^2 + a1^2*x1^-2 + a2^2*x2^-2 + a3^2*x3^-2)"),
    ("Hsum", "-2*(T1 + T2 + T3)"),
]

QUANTUM_DEFS = [
    ("T12", "qc(T1, T2)"),
    ("T13", "qc(T1, T3)"),
    ("T23", "qc(T2, T3)"),
    ("T121", "qc(T12, T1)"),
    ("H", "-2*(T1 + T2 + T3)"),
]


class ExprEnv:
    """Immutable name -> element bindings over one engine.

    ``definitions`` keeps the DSL source of every derived name, in order;
    ``extra`` holds names computed outside the DSL.
    """

    def __init__(self, name: str, kind: str, algebra: LieAlgebra | None, base: dict,
                 definitions=(), aliases=None, extra=None):
        self.name = name
        self.kind = kind
        self.algebra = algebra
        self.aliases = dict(aliases or {})
        self.definitions = [(n, parse(t) if isinstance(t, str) else t) for n, t in definitions]
        self.extra = dict(extra or {})
        self._b = dict(base)
        self._b.update(self.extra)
        eng = self._engine(self._b)
        for n, node in self.definitions:
            self._b[n] = eng.run(node)
        self.generators = list(base)

    def _engine(self, bindings):
        if self.kind in (UEA, CONTRACTED):
            return UEAEngine(self.algebra, bindings, self.aliases, kind=self.kind)
        if self.kind == POISSON:
            return PhaseEngine(bindings, self.aliases)
        if self.kind == WEYL:
            return WeylEngine(bindings, self.aliases)
        raise ValueError(f"unknown engine {self.kind}")

    def engine(self):
        """A fresh engine reading this environment's bindings."""
        return self._engine(self._b)

    def matrix_engine(self, rep: dict, point: dict) -> MatrixEngine:
        if self.kind not in (UEA, CONTRACTED):
            raise ValueError(f"no matrix representation for the {self.kind} engine")
        return MatrixEngine(rep, self.algebra.labels, point, self.definitions, self.extra, self.aliases)

    def __getitem__(self, key):
        return self._b[key]

    def __contains__(self, key):
        return key in self._b

    def get(self, key, default=None):
        return self._b.get(key, default)

    def known(self, name: str) -> bool:
        return self.engine().known(name)

    def names(self):
        return sorted(self._b)

    def __repr__(self):
        return f"ExprEnv({self.name!r}, {len(self._b)} bindings)"


def _generators(L: LieAlgebra) -> dict:
    from .uea import EAElement
    return {lab: EAElement.gen(L, k) for k, lab in enumerate(L.labels, start=1)}


def generators_env(L: LieAlgebra) -> ExprEnv:
    kind = CONTRACTED if "'" in "".join(L.labels) else UEA
    return ExprEnv("generators", kind, L, _generators(L))


def _require_su3(L, what):
    if L != su3():
        raise ValueError(f"the {what} environment is defined for su3 only, not {L.name}")


@lru_cache(maxsize=None)
def standard_env(L: LieAlgebra | None = None) -> ExprEnv:
    L = L or su3()
    _require_su3(L, "standard")
    return ExprEnv("standard", UEA, L, _generators(L), CARTAN_T + NESTED + COMMON + K_DEF)


@lru_cache(maxsize=None)
def appendix_env(L: LieAlgebra | None = None) -> ExprEnv:
    """Integrals without the Cartan correction terms."""
    L = L or su3()
    _require_su3(L, "appendixA")
    return ExprEnv("appendixA", UEA, L, _generators(L), PLAIN_T + NESTED + COMMON)


def _prime_aliases(labels) -> dict:
    out = {}
    for lab in labels:
        if "'" in lab:
            out[lab.replace("'", "")] = lab
        else:
            out[lab.replace("X", "X'", 1)] = lab
    return out


@lru_cache(maxsize=None)
def contracted_env() -> ExprEnv:
    L = contract_algebra(su3(), SMORODINSKY)
    std = standard_env()
    extra = {
        "C2lead": contract_element(casimir2(), SMORODINSKY, L),
        "T12lead": contract_element(std["T12"], SMORODINSKY, L),
    }
    return ExprEnv("contracted", CONTRACTED, L, _generators(L), CONTRACTED_DEFS,
                   aliases=_prime_aliases(L.labels), extra=extra)


@lru_cache(maxsize=None)
def classical_env() -> ExprEnv:
    P = PhaseElement
    base = {lab: P.var(k) for k, lab in enumerate(P.labels)}
    base.update({f"T{l}": classical_T(l) for l in (1, 2, 3)})
    img = classical_images()
    base.update({f"X{k}": img[k] for k in img})
    std = standard_env()
    for n in ("C2", "C3", "W"):
        base[n] = classical_realize(std[n])
    for l in (1, 2, 3):
        base[f"Tr{l}"] = classical_realize(std[f"T{l}"])
    aliases = {f"s{k}": f"x{k}" for k in (1, 2, 3)}
    return ExprEnv("classical", POISSON, None, base, CLASSICAL_DEFS, aliases=aliases)


@lru_cache(maxsize=None)
def quantum_env() -> ExprEnv:
    Wl = WeylElement
    base = {lab: Wl.var(k) for k, lab in enumerate(Wl.labels)}
    base.update({f"T{l}": quantum_T(l) for l in (1, 2, 3)})
    return ExprEnv("quantum", WEYL, None, base, QUANTUM_DEFS)


ENVIRONMENTS = {
    "standard": standard_env,
    "appendixA": appendix_env,
    "contracted": contracted_env,
    "classical": classical_env,
    "quantum": quantum_env,
}


def get_env(name: str) -> ExprEnv:
    try:
        return ENVIRONMENTS[name]()
    except KeyError:
        raise ValueError(f"unknown environment {name!r}; choose from {', '.join(ENVIRONMENTS)}") from None
