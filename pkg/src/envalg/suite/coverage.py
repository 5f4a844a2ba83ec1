"""Which displayed formula is covered by which check.

Every displayed equation is listed once, in reading order, with a short
quote.  An entry is covered by check ids, by environment definitions
(``"env:name"``) that the checks are built on, or carries an out-of-scope
reason.  ``dangling`` reports anything left uncovered.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Entry:
    key: str
    quote: str
    checks: tuple = ()
    defines: tuple = ()
    out_of_scope: str | None = None


def _ids(prefix, names):
    return tuple(f"{prefix}{n}" for n in names)


_TABLE_PAIRS = [(i, j) for i in range(1, 9) for j in range(i + 1, 9)]
_CUBIC = ("T121-T1", "T122-T2", "T121-T2", "T122-T1", "T121-T3", "T122-T3", "T121-T12", "T122-T12",
          "T121-T122")

MANIFEST = [
    Entry("sec2.hamiltonian", "H=1/2(p_1^2+p_2^2+p_2^3+...)=1/2\\sum_{i<j}(s_i p_j -s_j p_i)^2 + ...",
          checks=("sec2.classical.H-printed", "sec2.classical.H-forms"), defines=("classical:H",)),
    Entry("sec2.angles", "H= 1/2 ( p_{\\theta}^{2} + p_{\\phi}^{2}/\\cos^{2}\\theta + ...)",
          out_of_scope="trigonometric coordinates; the engines work with polynomial/Laurent coordinates"),
    Entry("sec2.integrals", "T_\\ell=-1/4[(s_j p_k -s_k p_j)^2+ ...]",
          checks=_ids("sec2.classical.", ("T1-printed", "T2-printed", "T3-printed"))),
    Entry("sec2.hamiltonian-sum", "H=-2 (T_1+T_2+T_3) -1/2(\\alpha_1^2+\\alpha_2^2+\\alpha_3^2)",
          checks=("sec2.classical.H-sum",)),
    Entry("sec2.poisson", "\\{ H, T_i\\}_PB=0, \\{ T_i, T_j \\}_PB=T_{ij}",
          checks=_ids("sec2.classical.", ("H-T1", "H-T2", "H-T3", "T13", "T23")),
          defines=("classical:T12", "classical:T13", "classical:T23")),
    Entry("sec2.tc121", "\\{ T_{12} ,T_1\\}_PB=2 T_1 T_3-2 T_1 T_2+ ...",
          checks=("sec2.classical.T121", "sec2.classical.cyclic")),
    Entry("sec2.T12sq", "T_{12}^2=- 4T_1 T_2 T_3- ...", checks=("sec2.classical.T12sq",)),
    Entry("sec2.quantum-integrals", "\\hat{T}_\\ell=-1/4[ -\\hbar^2 (s_j \\partial_k -s_k \\partial_j)^2+ ...]",
          checks=_ids("sec2.quantum.", ("T1-printed", "T2-printed", "T3-printed", "limit-T1", "limit-T2",
                                        "limit-T3"))),
    Entry("sec2.quantum-commutators", "[\\hat{H}, \\hat{T}_i]=0, \\hat{T}_{ij}=1/(i\\hbar) [\\hat{T}_i, \\hat{T}_j ]",
          checks=_ids("sec2.quantum.", ("H-T1", "H-T2", "H-T3", "T13", "T23", "limit-T12", "limit-T13",
                                        "limit-T23", "limit-H")),
          defines=("quantum:T12", "quantum:T13", "quantum:T23", "quantum:H")),
    Entry("sec2.t121quan", "1/(i \\hbar)[\\hat{T}_{12}, \\hat{T}_1 ] = ...",
          checks=("sec2.quantum.T121", "sec2.quantum.limit-T121", "sec2.quantum.limit-T121-rhs")),
    Entry("sec2.quantum-T12sq", "\\hat{T}_{12}^2=-4 \\{ ... \\} ... +1805/1728 \\hbar^6",
          checks=("sec2.quantum.T12sq", "sec2.quantum.limit-T12sq", "sec2.quantum.limit-T12sq-rhs")),
    Entry("sec3.table", "[X_1,X_1]=0, [X_1,X_2]=0, [X_1,X_3]=2 X_4 ...",
          checks=tuple(f"sec3.table.X{i}-X{j}" for i, j in _TABLE_PAIRS)),
    Entry("sec3.ladder-operators", "A^{\\pm}=1/2(\\pm X_3 - i X_4), A=-1/2 i X_1 ...",
          defines=("standard:Ap", "standard:Am", "standard:A", "standard:Bp", "standard:Bm", "standard:B",
                   "standard:Cp", "standard:Cm", "standard:C")),
    Entry("sec3.casimirs", "{\\cal C}_{2}= ..., {\\cal C}_{3}= ...",
          checks=tuple(f"sec3.casimirs.C{n}-X{k}" for n in (2, 3) for k in range(1, 9)),
          defines=("standard:C2", "standard:C3")),
    Entry("sec3.integrals", "T_{1}=-1/4(X_{7}^{2}+X_{8}^{2}+X_{2}^2) ...",
          checks=("sec4.reduction.realize-T1", "sec4.reduction.realize-T2", "sec4.reduction.realize-T3"),
          defines=("standard:T1", "standard:T2", "standard:T3")),
    Entry("sec3.C2", "{\\cal C}_2=2(T_1+T_2+T_3) +1/3(X_1^2+X_1X_2+X_2^2)", checks=("sec3.casimirs.C2-T",)),
    Entry("sec3.H", "H=-2(T_{1} + T_{2} + T_{3})= -{\\cal C}_{2} + ...", checks=("sec3.casimirs.H",),
          defines=("standard:H",)),
    Entry("sec3.T-ladder", "T_{1}=1/2\\{C^+,C^- \\}+C^2 ...",
          checks=("sec3.ladder.T1-C", "sec3.ladder.T2-B", "sec3.ladder.T3-A")),
    Entry("sec3.H-ladder", "H=-(A^{+}A^{-}{+} B^{+}B^{-}{+}C^{+}C^{-})- 2(A^2{+}B^2{+}C^2)",
          checks=("sec3.ladder.H-basis",)),
    Entry("sec3.ladder", "A^{+} H= (H{+} 2A{-}1)A^{+} ...", checks=_ids("sec3.ladder.", ("Ap", "Am", "Bp", "Bm",
                                                                                         "Cp", "Cm"))),
    Entry("sec3.ladder-commutant", "[C^\\pm,T_{1}]=0, [B^\\pm,T_{2}]=0, [A^\\pm,T_{3}]=0",
          checks=_ids("sec3.ladder.", ("Cp-T1", "Cm-T1", "Bp-T2", "Bm-T2", "Ap-T3", "Am-T3"))),
    Entry("sec4.T-ij", "T_{12}= [ T_{1},T_{2}], T_{13}= [ T_{1},T_{3}], T_{23}= [ T_{2},T_{3}]",
          checks=("sec4.cubic.T13", "sec4.cubic.T23")
          + tuple(f"sec4.cubic.commutant-{t}-{g}" for t in ("T12", "T13", "T23") for g in ("X1", "X2")),
          defines=("standard:T12", "standard:T13", "standard:T23")),
    Entry("sec4.T12", "T_{12} =1/4 (X_8 X_6 X_3{-} ...) = 1/4 \\{ X_8, X_6, X_3 \\} ...",
          checks=("sec4.cubic.T12-printed", "sec4.cubic.T12-sym3")),
    Entry("sec4.T-ijk", "T_{121}= [ T_{12},T_{1}], T_{122}= [ T_{12},T_{2}], T_{123}= [ T_{12},T_{3}]",
          checks=tuple(f"sec4.cubic.commutant-{t}-{g}" for t in ("T121", "T122", "T123") for g in ("X1", "X2")),
          defines=("standard:T121", "standard:T122", "standard:T123")),
    Entry("sec4.T121-explicit", "T_{121}= 1/16 \\{X_4^2{+}X_3^2{-}X_6^2{-}X_5^2,X_8^2{+}X_7^2\\} ...",
          checks=("sec4.cubic.T121-printed", "sec4.cubic.T123-printed", "sec4.cubic.T122-dep")),
    Entry("sec4.cubic", "[T_{121},T_1]=2\\{ T_{12},T_1 \\} ...", checks=_ids("sec4.cubic.", _CUBIC)),
    Entry("sec4.T12-Y", "[T_1,T_2]=-Y_1+Y_2", checks=("sec4.ybasis.T12-Y",)),
    Entry("sec4.Y-def", "Y_1=A^{+} C^{+} B^{-} and Y_2= Y_1^\\dagger=B^{+} C^{-} A^{-}",
          defines=("standard:Y1", "standard:Y2"),
          out_of_scope="the adjoint relation Y_2 = Y_1^dagger needs an involution the DSL does not provide"),
    Entry("sec4.Y1Y2", "[Y_1,Y_2]=2(A{-}1)(T_1T_2{+}Y_1{+}Y_2) ...", checks=("sec4.ybasis.Y1-Y2",)),
    Entry("sec4.Ysum", "Y_1{+ }Y_2 {-}1/4{\\cal C}_3= ...", checks=("sec4.ybasis.Ysum",)),
    Entry("sec4.realization", "X_1=\\alpha_2-\\alpha_1, X_2=\\alpha_3-\\alpha_2, X_3=x_1p_2 -x_2p_1 ...",
          checks=("sec4.reduction.realize-T1", "sec4.reduction.realize-T2", "sec4.reduction.realize-T3",
                  "sec4.reduction.X3-X4-realized")),
    Entry("sec4.T121-W", "T_{121}= \\{T_3,T_1\\}{-} \\{T_2,T_1\\}{-}1/2(2X_1X_2{+}X_2^2)T_1 ...",
          checks=("sec4.reduction.T121-W",)),
    Entry("sec4.W-realized", "(X_8 X_6{+}X_7 X_5)X_4{+} (X_8 X_5{-} X_7 X_6) X_3=4(\\alpha_1 T_1 ...)",
          checks=("sec4.reduction.W-realized",), defines=("standard:W",)),
    Entry("sec4.T121-pb", "\\{ T_{12} ,T_1\\}_PB=2T_3T_1{-}2T_2T_1 ...", checks=("sec4.reduction.T121-pb-alpha",)),
    Entry("sec4.T121-C3", "T_{121}=[T_{12},T_{1}]= \\{T_3,T_1\\}{-} \\{T_2,T_1\\}{-}1/4X_2 {\\cal C}_3 ...",
          checks=("sec4.reduction.T121-C3",)),
    Entry("sec4.T122-C3", "T_{122}=[T_{12},T_{2}]= \\{T_1,T_2\\}{-} \\{T_2,T_3\\} ...",
          checks=("sec4.reduction.T122-C3",)),
    Entry("sec4.T121-alpha", "T_{121}= ... {+}1/13(\\alpha_3{-}\\alpha_2)(\\alpha _1{+}\\alpha _2{-}2 \\alpha _3){\\cal C}_2 ...",
          checks=("sec4.reduction.T121-alpha",)),
    Entry("sec4.alg", "[T_{12},T_{1}]= -2T_1^2 ..., [T_{12},T_{2}]=2T_2^2 ...",
          checks=("sec4.reduction.alg1", "sec4.reduction.alg2")),
    Entry("sec4.K", "K = T_{12}^2{-}2 \\{T_1^2, T_2\\} ...",
          checks=("sec4.reduction.K-T1", "sec4.reduction.K-T2", "sec4.reduction.K-T12"),
          defines=("standard:K",)),
    Entry("sec4.K-central", "K =-1/16C_3^2{-}1/36 C_2^2 ([X_1{+}2 X_2]^2{+}9) ...", checks=("sec4.reduction.K-forms",)),
    Entry("sec5.scaling", "X'_{3}= 1/R X_{3}, X'_{4}= 1/R X_{4}, X'_{7}= 1/R X_{7}, X'_{8}= 1/R X_{8}",
          checks=("sec5.T12-lead", "sec5.C2-lead")),
    Entry("sec5.table", "[X'_{3},X'_{4}]=0, [X'_{3},X'_{7}]=0, ...",
          checks=_ids("sec5.table.", ("X3-X4", "X3-X7", "X3-X8", "X4-X7", "X4-X8", "X7-X8"))),
    Entry("sec5.T13", "T_{13}=0 and T_{12}-T_{13}=0", checks=("sec5.T13", "sec5.T12-T13")),
    Entry("sec5.T12", "T_{12}= 1/4 (X'^2_3{+}X'^2_4{+}X'^2_7{+}X'^2_8 {+}X'_3 X'_5 X'_7 ...)",
          checks=("sec5.T12-printed", "sec5.T12-lead")),
    Entry("sec5.C2", "C_{2}=1/2 ( X'^2_{3} +X'^2_{4}+ X'^2_{7} +X'^2_{8} ) = -2 T_1 -2 T_3 -1/2X'^2_1 -1/2 X'^2_2",
          checks=tuple(f"sec5.C2-X{k}" for k in range(1, 9)) + ("sec5.C2-T", "sec5.C2-T-plain"),
          defines=("contracted:C2",)),
    Entry("sec5.T121-T123", "T_{121}+T_{123}=0", checks=("sec5.T121-T123",)),
    Entry("sec5.cubic", "[T_{121},T_1]=0, [T_{122},T_{2}]=2 \\{T_{12},T_{2}\\}, ...", checks=_ids("sec5.", _CUBIC)),
    Entry("appA.integrals", "T_{1}=-1/4(X_{7}^{2}+X_{8}^{2}) ...", checks=("appA.T122-dep",),
          defines=("appendixA:T1", "appendixA:T2", "appendixA:T3")),
    Entry("appA.quartic", "[T_{121},T_1]=2\\{ T_{12},T_1 \\}-X_2^2 T_{12} ...", checks=_ids("appA.", _CUBIC)),
]


# claims stated in prose rather than as displayed formulas
OUT_OF_SCOPE_PROSE = [
    "representation theory and spectra of the algebras",
    "the connection to the Askey scheme and Racah polynomials",
    "separation of variables and the one-dimensional Poschl-Teller reduction",
    "the Hamilton-Jacobi equation",
]


def covered_ids() -> set:
    out = set()
    for e in MANIFEST:
        out.update(e.checks)
    return out


def dangling(registry_ids, env_lookup) -> list:
    """Problems with the manifest: unknown check ids, missing definitions, uncovered checks, empty entries."""
    problems = []
    for e in MANIFEST:
        if not (e.checks or e.defines or e.out_of_scope):
            problems.append(f"{e.key}: no check, definition or out-of-scope reason")
        for cid in e.checks:
            if cid not in registry_ids:
                problems.append(f"{e.key}: unknown check {cid}")
        for d in e.defines:
            env, name = d.split(":")
            if not env_lookup(env, name):
                problems.append(f"{e.key}: {env} has no {name}")
    for cid in sorted(set(registry_ids) - covered_ids()):
        problems.append(f"check {cid} is not in the manifest")
    return problems
