"""The identity registry, declared as data.

Each check is an equation ``lhs = rhs`` in DSL text over a named
environment, with a short quote of the displayed formula it encodes.
``expect`` is ``"pass"`` for identities expected to hold, ``"suspect"`` for
ones known to be doubtful as printed, and ``"info"`` for quantities that are
reported but not judged.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..dsl import parse


@dataclass(frozen=True)
class Variant:
    label: str
    rhs: str
    lhs: str | None = None


@dataclass(frozen=True)
class Check:
    id: str
    quote: str
    env: str
    lhs: str
    rhs: str
    expect: str = "pass"
    ideal: str | None = None  # "sphere" | "sphere+momentum"
    rhs_env: str | None = None  # rhs read in a different environment (hbar -> 0 bridges)
    transform: str | None = None  # "at_cartan": specialize X1, X2 on lhs - rhs
    variants: tuple = ()
    basis: tuple = ()  # repair cores: DSL text or (text, coefficient weight budget)
    coeff_gens: tuple = ()  # repair coefficient generators: text or (text, weight); default engine-specific
    ansatz_degree: int | None = None
    note: str | None = None

    @property
    def group(self) -> str:
        return self.id.rsplit(".", 1)[0]

    def lhs_ast(self):
        return parse(self.lhs)

    def rhs_ast(self):
        return parse(self.rhs)


CHECKS: list[Check] = []


def _add(*args, **kw):
    CHECKS.append(Check(*args, **kw))


# ---------------------------------------------------------------------------
# sec3.table: the 28 brackets of su(3)

SU3_TABLE = {
    (1, 2): "0", (1, 3): "2*X4", (1, 4): "-2*X3", (1, 5): "X6", (1, 6): "-X5", (1, 7): "-X8",
    (1, 8): "X7", (2, 3): "-X4", (2, 4): "X3", (2, 5): "X6", (2, 6): "-X5", (2, 7): "2*X8",
    (2, 8): "-2*X7", (3, 4): "2*X1", (3, 5): "-X7", (3, 6): "-X8", (3, 7): "X5", (3, 8): "X6",
    (4, 5): "X8", (4, 6): "-X7", (4, 7): "X6", (4, 8): "-X5", (5, 6): "2*X1 + 2*X2",
    (5, 7): "-X3", (5, 8): "X4", (6, 7): "-X4", (6, 8): "-X3", (7, 8): "2*X2",
}

for (i, j), rhs in SU3_TABLE.items():
    _add(f"sec3.table.X{i}-X{j}", f"[X_{i},X_{j}]={rhs.replace('*', ' ')}", "standard",
         f"comm(X{i}, X{j})", rhs)

# ---------------------------------------------------------------------------
# sec3.casimirs

for k in range(1, 9):
    _add(f"sec3.casimirs.C2-X{k}", "{\\cal C}_{2}= -2/3 (X_1^{2}+X_2 X_1+ X_{2}^{2}) -1/2 (X_3^{2} + ...)",
         "standard", f"comm(C2, X{k})", "0")
for k in range(1, 9):
    _add(f"sec3.casimirs.C3-X{k}", "{\\cal C}_{3}=(X_8 X_6{+}X_7 X_5) X_4{+}(X_8 X_5{-} X_7 X_6) X_3 + ...",
         "standard", f"comm(C3, X{k})", "0")
_add("sec3.casimirs.C2-T", "{\\cal C}_2=2(T_1+T_2+T_3) +1/3(X_1^2+X_1X_2+X_2^2)", "standard",
     "C2", "2*(T1 + T2 + T3) + 1/3*(X1^2 + X1*X2 + X2^2)")
_add("sec3.casimirs.H", "H=-2(T_1+T_2+T_3)= -{\\cal C}_2 +1/3(X_1^2+X_1X_2+X_2^2)", "standard",
     "H", "-C2 + 1/3*(X1^2 + X1*X2 + X2^2)")

# ---------------------------------------------------------------------------
# sec3.ladder

_add("sec3.ladder.T1-C", "T_1=1/2{C^+,C^-}+C^2", "standard", "T1", "1/2*acomm(Cp, Cm) + C^2")
_add("sec3.ladder.T2-B", "T_2=1/2{B^+,B^-}+B^2", "standard", "T2", "1/2*acomm(Bp, Bm) + B^2")
_add("sec3.ladder.T3-A", "T_3=1/2{A^+,A^-}+A^2", "standard", "T3", "1/2*acomm(Ap, Am) + A^2")
_add("sec3.ladder.H-basis", "H=-(A^{+}A^{-}{+} B^{+}B^{-}{+}C^{+}C^{-})- 2(A^2{+}B^2{+}C^2)", "standard",
     "H", "-(Ap*Am + Bp*Bm + Cp*Cm) - 2*(A^2 + B^2 + C^2)", expect="suspect",
     variants=(Variant("anticommutator reading", "-(acomm(Ap, Am) + acomm(Bp, Bm) + acomm(Cp, Cm))"
                                                 " - 2*(A^2 + B^2 + C^2)"),))
for name, op, sign in (("Ap", "A", "+"), ("Am", "A", "-"), ("Bp", "B", "+"), ("Bm", "B", "-"),
                       ("Cp", "C", "-"), ("Cm", "C", "-")):
    pm = "+" if name.endswith("p") else "-"
    _add(f"sec3.ladder.{name}", f"{op}^{{{pm}}} H= (H{{{sign}}}2{op}{{-}}1){op}^{{{pm}}}", "standard",
         f"{name}*H", f"(H {sign} 2*{op} - 1)*{name}",
         expect="suspect" if op == "C" else "pass")
for name, t in (("Cp", "T1"), ("Cm", "T1"), ("Bp", "T2"), ("Bm", "T2"), ("Ap", "T3"), ("Am", "T3")):
    _add(f"sec3.ladder.{name}-{t}", "[C^\\pm,T_{1}]=0, [B^\\pm,T_{2}]=0, [A^\\pm,T_{3}]=0", "standard",
         f"comm({name}, {t})", "0")

# ---------------------------------------------------------------------------
# sec4.cubic

_add("sec4.cubic.T13", "T_{13}=-T_{12}", "standard", "T13", "-T12")
_add("sec4.cubic.T23", "T_{23}=T_{12}", "standard", "T23", "T12")
for t in ("T12", "T13", "T23", "T121", "T122", "T123"):
    for g in ("X1", "X2"):
        _add(f"sec4.cubic.commutant-{t}-{g}", "[T_{12},X_{i}]=[T_{13},X_{i}]=[T_{23},X_{i}]=0", "standard",
             f"comm({t}, {g})", "0")
_add("sec4.cubic.T12-printed", "T_{12}=1/4 (X_8 X_6 X_3{-}X_8 X_5 X_4{+}X_7 X_6 X_4{+}X_7 X_5 X_3{-}X_8^2 ...)",
     "standard", "T12",
     "1/4*(X8*X6*X3 - X8*X5*X4 + X7*X6*X4 + X7*X5*X3 - X8^2 - X7^2 + X6^2 + X5^2 - X4^2 - X3^2)")
_add("sec4.cubic.T12-sym3", "1/4 \\{ X_8, X_6, X_3 \\}{-}1/4\\{ X_8, X_5, X_4\\}{+} ...", "standard", "T12",
     "1/4*sym3(X8, X6, X3) - 1/4*sym3(X8, X5, X4) + 1/4*sym3(X7, X6, X4) + 1/4*sym3(X7, X5, X3)")
_add("sec4.cubic.T121-printed", "T_{121}= 1/16 \\{X_4^2{+}X_3^2{-}X_6^2{-}X_5^2,X_8^2{+}X_7^2\\} ...", "standard",
     "T121", "1/16*acomm(X4^2 + X3^2 - X6^2 - X5^2, X8^2 + X7^2)"
             " - 1/8*acomm((X8*X6 + X7*X5)*X4 + (X8*X5 - X7*X6)*X3, X2) - 1/2*X2^2")
_add("sec4.cubic.T123-printed", "T_{123}= 1/16 \\{X_6^2{+}X_5^2{-}X_8^2{-}X_7^2,X_4^2{+}X_3^2\\} ...", "standard",
     "T123", "1/16*acomm(X6^2 + X5^2 - X8^2 - X7^2, X4^2 + X3^2)"
             " - 1/8*acomm((X8*X6 + X7*X5)*X4 + (X8*X5 - X7*X6)*X3, X1) + 1/2*X1^2")
_add("sec4.cubic.T122-dep", "T_{122}=-T_{121}-T_{123}", "standard", "T122", "-T121 - T123")

CUBIC = [
    ("T121-T1", "[T_{121},T_1]=2\\{ T_{12},T_1 \\}", "comm(T121, T1)", "2*acomm(T12, T1)"),
    ("T122-T2", "[T_{122},T_2]=2\\{ T_{12},T_2 \\}", "comm(T122, T2)", "2*acomm(T12, T2)"),
    ("T121-T2", "[T_{121},T_2]=-\\{ T_{12},T_1 \\}-\\{ T_{12},T_2 \\}+\\{ T_{12},T_3 \\}", "comm(T121, T2)",
     "-acomm(T12, T1) - acomm(T12, T2) + acomm(T12, T3)"),
    ("T122-T1", "[T_{122},T_1]=-\\{ T_{12},T_1 \\}-\\{ T_{12},T_2 \\}+\\{ T_{12},T_3 \\}", "comm(T122, T1)",
     "-acomm(T12, T1) - acomm(T12, T2) + acomm(T12, T3)"),
    ("T121-T3", "[T_{121},T_3]=-\\{ T_{12},T_1 \\}+\\{ T_{12},T_2 \\}-\\{ T_{12},T_3 \\}", "comm(T121, T3)",
     "-acomm(T12, T1) + acomm(T12, T2) - acomm(T12, T3)"),
    ("T122-T3", "[T_{122},T_3]=\\{ T_{12},T_1 \\}-\\{ T_{12},T_2 \\}-\\{ T_{12},T_3 \\}", "comm(T122, T3)",
     "acomm(T12, T1) - acomm(T12, T2) - acomm(T12, T3)"),
    ("T121-T12", "[T_{121},T_{12}]=2\\{ T_{122},T_1 \\} +\\{ T_{121},T_1 \\}+\\{ T_{121},T_2 \\}-\\{ T_{121},T_3 \\}",
     "comm(T121, T12)", "2*acomm(T122, T1) + acomm(T121, T1) + acomm(T121, T2) - acomm(T121, T3)"),
    ("T122-T12", "[T_{122},T_{12}]=-2\\{ T_{121},T_2 \\} -\\{ T_{122},T_1 \\}-\\{ T_{122},T_2 \\}+\\{ T_{122},T_3 \\}",
     "comm(T122, T12)", "-2*acomm(T121, T2) - acomm(T122, T1) - acomm(T122, T2) + acomm(T122, T3)"),
    ("T121-T122", "[T_{121},T_{122}]= -\\{\\{ T_{12}, T_1\\}, T_1\\}{-}\\{ \\{ T_{12}, T_2\\}, T_2\\} ...",
     "comm(T121, T122)",
     "-acomm(acomm(T12, T1), T1) - acomm(acomm(T12, T2), T2) - acomm(acomm(T12, T3), T3)"
     " + 2*acomm(acomm(T12, T1), T2) + 2*acomm(acomm(T12, T1), T3) + 2*acomm(acomm(T12, T2), T3)"),
]
for key, quote, lhs, rhs in CUBIC:
    _add(f"sec4.cubic.{key}", quote, "standard", lhs, rhs)

# ---------------------------------------------------------------------------
# sec4.ybasis

_add("sec4.ybasis.T12-Y", "[T_1,T_2]=-Y_1+Y_2", "standard", "comm(T1, T2)", "-Y1 + Y2")
_add("sec4.ybasis.Y1-Y2", "[Y_1,Y_2]=2(A{-}1)(T_1T_2{+}Y_1{+}Y_2){-}2(B{-}1)(T_1T_3{+}2Y_2) ...", "standard",
     "comm(Y1, Y2)",
     "2*(A - 1)*(T1*T2 + Y1 + Y2) - 2*(B - 1)*(T1*T3 + 2*Y2) + 2*(B - A)*T2*T3"
     " - 2*A*B*(B - A)*(T1 + T2 + T3) + 2*A*B*(B - A)*(A^2 - A*B + B^2 - 3)"
     " + 2*(B^2 - A^2)*(T1 - (B - A)^2 + 1) + 2*(B - A)^2*(T2 - T3) - 2*(B - A)*(T1 - T2 - T3)")
_add("sec4.ybasis.Ysum", "Y_1{+ }Y_2 {-}1/4{\\cal C}_3=2/3(B{-}A)(T_1{+}T_2{-}2T_3){+} ...", "standard",
     "Y1 + Y2 - 1/4*C3",
     "2/3*(B - A)*(T1 + T2 - 2*T3) + 2/3*A*(2*T1 - T2 - T3) - T1 + T2 + T3 + 2/3*(A + B) + 2*A*B"
     " + 10/27*(2*A - B)*(A + B)*(A - 2*B)", expect="suspect", ansatz_degree=3)

# ---------------------------------------------------------------------------
# sec4.reduction

_add("sec4.reduction.T121-W", "T_{121}= \\{T_3,T_1\\}{-} \\{T_2,T_1\\}{-}1/2(2X_1X_2{+}X_2^2)T_1 ...", "standard",
     "T121",
     "acomm(T3, T1) - acomm(T2, T1) - 1/2*(2*X1*X2 + X2^2)*T1 + 1/2*X2^2*(T3 - T2)"
     " - 1/8*acomm((X8*X6 + X7*X5)*X4 + (X8*X5 - X7*X6)*X3, X2) - 1/2*X2^2 - 1/8*(2*X1*X2 + X2^2)*X2^2")
_add("sec4.reduction.T121-C3", "T_{121}= \\{T_3,T_1\\}{-} \\{T_2,T_1\\}{-}1/4X_2 {\\cal C}_3 ...", "standard",
     "T121",
     "acomm(T3, T1) - acomm(T2, T1) - 1/4*X2*C3 - 1/12*X2*(2*X1 + X2)*C2"
     " - 1/216*X2*(X1 + X2)*(36 + (2*X1 + X2)^2)", expect="suspect", ansatz_degree=4)
_add("sec4.reduction.T122-C3", "T_{122}= \\{T_1,T_2\\}{-} \\{T_2,T_3\\}{+}1/4(X_1{+}X_2) {\\cal C}_3 ...", "standard",
     "T122",
     "acomm(T1, T2) - acomm(T2, T3) + 1/4*(X1 + X2)*C3 - 1/12*(X1^2 - X2^2)*C2"
     " - 1/216*(X1^2 - X2^2)*(36 + (X1 - X2)^2)")
_add("sec4.reduction.T121-alpha", "1/13(\\alpha_3{-}\\alpha_2)(\\alpha _1{+}\\alpha _2{-}2 \\alpha _3){\\cal C}_2",
     "standard", "T121",
     "acomm(T3, T1) - acomm(T2, T1) - 1/4*(a3 - a2)*C3 + 1/13*(a3 - a2)*(a1 + a2 - 2*a3)*C2"
     " - 1/216*(a3 - a2)*(a1 + a2 - 2*a3)*(36 + (a1 + a2 - 2*a3)^2)",
     expect="suspect", transform="at_cartan", ansatz_degree=4,
     variants=(Variant("coefficient 1/12", "acomm(T3, T1) - acomm(T2, T1) - 1/4*(a3 - a2)*C3"
                                           " + 1/12*(a3 - a2)*(a1 + a2 - 2*a3)*C2"
                                           " - 1/216*(a3 - a2)*(a1 + a2 - 2*a3)*(36 + (a1 + a2 - 2*a3)^2)"),
               Variant("coefficient -1/12", "acomm(T3, T1) - acomm(T2, T1) - 1/4*(a3 - a2)*C3"
                                            " - 1/12*(a3 - a2)*(a1 + a2 - 2*a3)*C2"
                                            " - 1/216*(a3 - a2)*(a1 + a2 - 2*a3)*(36 + (a1 + a2 - 2*a3)^2)")),
     note="X1 := a2 - a1 and X2 := a3 - a2 are substituted after PBW ordering")
_add("sec4.reduction.alg1", "[T_{12},T_{1}]= -2T_1^2{-}2\\{T_2,T_1\\}{-}1/4X_2 {\\cal C}_3 ...", "standard",
     "comm(T12, T1)",
     "-2*T1^2 - 2*acomm(T2, T1) - 1/4*X2*C3 + (C2 - 1/3*(X1^2 + X1*X2 + X2^2))*T1"
     " - 1/12*X2*(2*X1 + X2)*C2 - 1/216*X2*(X1 + X2)*(36 + (2*X1 + X2)^2)", expect="suspect",
     ansatz_degree=4)
_add("sec4.reduction.alg2", "[T_{12},T_{2}]=2T_2^2+ 2\\{T_1,T_2\\}{+}1/4(X_1{+}X_2) {\\cal C}_3 ...", "standard",
     "comm(T12, T2)",
     "2*T2^2 + 2*acomm(T1, T2) + 1/4*(X1 + X2)*C3 - (C2 - 1/3*(X1^2 + X1*X2 + X2^2))*T2"
     " - 1/12*(X1^2 - X2^2)*C2 - 1/216*(X1^2 - X2^2)*(36 + (X1 - X2)^2)")
for t in ("T1", "T2", "T12"):
    _add(f"sec4.reduction.K-{t}", "K = T_{12}^2{-}2 \\{T_1^2, T_2\\}{-}2\\{T_2^2, T_1\\} ...", "standard",
         f"comm(K, {t})", "0", note="the printed [X1^2 + X1X2 + X3] is read as X1^2 + X1*X2 + X2^2")
_add("sec4.reduction.K-forms", "K =-1/16C_3^2{-}1/36 C_2^2 ([X_1{+}2 X_2]^2{+}9) ...", "standard", "K",
     "-1/16*C3^2 - 1/36*C2^2*((X1 + 2*X2)^2 + 9) - 1/12*C3*C2*(X1 + 2*X2)"
     " - 1/216*C3*(72*(2*X1 + X2) + (X1 + 2*X2)*(4*X1^2 - 11*X2*X1 - 11*X2^2))"
     " - 1/648*C2*(X1 - X2)*((2*X1 + X2)*(4*X1^2 + 7*X2*X1 + 7*X2^2) - 36*(4*X1 + 5*X2))"
     " - 1/5832*((X1 - X2)^2 + 36)*(X1 - X2)*((2*X1 + X2)^3 - 36*(X1 + 2*X2))")
for l in (1, 2, 3):
    _add(f"sec4.reduction.realize-T{l}", "X_3=x_1p_2 -x_2p_1, X_4=-\\alpha_2 x_1/x_2-\\alpha_1 x_2/x_1, ...",
         "classical", f"Tr{l}", f"T{l}", note="Tr is the coordinate image of the enveloping-algebra T")
_add("sec4.reduction.W-realized",
     "(X_8 X_6{+}X_7 X_5)X_4{+} (X_8 X_5{-} X_7 X_6) X_3=4(\\alpha_1 T_1{+}\\alpha_2 T_2{+}\\alpha_3 T_3) ...",
     "classical", "W", "4*(a1*T1 + a2*T2 + a3*T3) + a1*(a2 - a3)^2 + (a2 + a3)*(a1^2 + a2*a3)")
_add("sec4.reduction.T121-pb-alpha", "\\{ T_{12} ,T_1\\}_PB=2T_3T_1{-}2T_2T_1{-}1/2(2 \\alpha_1{-}\\alpha_2{-}\\alpha_3) ...",
     "classical", "pb(T12, T1)",
     "2*T3*T1 - 2*T2*T1 - 1/2*(2*a1 - a2 - a3)*(a2 - a3)*T1 - 1/2*(a2 - a3)^2*(T2 - T3)"
     " + (a2 - a3)*(a1*T1 + a2*T2 + a3*T3) + 1/4*a1*(a2 - a3)^3 + 1/4*(a2 - a3)^2*(a1^2 + a2*a3)"
     " + 1/8*(a2 - a3)^3*(-2*a1 + a2 + a3)", expect="suspect", ansatz_degree=4)
_add("sec4.reduction.X3-X4-realized", "X_3=x_1p_2 -x_2p_1, X_4=-\\alpha_2 x_1/x_2-\\alpha_1 x_2/x_1", "classical",
     "pb(X3, X4)", "2*X1", expect="info",
     note="the coordinate realization is not claimed to be a Poisson map on the generators")

# ---------------------------------------------------------------------------
# sec2.classical

_PAIRS = {1: (2, 3), 2: (1, 3), 3: (1, 2)}
for l, (j, k) in _PAIRS.items():
    _add(f"sec2.classical.T{l}-printed",
         "T_\\ell=-1/4[(s_j p_k -s_k p_j)^2+(\\alpha_{j}s_{k}/s_{j}+ \\alpha_{k}s_{j}/s_{k})^2+(\\alpha_j{-}\\alpha_k)^2]",
         "classical", f"T{l}",
         f"-1/4*((s{j}*p{k} - s{k}*p{j})^2 + (a{j}*s{k}*s{j}^-1 + a{k}*s{j}*s{k}^-1)^2 + (a{j} - a{k})^2)")
    _add(f"sec2.quantum.T{l}-printed",
         "\\hat{T}_\\ell=-1/4[ -\\hbar^2 (s_j \\partial_k -s_k \\partial_j)^2+ ... -\\hbar^2 ]",
         "quantum", f"T{l}",
         f"-1/4*(-hbar^2*(s{j}*d{k} - s{k}*d{j})^2 + (a{j}*s{k}*s{j}^-1 + a{k}*s{j}*s{k}^-1)^2"
         f" + (a{j} - a{k})^2 - hbar^2)")
_add("sec2.classical.H-printed", "H=1/2(p_1^2+p_2^2+p_2^3+\\alpha_1^2/s_1^2+\\alpha_2^2/s_2^2+\\alpha_3^2/s_3^2)",
     "classical", "1/2*(p1^2 + p2^2 + p2^3 + a1^2*s1^-2 + a2^2*s2^-2 + a3^2*s3^-2)",
     "-2*(T1 + T2 + T3) - 1/2*(a1^2 + a2^2 + a3^2)", expect="suspect", ideal="sphere+momentum",
     variants=(Variant("p3^2 for p2^3", "-2*(T1 + T2 + T3) - 1/2*(a1^2 + a2^2 + a3^2)",
                       lhs="1/2*(p1^2 + p2^2 + p3^2 + a1^2*s1^-2 + a2^2*s2^-2 + a3^2*s3^-2)"),))
_add("sec2.classical.T13", "T_{12}=-T_{13}=T_{23}", "classical", "T13", "-T12")
_add("sec2.classical.T23", "T_{12}=-T_{13}=T_{23}", "classical", "T23", "T12")
for l in (1, 2, 3):
    _add(f"sec2.classical.H-T{l}", "\\{ H, T_i\\}_PB=0", "classical", f"pb(H, T{l})", "0",
         ideal="sphere+momentum", note="H is the sphere Hamiltonian with p3^2 for the printed p2^3")
_add("sec2.classical.H-sum", "H=-2 (T_1+T_2+T_3) -1/2(\\alpha_1^2+\\alpha_2^2+\\alpha_3^2)", "classical",
     "H", "-2*(T1 + T2 + T3) - 1/2*(a1^2 + a2^2 + a3^2)", ideal="sphere+momentum",
     note="H is the sphere Hamiltonian with p3^2 for the printed p2^3")
_add("sec2.classical.H-forms", "=1/2\\sum_{i<j}(s_i p_j -s_j p_i)^2 +1/2\\sum_i \\alpha_i/s_i^2", "classical",
     "H", "1/2*((x1*p2 - x2*p1)^2 + (x1*p3 - x3*p1)^2 + (x2*p3 - x3*p2)^2)"
          " + 1/2*(a1*x1^-2 + a2*x2^-2 + a3*x3^-2)",
     expect="suspect", ideal="sphere+momentum",
     variants=(Variant("squared couplings", "1/2*((x1*p2 - x2*p1)^2 + (x1*p3 - x3*p1)^2 + (x2*p3 - x3*p2)^2)"
                                            " + 1/2*(a1^2*x1^-2 + a2^2*x2^-2 + a3^2*x3^-2)"),))
_add("sec2.classical.T121", "\\{ T_{12} ,T_1\\}_PB=2 T_1 T_3-2 T_1 T_2+1/2(\\alpha_2^2{-}\\alpha_3^2)(T_1+T_2+T_3+ ...)",
     "classical", "pb(T12, T1)",
     "2*T1*T3 - 2*T1*T2 + 1/2*(a2^2 - a3^2)*(T1 + T2 + T3 + 1/4*(2*a1^2 + a2^2 + a3^2))")
_add("sec2.classical.cyclic", "\\{ T_{12} ,T_1\\}_PB+\\{ T_{12} ,T_2\\}_PB+\\{ T_{12} ,T_3\\}_PB=0", "classical",
     "pb(T12, T1) + pb(T12, T2) + pb(T12, T3)", "0")

_T12SQ_CLASSICAL = ("-4*T1*T2*T3 - (T1 + T2 + T3)*(a1^2*T1^{k} + a2^2*T2^{k} + a3^2*T3^{k})"
                    " - 1/4*((a1^4 + 3*a1^2*(a2^2 + a3^2) + a2^2*a3^2)*T1"
                    " + (a2^4 + 3*a2^2*(a1^2 + a3^2) + a1^2*a3^2)*T2"
                    " + (a3^4 + 3*a3^2*(a1^2 + a2^2) + a1^2*a2^2)*T3)"
                    " - 1/8*(a1^2 + a2^2)*(a1^2 + a3^2)*(a2^2 + a3^2)")
_add("sec2.classical.T12sq", "T_{12}^2=- 4T_1 T_2 T_3-\\sum_\\ell^3 T_\\ell \\sum_i^3 \\alpha _i^2 T_i^2 ...",
     "classical", "T12^2", _T12SQ_CLASSICAL.replace("{k}", "2"), expect="suspect",
     variants=(Variant("linear T_i in the double sum", _T12SQ_CLASSICAL.replace("{k}", "1")),))

# ---------------------------------------------------------------------------
# sec2.quantum

_add("sec2.quantum.T13", "\\hat{T}_{12}=-\\hat{T}_{13}=\\hat{T}_{23}", "quantum", "T13", "-T12")
_add("sec2.quantum.T23", "\\hat{T}_{12}=-\\hat{T}_{13}=\\hat{T}_{23}", "quantum", "T23", "T12")
for l in (1, 2, 3):
    _add(f"sec2.quantum.H-T{l}", "[\\hat{H}, \\hat{T}_i]=0", "quantum", f"comm(H, T{l})", "0")
_T121_QUANTUM = ("acomm(T1, T3) - acomm(T1, T2)"
                 " + 1/2*(a2^2 - a3^2)*(T1 + T2 + T3 + 1/4*(2*a1^2 + a2^2 + a3^2 - 3*hbar^2))")
_T121_CLASSICAL = "2*T1*T3 - 2*T1*T2 + 1/2*(a2^2 - a3^2)*(T1 + T2 + T3 + 1/4*(2*a1^2 + a2^2 + a3^2))"
_add("sec2.quantum.T121", "1/(i \\hbar)[\\hat{T}_{12}, \\hat{T}_1 ] =\\{ \\hat{T}_1, \\hat{T}_3\\}-\\{\\hat{T}_1,\\hat{T}_2\\} ...",
     "quantum", "qc(T12, T1)", _T121_QUANTUM)

_T12SQ_QUANTUM = (
    "-4*sym3(T1 + 2/3*hbar^2, T2 + 2/3*hbar^2, T3 + 2/3*hbar^2)"
    " - acomm(T1 + T2 + T3, (a1^2 - 3/8*hbar^2)*T1 + (a2^2 - 3/8*hbar^2)*T2 + (a3^2 - 3/8*hbar^2)*T3)"
    " - 1/4*((a1^4 + 3*a1^2*(a2^2 + a3^2) + a2^2*a3^2 - 1/18*hbar^2*(60*a1^2 + 6*a2^2 + 6*a3^2 + 155*hbar^2))*T1"
    " + (a2^4 + 3*a2^2*(a1^2 + a3^2) + a1^2*a3^2 - 1/18*hbar^2*(60*a2^2 + 6*a1^2 + 6*a3^2 + 155*hbar^2))*T2"
    " + (a3^4 + 3*a3^2*(a1^2 + a2^2) + a1^2*a2^2 - 1/18*hbar^2*(60*a3^2 + 6*a1^2 + 6*a2^2 + 155*hbar^2))*T3)"
    " - 1/8*(a1^2 + a2^2)*(a1^2 + a3^2)*(a2^2 + a3^2)"
    " + hbar^2/48*(a1^2*(a1^2 - 3*hbar) + a2^2*(a2^2 - 3*hbar) + a3^2*(a3^2 - 3*hbar)"
    " + 19*(a1^2*a2^2 + a1^2*a3^2 + a2^2*a3^2)) + 1805/1728*hbar^6")
# repair basis for the quantum square: symmetrized T products, each with a weight budget
# for its coefficient (a_i^2 weighs 2, hbar weighs 1; total weight 6)
_T_PRODUCTS = (("1", 6), ("T1", 4), ("T2", 4), ("T3", 4),
               ("1/2*acomm(T1, T1)", 2), ("1/2*acomm(T2, T2)", 2), ("1/2*acomm(T3, T3)", 2),
               ("1/2*acomm(T1, T2)", 2), ("1/2*acomm(T1, T3)", 2), ("1/2*acomm(T2, T3)", 2),
               ("sym3(T1, T1, T1)", 0), ("sym3(T2, T2, T2)", 0), ("sym3(T3, T3, T3)", 0),
               ("sym3(T1, T1, T2)", 0), ("sym3(T1, T1, T3)", 0), ("sym3(T2, T2, T1)", 0),
               ("sym3(T2, T2, T3)", 0), ("sym3(T3, T3, T1)", 0), ("sym3(T3, T3, T2)", 0),
               ("sym3(T1, T2, T3)", 0))
_add("sec2.quantum.T12sq", "\\hat{T}_{12}^2=-4 \\{ \\hat{T}_{1}{+}2/3\\hbar^2, ... \\}+ ... +1805/1728 \\hbar^6",
     "quantum", "T12^2", _T12SQ_QUANTUM, expect="suspect", basis=_T_PRODUCTS,
     coeff_gens=(("a1^2", 2), ("a2^2", 2), ("a3^2", 2), ("hbar", 1)), ansatz_degree=6,
     note="the triple braces are read as the six-term symmetrizer sym3; the unhatted T_l as the operator")

for l in (1, 2, 3):
    _add(f"sec2.quantum.limit-T{l}", "limit \\hbar \\rightarrow 0", "quantum", f"hbar0(T{l})", f"T{l}",
         rhs_env="classical")
for t in ("T12", "T13", "T23"):
    _add(f"sec2.quantum.limit-{t}", "limit \\hbar \\rightarrow 0", "quantum", f"hbar0({t})", t,
         rhs_env="classical")
_add("sec2.quantum.limit-H", "limit \\hbar \\rightarrow 0", "quantum", "hbar0(H)", "Hsum", rhs_env="classical")
_add("sec2.quantum.limit-T121", "limit \\hbar \\rightarrow 0", "quantum", "hbar0(qc(T12, T1))", "pb(T12, T1)",
     rhs_env="classical")
_add("sec2.quantum.limit-T121-rhs", "limit \\hbar \\rightarrow 0", "quantum", f"hbar0({_T121_QUANTUM})",
     _T121_CLASSICAL, rhs_env="classical")
_add("sec2.quantum.limit-T12sq", "limit \\hbar \\rightarrow 0", "quantum", "hbar0(T12^2)", "T12^2",
     rhs_env="classical")
_add("sec2.quantum.limit-T12sq-rhs", "limit \\hbar \\rightarrow 0", "quantum", f"hbar0({_T12SQ_QUANTUM})",
     _T12SQ_CLASSICAL.replace("{k}", "2"), rhs_env="classical", expect="info",
     note="both printed squares are suspect; their limits are compared for information")

# ---------------------------------------------------------------------------
# sec5: contraction

for a, b in ((3, 4), (3, 7), (3, 8), (4, 7), (4, 8), (7, 8)):
    _add(f"sec5.table.X{a}-X{b}", f"[X'_{a},X'_{b}]=0", "contracted", f"comm(X'{a}, X'{b})", "0")
_add("sec5.T13", "T_{13}=0", "contracted", "T13", "0")
_add("sec5.T12-T13", "T_{12}-T_{13}=0", "contracted", "T12 - T13", "0", expect="suspect",
     variants=(Variant("T12 - T23 reading", "0", lhs="T12 - T23"),),
     note="with T13 = 0 this would force T12 = 0, against the displayed nonzero T12")
_add("sec5.T12-printed", "T_{12}= 1/4 (X'^2_3{+}X'^2_4{+}X'^2_7{+}X'^2_8 {+}X'_3 X'_5 X'_7 ...)", "contracted", "T12",
     "1/4*(X'3^2 + X'4^2 + X'7^2 + X'8^2 + X'3*X'5*X'7 + X'3*X'6*X'8 - X'4*X'5*X'8 + X'4*X'6*X'7)",
     note="X'5 and X'6 are the unscaled X5 and X6")
_add("sec5.T12-lead", "T_{12}= 1/4 (X'^2_3{+}X'^2_4{+}X'^2_7{+}X'^2_8 ...)", "contracted", "T12lead", "T12",
     note="T12lead is the leading R-power part of the su(3) T12")
for lab in ("X1", "X2", "X'3", "X'4", "X5", "X6", "X'7", "X'8"):
    _add(f"sec5.C2-{lab.replace(chr(39), '')}", "C_{2}=1/2 ( X'^2_{3} +X'^2_{4}+ X'^2_{7} +X'^2_{8} )",
         "contracted", f"comm(C2, {lab})", "0")
_add("sec5.C2-T", "C_2= -2 T_1 -2 T_3 -1/2X'^2_1 -1/2 X'^2_2", "contracted", "C2",
     "-2*T1 - 2*T3 - 1/2*X'1^2 - 1/2*X'2^2")
_add("sec5.C2-lead", "C_{2}=1/2 ( X'^2_{3} +X'^2_{4}+ X'^2_{7} +X'^2_{8} )", "contracted", "C2lead", "C2",
     expect="info", note="C2lead is the leading R-power part of the su(3) Casimir")
_add("sec5.C2-T-plain", "C_2= -2 T_1 -2 T_3 -1/2X'^2_1 -1/2 X'^2_2", "contracted", "C2",
     "-2*T1A - 2*T3A - 1/2*X1^2 - 1/2*X2^2", expect="info",
     note="T1A, T3A drop the Cartan terms; shows which integrals the printed identity needs")
_add("sec5.T121-T123", "T_{121}+T_{123}=0", "contracted", "T121 + T123", "0")

CONTRACTED = [
    ("T121-T1", "[T_{121},T_1]=0", "comm(T121, T1)", "0"),
    ("T122-T2", "[T_{122},T_{2}]=2 \\{T_{12},T_{2}\\}", "comm(T122, T2)", "2*acomm(T12, T2)"),
    ("T121-T2", "[T_{121},T_{2}]=- \\{T_{12},T_{1}\\} + \\{T_{12},T_{3}\\}+1/2(X_{1}^{2}-X_{2}^{2})T_{12}",
     "comm(T121, T2)", "-acomm(T12, T1) + acomm(T12, T3) + 1/2*(X1^2 - X2^2)*T12"),
    ("T122-T1", "[T_{122},T_{1}]=- \\{T_{12},T_{1}\\} + \\{T_{12},T_{3}\\}+1/2(X_{1}^{2}-X_{2}^{2})T_{12}",
     "comm(T122, T1)", "-acomm(T12, T1) + acomm(T12, T3) + 1/2*(X1^2 - X2^2)*T12"),
    ("T121-T3", "[T_{121},T_{3}]=0", "comm(T121, T3)", "0"),
    ("T122-T3", "[T_{122},T_{3}]=\\{T_{12},T_{1}\\}- \\{T_{12},T_{3}\\}-1/2(X_{1}^{2}-X_{2}^{2})T_{12}",
     "comm(T122, T3)", "acomm(T12, T1) - acomm(T12, T3) - 1/2*(X1^2 - X2^2)*T12"),
    ("T121-T12", "[T_{121},T_{12}]= \\{T_{121},T_{1}\\} -\\{T_{121},T_{3}\\}-1/2(X_{1}^{2}-X_{2}^{2})T_{121}",
     "comm(T121, T12)", "acomm(T121, T1) - acomm(T121, T3) - 1/2*(X1^2 - X2^2)*T121"),
    ("T122-T12", "[T_{122},T_{12}]= -\\{T_{122},T_{1}\\}-2 \\{T_{121},T_{2}\\}+ \\{T_{122},T_{3}\\}+ ...",
     "comm(T122, T12)", "-acomm(T122, T1) - 2*acomm(T121, T2) + acomm(T122, T3) + 1/2*(X1^2 - X2^2)*T122"),
    ("T121-T122", "[T_{121},T_{122}]=-\\{\\{T_{12},T_1\\},T_1\\} ... -1/4(X_{1}^{4}+X_{2}^{4})T_{12}",
     "comm(T121, T122)",
     "-acomm(acomm(T12, T1), T1) - acomm(acomm(T12, T3), T3) + 2*acomm(T121, T12)"
     " - X2^2*acomm(T12, T1) - X1^2*acomm(T12, T3) - 1/4*(X1^4 + X2^4)*T12"),
]
for key, quote, lhs, rhs in CONTRACTED:
    _add(f"sec5.{key}", quote, "contracted", lhs, rhs)

# ---------------------------------------------------------------------------
# appA: the quartic algebra

QUARTIC = [
    ("T121-T1", "[T_{121},T_1]=2\\{ T_{12},T_1 \\}-X_2^2 T_{12}", "comm(T121, T1)", "2*acomm(T12, T1) - X2^2*T12"),
    ("T122-T2", "[T_{122},T_2]=2\\{ T_{12},T_2 \\}-(X_1^2{+}2X_1X_2{+}X_2^2)T_{12}", "comm(T122, T2)",
     "2*acomm(T12, T2) - (X1^2 + 2*X1*X2 + X2^2)*T12"),
    ("T121-T2", "[T_{121},T_2]=... +(X_1X_2{+}X_2^2)T_{12}", "comm(T121, T2)",
     "-acomm(T12, T1) - acomm(T12, T2) + acomm(T12, T3) + (X1*X2 + X2^2)*T12"),
    ("T122-T1", "[T_{122},T_1]=... +(X_1X_2{+}X_2^2)T_{12}", "comm(T122, T1)",
     "-acomm(T12, T1) - acomm(T12, T2) + acomm(T12, T3) + (X1*X2 + X2^2)*T12"),
    ("T121-T3", "[T_{121},T_3]=-\\{ T_{12},T_1 \\}+\\{ T_{12},T_2 \\}-\\{ T_{12},T_3 \\}-X_1 X_2 T_{12}",
     "comm(T121, T3)", "-acomm(T12, T1) + acomm(T12, T2) - acomm(T12, T3) - X1*X2*T12"),
    ("T122-T3", "[T_{122},T_3]=\\{ T_{12},T_1 \\}-\\{ T_{12},T_2 \\}-\\{ T_{12},T_3 \\} +(X_1^2{+}X_1X_2)T_{12}",
     "comm(T122, T3)", "acomm(T12, T1) - acomm(T12, T2) - acomm(T12, T3) + (X1^2 + X1*X2)*T12"),
    ("T121-T12", "[T_{121},T_{12}]=... {-}(X_1X_2{+}X_2^2)T_{121}-X_2^2 T_{122}", "comm(T121, T12)",
     "2*acomm(T122, T1) + acomm(T121, T1) + acomm(T121, T2) - acomm(T121, T3)"
     " - (X1*X2 + X2^2)*T121 - X2^2*T122"),
    ("T122-T12", "[T_{122},T_{12}]=... {+}(X_1^2{+}X_1X_2{+}X_2^2)T_{121}{+}(X_1X_2{+}X_2^2) T_{122}",
     "comm(T122, T12)",
     "-2*acomm(T121, T2) - acomm(T122, T1) - acomm(T122, T2) + acomm(T122, T3)"
     " + (X1^2 + X1*X2 + X2^2)*T121 + (X1*X2 + X2^2)*T122"),
    ("T121-T122", "[T_{121},T_{122}]= ... {+}2(X_1^2{+}X_1X_2) \\{ T_1, T_{12} \\}{-}2X_1X_2\\{ T_2, T_{12} \\} ...",
     "comm(T121, T122)",
     "-acomm(acomm(T12, T1), T1) - acomm(acomm(T12, T2), T2) - acomm(acomm(T12, T3), T3)"
     " + 2*acomm(acomm(T12, T1), T2) + 2*acomm(acomm(T12, T1), T3) + 2*acomm(acomm(T12, T2), T3)"
     " + 2*(X1^2 + X1*X2)*acomm(T1, T12) - 2*X1*X2*acomm(T2, T12) + 2*(X1*X2 + X2^2)*acomm(T3, T12)"),
]
for key, quote, lhs, rhs in QUARTIC:
    _add(f"appA.{key}", quote, "appendixA", lhs, rhs)
_add("appA.T122-dep", "T_{122}=-T_{121}-T_{123}", "appendixA", "T122", "-T121 - T123")


# ---------------------------------------------------------------------------

GROUPS = ["sec2.classical", "sec2.quantum", "sec3.table", "sec3.casimirs", "sec3.ladder", "sec4.cubic",
          "sec4.ybasis", "sec4.reduction", "sec5", "appA"]


def _group_of(c: Check) -> str:
    for g in sorted(GROUPS, key=len, reverse=True):
        if c.id.startswith(g + "."):
            return g
    raise ValueError(f"check {c.id} is in no group")


BY_ID = {c.id: c for c in CHECKS}
assert len(BY_ID) == len(CHECKS), "duplicate check id"
GROUP_OF = {c.id: _group_of(c) for c in CHECKS}


def checks_in(group: str) -> list:
    if group == "all":
        return list(CHECKS)
    if group not in GROUPS:
        raise KeyError(group)
    return [c for c in CHECKS if GROUP_OF[c.id] == group]
