"""Independent confirmation of enveloping-algebra checks by matrix evaluation.

The DSL text of a check, and of every environment definition it uses, is
evaluated directly as exact matrices.  Nothing passes through PBW ordering,
so agreement with the symbolic verdict is a genuine cross-check.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..contract import SMORODINSKY, contract_algebra
from ..dsl import parse
from ..engines import CONTRACTED, UEA
from ..envs import get_env
from ..lie import su3
from ..rep import adjoint, contracted_fundamental, random_point, su3_fundamental, tensor
from ..uea import check_rep

POINTS = 5


@dataclass
class OracleResult:
    verdict: str  # confirmed | inconclusive | MISMATCH | zero | nonzero | skipped
    samples: list = field(default_factory=list)  # (rep name, point index, is zero)

    def to_dict(self):
        return {"verdict": self.verdict, "nonzero_samples": sum(1 for s in self.samples if not s[2]),
                "samples": len(self.samples)}


def representations(env_name: str, large: bool = False) -> dict:
    """name -> rep for the algebra behind an environment.

    ``large`` gives the 24-dimensional fundamental (x) adjoint, used only when
    a failing residual vanishes in the small representations.
    """
    if env_name == "contracted":
        L = contract_algebra(su3(), SMORODINSKY)
        fund = contracted_fundamental()
    else:
        L = su3()
        fund = su3_fundamental()
    if large:
        reps = {"fundamental x adjoint": tensor(fund, adjoint(L))}
    else:
        reps = {"fundamental": fund, "adjoint": adjoint(L)}
    for rep in reps.values():
        check_rep(L, rep)
    return reps


class MatrixOracle:
    """Caches one matrix engine per (environment, representation, point)."""

    def __init__(self, seed: int = 0, points: int = POINTS):
        rng = random.Random(seed)
        self.points = [random_point(rng) for _ in range(points)]
        self._engines: dict = {}
        self._reps: dict = {}

    def engines(self, env_name, large=False):
        key0 = (env_name, large)
        if key0 not in self._reps:
            self._reps[key0] = representations(env_name, large)
        env = get_env(env_name)
        points = self.points[:1] if large else self.points
        for rname, rep in self._reps[key0].items():
            for k, pt in enumerate(points):
                key = (env_name, rname, k)
                if key not in self._engines:
                    self._engines[key] = env.matrix_engine(rep, pt)
                yield rname, k, self._engines[key]

    def residual_zero(self, env_name, lhs: str, rhs: str, large=False) -> list:
        ln, rn = parse(lhs), parse(rhs)
        out = []
        for rname, k, eng in self.engines(env_name, large):
            d = eng.run(ln) - eng.run(rn)
            out.append((rname, k, d.is_zero()))
        return out

    def applies(self, check) -> bool:
        if check.transform or check.rhs_env:
            return False
        return get_env(check.env).kind in (UEA, CONTRACTED)

    def confirm(self, check, status: str) -> OracleResult:
        if not self.applies(check):
            return OracleResult("skipped")
        samples = self.residual_zero(check.env, check.lhs, check.rhs)
        all_zero = all(s[2] for s in samples)
        if all_zero and status == "FAIL":
            samples += self.residual_zero(check.env, check.lhs, check.rhs, large=True)
            all_zero = all(s[2] for s in samples)
        if status == "PASS":
            verdict = "confirmed" if all_zero else "MISMATCH"
        elif status == "FAIL":
            verdict = "inconclusive" if all_zero else "confirmed"
        else:
            verdict = "zero" if all_zero else "nonzero"
        return OracleResult(verdict, samples)


# corrupted identities: (base check id, replacement rhs); each must fail in both engines
MUTATIONS = [
    ("sec3.table.X3-X4", "3*X1"),
    ("sec3.table.X5-X6", "2*X1 - 2*X2"),
    ("sec3.table.X7-X8", "2*X1"),
    ("sec3.casimirs.C2-T", "2*(T1 + T2 + T3) + 1/4*(X1^2 + X1*X2 + X2^2)"),
    ("sec3.casimirs.C3-X3", "X1"),
    ("sec3.ladder.Ap", "(H - 2*A - 1)*Ap"),
    ("sec4.cubic.T121-T1", "3*acomm(T12, T1)"),
    ("sec4.cubic.T12-sym3",
     "1/4*sym3(X8, X6, X3) + 1/4*sym3(X8, X5, X4) + 1/4*sym3(X7, X6, X4) + 1/4*sym3(X7, X5, X3)"),
    ("sec4.cubic.T122-dep", "-T121 + T123"),
    ("sec4.ybasis.T12-Y", "-Y1 - Y2"),
    ("sec4.reduction.T122-C3",
     "acomm(T1, T2) - acomm(T2, T3) + 1/4*(X1 + X2)*C3 - 1/12*(X1^2 - X2^2)*C2"
     " - 1/216*(X1^2 - X2^2)*(36 + (X1 + X2)^2)"),
    ("appA.T121-T1", "2*acomm(T12, T1) - X1^2*T12"),
    ("sec5.T122-T2", "2*acomm(T12, T1)"),
    ("sec5.C2-T", "-2*T1 - 2*T3 - 1/2*X'1^2 + 1/2*X'2^2"),
]
