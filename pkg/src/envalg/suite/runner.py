"""Evaluate registry checks and assemble reports."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from ..dsl import DslError, names_in, parse
from ..envs import get_env
from ..realize import PhaseElement, WeylElement, cartan_specialize, ideal_member, sphere_ideal
from .oracle import MatrixOracle
from .registry import BY_ID, GROUP_OF, GROUPS, checks_in
from .repair import repair as repair_check

PASS, FAIL, UNDECIDED, INFO = "PASS", "FAIL", "UNDECIDED", "INFORMATIONAL"
STATUSES = (PASS, FAIL, UNDECIDED, INFO)


class UnknownGroup(KeyError):
    def __init__(self, name):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"unknown group {self.name!r}; valid groups: all, " + ", ".join(GROUPS)


@dataclass
class CheckResult:
    id: str
    group: str
    status: str
    residual: str
    quote: str
    engine: str
    expect: str
    millis: float | None = None
    notes: list = field(default_factory=list)
    repair: list = field(default_factory=list)
    oracle: dict | None = None

    def to_dict(self):
        return {"id": self.id, "group": self.group, "status": self.status, "residual": self.residual,
                "anchor": {"section": self.group, "quote": self.quote}, "engine": self.engine,
                "expect": self.expect, "millis": self.millis, "notes": self.notes,
                "repair": [c.to_dict() for c in self.repair], "oracle": self.oracle}


def _ideal(name, cls):
    if name == "sphere":
        return sphere_ideal(cls, momentum=False)
    if name == "sphere+momentum":
        return sphere_ideal(cls, momentum=True)
    raise ValueError(f"unknown ideal {name!r}")


def residual_fn(check):
    def residual_of(lhs, rhs):
        d = lhs if rhs is None else lhs - rhs
        if check.transform == "at_cartan":
            d = cartan_specialize(d)
        return d
    return residual_of


def zero_test(check, ideal_override=None):
    """residual -> (is zero, membership or None)."""
    ideal_name = check.ideal if ideal_override is None else (None if ideal_override == "none" else ideal_override)

    def test(d):
        if not d:
            return True, None
        if not ideal_name or not isinstance(d, (PhaseElement, WeylElement)):
            return False, None
        m = ideal_member(d, _ideal(ideal_name, type(d)), d.cleared_degree() + 2)
        return m.is_member, m
    return test, ideal_name


def estimated_cost(check) -> int:
    """Product of operand term counts, summed over both sides."""
    env = get_env(check.env)
    total = 0
    for text, e in ((check.lhs, env), (check.rhs, get_env(check.rhs_env) if check.rhs_env else env)):
        cost = 1
        for n in names_in(parse(text)):
            v = e.get(n)
            if v is not None and hasattr(v, "nterms"):
                cost *= max(v.nterms(), 1)
        total += cost
    return total


def evaluate_check(check, do_repair=True, ideal_override=None):
    env = get_env(check.env)
    renv = get_env(check.rhs_env) if check.rhs_env else env
    leng, reng = env.engine(), renv.engine()
    lhs = leng.run(parse(check.lhs))
    rhs = reng.run(parse(check.rhs))
    residual_of = residual_fn(check)
    d = residual_of(lhs, rhs)
    test, ideal_name = zero_test(check, ideal_override)
    ok, membership = test(d)
    notes = sorted(leng.notes | reng.notes)
    if check.note:
        notes.insert(0, check.note)
    if check.expect == "info":
        status = INFO
    elif ok:
        status = PASS
    elif membership is not None and membership.status == "undecided":
        status = UNDECIDED
    else:
        status = FAIL
    if membership is not None:
        notes.append(f"modulo the {ideal_name} ideal at degree bound {membership.bound}: "
                     + membership.status.replace("_", " "))
    candidates = []
    if status == FAIL and do_repair and not check.rhs_env:
        candidates = repair_check(check, env, residual_of, lambda r: test(r)[0])
    return status, d, notes, candidates


def run_check(check, *, do_repair=True, oracle: MatrixOracle | None = None, timing=False,
              ideal_override=None) -> CheckResult:
    t0 = time.perf_counter()
    env = get_env(check.env)
    status, d, notes, candidates = evaluate_check(check, do_repair, ideal_override)
    res = CheckResult(check.id, GROUP_OF[check.id], status, str(d), check.quote, env.kind, check.expect,
                      notes=notes, repair=candidates)
    if oracle is not None and oracle.applies(check):
        res.oracle = oracle.confirm(check, status).to_dict()
    if timing:
        res.millis = round((time.perf_counter() - t0) * 1000, 1)
    return res


@dataclass
class SuiteReport:
    groups: list
    results: list

    def counts(self) -> dict:
        out = {}
        for r in self.results:
            c = out.setdefault(r.group, {s: 0 for s in STATUSES})
            c[r.status] += 1
        return dict(sorted(out.items()))

    def failed(self) -> bool:
        return any(r.status == FAIL for r in self.results)

    def exit_code(self) -> int:
        return 1 if self.failed() else 0

    def to_json(self) -> str:
        return json.dumps({"groups": self.groups, "counts": self.counts(),
                           "checks": [r.to_dict() for r in self.results]}, indent=2)

    def to_text(self, max_residual=400) -> str:
        lines = []
        for r in self.results:
            lines.append(f"{r.status:<13} {r.id}" + (f"  [{r.millis} ms]" if r.millis is not None else ""))
            if r.status != PASS:
                res = r.residual
                if len(res) > max_residual:
                    res = res[:max_residual] + f" ... ({len(r.residual)} chars)"
                lines.append(f"    residual: {res}")
            for n in r.notes:
                lines.append(f"    note: {n}")
            for c in r.repair:
                lines.append(f"    repair ({c.kind}): {c.description}")
            if r.oracle and r.oracle["verdict"] not in ("confirmed", "zero"):
                lines.append(f"    oracle: {r.oracle['verdict']}")
        lines.append("")
        for g, c in self.counts().items():
            parts = ", ".join(f"{c[s]} {s}" for s in STATUSES if c[s])
            lines.append(f"{g}: {parts}")
        total = {s: sum(c[s] for c in self.counts().values()) for s in STATUSES}
        lines.append("total: " + ", ".join(f"{total[s]} {s}" for s in STATUSES if total[s]))
        return "\n".join(lines) + "\n"


def select(groups) -> list:
    if isinstance(groups, str):
        groups = [groups]
    out, seen = [], set()
    for g in groups:
        try:
            chosen = checks_in(g)
        except KeyError:
            raise UnknownGroup(g) from None
        for c in chosen:
            if c.id not in seen:
                seen.add(c.id)
                out.append(c)
    return out


def run_suite(groups="all", *, do_repair=True, oracle=True, timing=False, seed=0, ids=None,
              ideal_override=None) -> SuiteReport:
    """Evaluate the selected groups (cheapest checks first); results sorted by id."""
    checks = [BY_ID[i] for i in ids] if ids else select(groups)
    orc = MatrixOracle(seed) if oracle else None
    results = []
    for c in sorted(checks, key=lambda c: (estimated_cost(c), c.id)):
        results.append(run_check(c, do_repair=do_repair, oracle=orc, timing=timing,
                                 ideal_override=ideal_override))
    results.sort(key=lambda r: r.id)
    return SuiteReport(list(groups) if not isinstance(groups, str) else [groups], results)


__all__ = ["run_suite", "run_check", "evaluate_check", "SuiteReport", "CheckResult", "UnknownGroup",
           "DslError", "PASS", "FAIL", "UNDECIDED", "INFO"]
