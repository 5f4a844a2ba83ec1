import dataclasses
import json

import pytest

from envalg.dsl import parse
from envalg.envs import get_env
from envalg.lie import LieAlgebra, su3
from envalg.rep import su3_fundamental
from envalg.suite import (BY_ID, CHECKS, FAIL, GROUPS, MUTATIONS, PASS, MatrixOracle, RepairError, UnknownGroup,
                          checks_in, evaluate_check, repair, run_suite)
from envalg.suite.coverage import MANIFEST, covered_ids, dangling
from envalg.suite.runner import residual_fn, zero_test
from envalg.uea import RepresentationError, check_rep


def repair_for(cid, stages=("variants", "signs", "single", "ansatz")):
    c = BY_ID[cid]
    test, _ = zero_test(c)
    return repair(c, get_env(c.env), residual_fn(c), lambda r: test(r)[0], stages)


def holds(check, lhs, rhs):
    env = get_env(check.env)
    eng = env.engine()
    d = residual_fn(check)(eng.run(parse(lhs)), eng.run(parse(rhs)))
    test, _ = zero_test(check)
    return test(d)[0]


def test_ids_unique_and_grouped():
    assert len(BY_ID) == len(CHECKS)
    assert sum(len(checks_in(g)) for g in GROUPS) == len(CHECKS)
    with pytest.raises(KeyError):
        checks_in("sec9")


def test_repair_refuses_passing_check():
    with pytest.raises(RepairError):
        repair_for("sec3.table.X1-X3")


def test_sign_repair_for_raising_operator():
    cands = repair_for("sec3.ladder.Cp")
    assert [c.kind for c in cands] == ["sign"]
    assert cands[0].rhs == "(H + 2*C - 1)*Cp"


def test_reduction_coefficient_is_not_one_twelfth():
    c = BY_ID["sec4.reduction.T121-alpha"]
    for v in c.variants:
        assert not holds(c, c.lhs, v.rhs), v.label
    cands = repair_for("sec4.reduction.T121-alpha")
    assert cands and cands[0].kind == "ansatz"


def test_alg1_single_coefficient():
    cands = repair_for("sec4.reduction.alg1")
    assert len(cands) == 1 and cands[0].kind == "coefficient"


def test_every_reported_repair_verifies(full_report):
    n = 0
    for r in full_report.results:
        for cand in r.repair:
            assert holds(BY_ID[r.id], cand.lhs, cand.rhs), (r.id, cand.description)
            n += 1
    assert n >= 10


def test_oracle_never_contradicts(full_report):
    verdicts = {r.id: r.oracle["verdict"] for r in full_report.results if r.oracle}
    assert verdicts
    assert "MISMATCH" not in verdicts.values()
    assert "inconclusive" not in verdicts.values()


@pytest.mark.parametrize("cid, rhs", MUTATIONS, ids=[m[0] for m in MUTATIONS])
def test_mutation_detected_by_both_engines(cid, rhs):
    mutant = dataclasses.replace(BY_ID[cid], rhs=rhs, expect="pass", variants=())
    status, d, _, _ = evaluate_check(mutant, do_repair=False)
    assert status == FAIL and d
    assert MatrixOracle(seed=0).confirm(mutant, status).verdict == "confirmed"


def test_corrupted_table_rejected_by_rep_check():
    L = su3()
    table = dict(L.table)
    table[(1, 3)] = tuple((k, -c) for k, c in table[(1, 3)])
    bad = LieAlgebra("bad", L.labels, table, check_jacobi=False)
    with pytest.raises(RepresentationError):
        check_rep(bad, su3_fundamental())


def test_manifest_complete():
    ids = set(BY_ID)
    assert dangling(ids, lambda env, name: name in get_env(env)) == []
    assert covered_ids() == ids
    assert len(MANIFEST) >= 40


def test_report_deterministic():
    a = run_suite(["sec3.ladder", "sec5"], seed=3)
    b = run_suite(["sec5", "sec3.ladder"], seed=3)
    c = run_suite(["sec3.ladder", "sec5"], seed=3)
    assert a.to_json() == c.to_json()
    assert json.loads(a.to_json())["checks"] == json.loads(b.to_json())["checks"]
    assert all(r.millis is None for r in a.results)


def test_unknown_group():
    with pytest.raises(UnknownGroup) as info:
        run_suite(["bogus"])
    assert "sec3.table" in str(info.value) and "all" in str(info.value)


def test_text_report_truncates():
    rep = run_suite("appA", oracle=False)
    text = rep.to_text(max_residual=50)
    assert "chars)" in text
    assert text.rstrip().endswith("INFORMATIONAL") or "total:" in text
    assert rep.exit_code() == 1


def test_ideal_override_changes_only_phase_space_checks():
    c = BY_ID["sec2.classical.T121"]
    assert evaluate_check(c, do_repair=False)[0] == PASS
    assert evaluate_check(BY_ID["sec3.table.X1-X3"], do_repair=False, ideal_override="none")[0] == PASS
