"""Acceptance criteria 1-12, all at exact-zero tolerance.

Each criterion prints one line ``criterion N  PASS|FAIL  (seconds)  detail``.
Run under pytest, or directly with ``python tests/test_acceptance.py`` for
just the summary lines.
"""
import dataclasses
import random
import sys
import time
from itertools import combinations

import pytest

from conftest import pbw_words, random_phase, registry_round_trip_failures
from envalg.contract import SMORODINSKY, contract_algebra
from envalg.engines import POISSON
from envalg.lie import jacobi_defect, su3
from envalg.realize import poisson_bracket
from envalg.suite import BY_ID, MUTATIONS, PASS, FAIL, MatrixOracle, checks_in, evaluate_check, run_suite
from envalg.uea import mul, normal_form, random_element, word_element

SEED = 20240611


def run_ids(ids, **kw):
    t0 = time.perf_counter()
    rep = run_suite(ids=list(ids), oracle=False, **kw)
    return {r.id: r for r in rep.results}, time.perf_counter() - t0


def all_pass(results, ids):
    bad = [i for i in ids if results[i].status != PASS]
    return not bad, bad


def repaired(r, kinds=None):
    """FAIL with an exact residual and at least one verified candidate (of the given kinds)."""
    if r.status != FAIL or not r.residual or r.residual == "0" or not r.repair:
        return False
    return kinds is None or all(c.kind in kinds for c in r.repair)


def emit(n, ok, secs, limit, detail):
    ok = ok and secs < limit
    line = f"criterion {n:>2}  {'PASS' if ok else 'FAIL'}  ({secs:.2f}s, limit {limit:g}s)  {detail}"
    return ok, line


# -- criteria ------------------------------------------------------------------

def criterion_1():
    t0 = time.perf_counter()
    L = su3()
    defect = jacobi_defect(L)
    triples = len(list(combinations(range(1, L.dim + 1), 3)))
    return emit(1, not defect and triples == 56, time.perf_counter() - t0, 1,
                f"{triples} triples, {len(defect)} defects")


def criterion_2():
    ids = [f"sec3.casimirs.C{n}-X{k}" for n in (2, 3) for k in range(1, 9)]
    res, secs = run_ids(ids)
    ok, bad = all_pass(res, ids)
    return emit(2, ok, secs, 5, f"{len(ids) - len(bad)}/{len(ids)} commutators vanish" + (f"; failing {bad}" if bad else ""))


def criterion_3():
    ids = ["sec4.cubic.T13", "sec4.cubic.T23", "sec4.cubic.T122-dep"]
    ids += [f"sec4.cubic.commutant-{t}-{g}" for t in ("T12", "T121", "T122") for g in ("X1", "X2")]
    res, secs = run_ids(ids)
    ok, bad = all_pass(res, ids)
    return emit(3, ok, secs, 10, f"{len(ids) - len(bad)}/{len(ids)} dependency and commutant identities"
                + (f"; failing {bad}" if bad else ""))


CUBIC_NINE = ["T121-T1", "T121-T2", "T121-T3", "T121-T12", "T122-T1", "T122-T2", "T122-T3", "T122-T12",
              "T121-T122"]


def criterion_4():
    ids = [f"sec4.cubic.{c}" for c in CUBIC_NINE]
    res, secs = run_ids(ids)
    ok, bad = all_pass(res, ids)
    return emit(4, ok, secs, 120, f"{len(ids) - len(bad)}/9 cubic relations" + (f"; failing {bad}" if bad else ""))


def criterion_5():
    ids = [c.id for c in checks_in("appA")]
    res, secs = run_ids(ids)
    ok, bad = all_pass(res, ids)
    detail = f"{len(ids) - len(bad)}/{len(ids)} quartic relations"
    if bad:
        detail += "; failing " + ", ".join(f"{i} (repair: {res[i].repair[0].kind})" if res[i].repair else i
                                           for i in bad)
    return emit(5, ok, secs, 120, detail)


def criterion_6():
    exact = ["sec4.reduction.alg2", "sec4.reduction.K-T1", "sec4.reduction.K-T2", "sec4.reduction.K-T12",
             "sec4.reduction.K-forms"]
    printed = ["sec4.reduction.alg1"]
    res, secs = run_ids(exact + printed)
    ok, bad = all_pass(res, exact)
    notes = []
    for i in printed:
        r = res[i]
        if r.status == PASS:
            continue
        single = repaired(r, {"coefficient"}) and len(r.repair) == 1
        ok = ok and single
        notes.append(f"{i} FAIL as printed, single-coefficient repair: {r.repair[0].description if single else 'none'}")
    detail = f"{len(exact) - len(bad)}/{len(exact)} exact" + (f"; failing {bad}" if bad else "")
    return emit(6, ok, secs, 600, "; ".join([detail] + notes))


def criterion_7():
    exact = [f"sec3.ladder.{n}" for n in ("Ap", "Am", "Bp", "Bm", "Ap-T3", "Am-T3", "Bp-T2", "Bm-T2",
                                           "Cp-T1", "Cm-T1")]
    printed = ["sec3.ladder.Cp", "sec3.ladder.Cm"]
    res, secs = run_ids(exact + printed)
    ok, bad = all_pass(res, exact)
    notes = []
    for i in printed:
        r = res[i]
        if r.status == PASS:
            notes.append(f"{i} holds as printed")
        elif repaired(r, {"sign"}):
            notes.append(f"{i} holds with {r.repair[0].rhs}")
        else:
            ok = False
            notes.append(f"{i} FAIL without a sign repair")
    return emit(7, ok, secs, 30, "; ".join([f"{len(exact) - len(bad)}/{len(exact)} exact"] + notes))


def criterion_8():
    exact = [f"sec2.classical.{n}" for n in ("H-T1", "H-T2", "H-T3", "T121", "cyclic")]
    printed = ["sec2.classical.T12sq"]
    res, secs = run_ids(exact + printed)
    ok, bad = all_pass(res, exact)
    ok = ok and all(res[i].engine == POISSON for i in exact + printed)
    r = res[printed[0]]
    if r.status != PASS:
        ok = ok and repaired(r)
        note = f"T12^2 FAIL as printed, holds as: {r.repair[0].description}" if r.repair else "T12^2 unrepaired"
    else:
        note = "T12^2 holds as printed"
    return emit(8, ok, secs, 60, f"{len(exact) - len(bad)}/{len(exact)} exact; {note}")


def criterion_9():
    group = checks_in("sec2.quantum")
    exact = ["sec2.quantum.T13", "sec2.quantum.T23", "sec2.quantum.T121"]
    limits = [c.id for c in group if c.id.startswith("sec2.quantum.limit-") and c.expect == "pass"]
    printed = ["sec2.quantum.T12sq"]
    res, secs = run_ids(exact + limits + printed)
    ok, bad = all_pass(res, exact + limits)
    r = res[printed[0]]
    if r.status != PASS:
        ok = ok and repaired(r)
        note = f"T12^2 FAIL as printed, {len(r.repair)} verified {r.repair[0].kind} repair" if r.repair else "T12^2 unrepaired"
    else:
        note = "T12^2 holds as printed"
    return emit(9, ok, secs, 120, f"{len(exact) - len(bad)}/{len(exact)} exact, {len(limits)} hbar->0 limits; {note}"
                + (f"; failing {bad}" if bad else ""))


VANISHED = {(3, 4), (3, 7), (3, 8), (4, 7), (4, 8), (7, 8)}


def criterion_10():
    t0 = time.perf_counter()
    L = su3()
    C = contract_algebra(L, SMORODINSKY)
    gone = {(i, j) for i in range(1, 9) for j in range(i + 1, 9) if L.bracket(i, j) and not C.bracket(i, j)}
    table = [f"sec5.table.X{i}-X{j}" for i, j in sorted(VANISHED)]
    cubic = [c.id for c in checks_in("sec5") if c.id.startswith(("sec5.T121-", "sec5.T122-"))]
    exact = table + ["sec5.C2-T", "sec5.T13", "sec5.T12-printed"] + cubic
    res, _ = run_ids(exact + ["sec5.T12-T13"])
    secs = time.perf_counter() - t0
    ok, bad = all_pass(res, exact)
    ok = ok and gone == VANISHED and len(cubic) >= 9
    tension = res["sec5.T12-T13"]
    resolved = tension.status == PASS or repaired(tension)
    ok = ok and resolved
    note = (f"T12-T13 tension: {tension.repair[0].description}" if tension.repair
            else f"T12-T13 {tension.status}")
    return emit(10, ok, secs, 60, f"{len(gone)} brackets vanish, {len(exact) - len(bad)}/{len(exact)} exact "
                f"({len(cubic)} cubic); {note}")


def criterion_11():
    t0 = time.perf_counter()
    orc = MatrixOracle(seed=0, points=5)
    statuses, _ = run_ids([c.id for c in checks_in("all") if orc.applies(c)], do_repair=False)
    passes = [i for i, r in statuses.items() if r.status == PASS]
    unconfirmed = []
    for i in passes:
        c = BY_ID[i]
        samples = [s for s in orc.residual_zero(c.env, c.lhs, c.rhs) if s[0] == "fundamental"]
        if len(samples) != 5 or not all(s[2] for s in samples):
            unconfirmed.append(i)
    missed = []
    for cid, rhs in MUTATIONS:
        mutant = dataclasses.replace(BY_ID[cid], rhs=rhs, expect="pass", variants=())
        status = evaluate_check(mutant, do_repair=False)[0]
        if status != FAIL or orc.confirm(mutant, status).verdict != "confirmed":
            missed.append(cid)
    secs = time.perf_counter() - t0
    ok = not unconfirmed and not missed and len(MUTATIONS) >= 10
    return emit(11, ok, secs, 60, f"{len(passes) - len(unconfirmed)}/{len(passes)} UEA passes confirmed in the "
                f"fundamental at 5 points; {len(MUTATIONS) - len(missed)}/{len(MUTATIONS)} mutations caught"
                + (f"; unconfirmed {unconfirmed}" if unconfirmed else "") + (f"; missed {missed}" if missed else ""))


def criterion_12():
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    L = su3()
    bad = []
    for _ in range(500):
        word = [rng.randint(1, 8) for _ in range(rng.randint(0, 6))]
        left = normal_form([(word, 1)], L, "left")
        if (normal_form([(word, 1)], L, "right") != left
                or normal_form([(word, 1)], L, "random", rng) != left
                or word_element(L, word) != left
                or normal_form(pbw_words(left), L) != left):
            bad.append(("pbw", word))
    for _ in range(200):
        a, b, c = (random_element(L, rng) for _ in range(3))
        if mul(mul(a, b), c) != mul(a, mul(b, c)):
            bad.append(("assoc", str(a), str(b), str(c)))
    pb = poisson_bracket
    for _ in range(200):
        f, g, h = (random_phase(rng, max_terms=2) for _ in range(3))
        if pb(f, g) != -pb(g, f) or pb(f, g * h) != pb(f, g) * h + g * pb(f, h):
            bad.append(("leibniz", str(f), str(g), str(h)))
        if pb(f, pb(g, h)) + pb(g, pb(h, f)) + pb(h, pb(f, g)):
            bad.append(("jacobi", str(f), str(g), str(h)))
    rt = registry_round_trip_failures()
    secs = time.perf_counter() - t0
    return emit(12, not bad and not rt, secs, 60,
                f"500 words, 200 triples, 200 Poisson triples, registry round trip; "
                f"{len(bad)} property failures, {len(rt)} round-trip failures")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{n}" for n in range(1, 13)])
def test_criterion(criterion, capsys):
    ok, line = criterion()
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = []
    for c in CRITERIA:
        ok, line = c()
        print(line)
        results.append(ok)
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
