"""Exact sparse linear solves over the rationals.

Vectors are dicts ``coordinate -> mpq``.  Only what the ideal-membership test
and the typo repair need: find ``x`` with ``sum_j x_j * columns[j] == target``.
"""
from __future__ import annotations

from gmpy2 import mpq

from .scalar import MPQ_ZERO


def solve(columns: list[dict], target: dict):
    """Return a list of mpq coefficients, or None when inconsistent.

    Free variables are set to zero, so the answer is a basic solution.
    """
    n = len(columns)
    # rows indexed by coordinate; augmented column is index n
    rows: dict = {}
    for j, col in enumerate(columns):
        for coord, v in col.items():
            if v:
                rows.setdefault(coord, {})[j] = mpq(v)
    for coord, v in target.items():
        if v:
            rows.setdefault(coord, {})[n] = mpq(v)
    pivots: list = []  # (pivot column, normalized row)
    active = list(rows.values())
    for j in range(n):
        best = None
        for idx, r in enumerate(active):
            if j in r and (best is None or len(r) < len(active[best])):
                best = idx
        if best is None:
            continue
        prow = active.pop(best)
        inv = 1 / prow[j]
        prow = {k: v * inv for k, v in prow.items()}
        nxt = []
        for r in active:
            f = r.get(j)
            if f:
                r = dict(r)
                for k, v in prow.items():
                    nv = r.get(k, MPQ_ZERO) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
            if r:
                nxt.append(r)
        active = nxt
        pivots.append((j, prow))
    for r in active:
        if n in r and len(r) == 1:
            return None
    x = [MPQ_ZERO] * n
    for j, prow in reversed(pivots):
        s = prow.get(n, MPQ_ZERO)
        for k, v in prow.items():
            if k != j and k != n:
                s -= v * x[k]
        x[j] = s
    return x


def residual_ok(columns, target, x) -> bool:
    acc: dict = {}
    for c, col in zip(x, columns):
        if c:
            for k, v in col.items():
                acc[k] = acc.get(k, MPQ_ZERO) + c * v
    acc = {k: v for k, v in acc.items() if v}
    tgt = {k: v for k, v in target.items() if v}
    return acc == tgt
