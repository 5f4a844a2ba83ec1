"""Lie algebras given by structure-constant tables.

Generators are numbered from 1.  ``table[(i, j)]`` for ``i < j`` holds the
bracket ``[X_i, X_j]`` as a tuple of ``(k, Scalar)`` pairs; ``k == 0`` is the
constant (identity) slot.
"""
from __future__ import annotations

import json
from itertools import combinations

from .scalar import Scalar


class LieAlgebraError(ValueError):
    pass


class LieAlgebra:
    """Immutable structure-constant table plus a product cache for U(g)."""

    def __init__(self, name: str, labels, table: dict, check_jacobi: bool = True):
        self.name = name
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        clean = {}
        for (i, j), terms in table.items():
            if not (1 <= i < j <= self.dim):
                raise LieAlgebraError(f"bad bracket index pair ({i},{j}) for dim {self.dim}")
            merged: dict = {}
            for k, c in terms:
                if not (0 <= k <= self.dim):
                    raise LieAlgebraError(f"bad target index {k} in [{i},{j}]")
                merged[k] = merged.get(k, Scalar(0)) + Scalar(c)
            merged = {k: c for k, c in merged.items() if c}
            if merged:
                clean[(i, j)] = tuple(sorted(merged.items()))
        self.table = clean
        self._index = {lab: k + 1 for k, lab in enumerate(self.labels)}
        # product caches used by uea
        self._gen_cache: dict = {}
        self._mul_cache: dict = {}
        self._bracket_raw = None
        if check_jacobi:
            bad = jacobi_defect(self)
            if bad:
                i, j, k, r = bad[0]
                raise LieAlgebraError(f"Jacobi identity fails for ({i},{j},{k}): {r}")

    def bracket(self, i: int, j: int) -> tuple:
        """[X_i, X_j] as a tuple of (k, Scalar)."""
        if i == j:
            return ()
        if i < j:
            return self.table.get((i, j), ())
        return tuple((k, -c) for k, c in self.table.get((j, i), ()))

    def index(self, label: str) -> int:
        return self._index[label]

    def key(self):
        return (self.labels, tuple(sorted((p, tuple((k, str(c)) for k, c in t))
                                          for p, t in self.table.items())))

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and (self is other or self.key() == other.key())

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim}, brackets={len(self.table)})"

    # interchange -----------------------------------------------------

    def to_json(self) -> str:
        brackets = [{"i": i, "j": j, "terms": [{"k": k, "c": str(c)} for k, c in terms]}
                    for (i, j), terms in sorted(self.table.items())]
        return json.dumps({"name": self.name, "dim": self.dim, "labels": list(self.labels),
                           "brackets": brackets}, indent=1)

    @classmethod
    def from_json(cls, text: str, check_jacobi: bool = True) -> "LieAlgebra":
        from .dsl import parse_scalar

        data = json.loads(text)
        labels = data["labels"]
        if data.get("dim", len(labels)) != len(labels):
            raise LieAlgebraError("dim does not match number of labels")
        table = {}
        for entry in data["brackets"]:
            i, j = int(entry["i"]), int(entry["j"])
            if i >= j:
                raise LieAlgebraError(f"bracket entry must have i < j, got ({i},{j})")
            if (i, j) in table:
                raise LieAlgebraError(f"duplicate bracket entry ({i},{j})")
            table[(i, j)] = [(int(t["k"]), parse_scalar(str(t["c"]))) for t in entry["terms"]]
        return cls(data["name"], labels, table, check_jacobi=check_jacobi)


def _lin_bracket(L: LieAlgebra, u: dict, j: int) -> dict:
    """[u, X_j] for u a linear combination {k: Scalar} (k == 0 is central)."""
    out: dict = {}
    for k, c in u.items():
        if k == 0:
            continue
        for m, d in L.bracket(k, j):
            out[m] = out.get(m, Scalar(0)) + c * d
    return {k: c for k, c in out.items() if c}


def jacobi_defect(L: LieAlgebra) -> list:
    """Triples i<j<k whose Jacobi sum is nonzero, with the residual as an EAElement."""
    from .uea import EAElement

    bad = []
    for i, j, k in combinations(range(1, L.dim + 1), 3):
        total: dict = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, d in _lin_bracket(L, dict(L.bracket(a, b)), c).items():
                total[m] = total.get(m, Scalar(0)) + d
        total = {m: d for m, d in total.items() if d}
        if total:
            bad.append((i, j, k, EAElement.linear(L, total)))
    return bad


# The 28 nontrivial su(3) brackets in the Cartan-first basis X1..X8.
SU3_BRACKETS = {
    (1, 2): [],
    (1, 3): [(4, 2)], (1, 4): [(3, -2)], (1, 5): [(6, 1)], (1, 6): [(5, -1)],
    (1, 7): [(8, -1)], (1, 8): [(7, 1)],
    (2, 3): [(4, -1)], (2, 4): [(3, 1)], (2, 5): [(6, 1)], (2, 6): [(5, -1)],
    (2, 7): [(8, 2)], (2, 8): [(7, -2)],
    (3, 4): [(1, 2)], (3, 5): [(7, -1)], (3, 6): [(8, -1)], (3, 7): [(5, 1)], (3, 8): [(6, 1)],
    (4, 5): [(8, 1)], (4, 6): [(7, -1)], (4, 7): [(6, 1)], (4, 8): [(5, -1)],
    (5, 6): [(1, 2), (2, 2)], (5, 7): [(3, -1)], (5, 8): [(4, 1)],
    (6, 7): [(4, -1)], (6, 8): [(3, -1)],
    (7, 8): [(2, 2)],
}

_SU3 = None


def su3() -> LieAlgebra:
    global _SU3
    if _SU3 is None:
        _SU3 = LieAlgebra("su3", [f"X{k}" for k in range(1, 9)], SU3_BRACKETS)
    return _SU3


def abelian(n: int, name: str = "abelian") -> LieAlgebra:
    return LieAlgebra(name, [f"X{k}" for k in range(1, n + 1)], {})
