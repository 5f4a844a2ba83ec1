"""Universal enveloping algebra arithmetic in the PBW basis.

Elements are stored flat: ``(monomial, param_key) -> mpq`` where a monomial is
an exponent tuple over the generators in their table order (X1 < X2 < ...),
and ``param_key`` is a :mod:`envalg.scalar` key.  Parameters are central, so
this is the same thing as a map from PBW monomials to Scalars.
"""
from __future__ import annotations

import random
import sys
from itertools import permutations

from gmpy2 import mpq

from .lie import LieAlgebra, su3
from .scalar import (MPQ_ZERO, ONE_KEY, Scalar, key_mul, rational_text, render_terms,
                     monomial_text, to_mpq)
from . import rep as _rep
from .rep import GMat

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))


class AlgebraMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# monomial product engine (memoized per algebra)


def _raw_bracket(L: LieAlgebra) -> dict:
    """(a, b) 0-based, a > b -> raw terms of [X_a, X_b] keyed (unit monomial, pk)."""
    if L._bracket_raw is None:
        n = L.dim
        zero = (0,) * n
        out = {}
        for a in range(n):
            for b in range(a):
                terms: dict = {}
                for k, c in L.bracket(a + 1, b + 1):
                    m = zero if k == 0 else tuple(1 if t == k - 1 else 0 for t in range(n))
                    for pk, v in c._t.items():
                        terms[(m, pk)] = terms.get((m, pk), MPQ_ZERO) + v
                out[(a, b)] = {k: v for k, v in terms.items() if v}
        L._bracket_raw = out
    return L._bracket_raw


def _last(m) -> int:
    for t in range(len(m) - 1, -1, -1):
        if m[t]:
            return t
    return -1


def _first(m) -> int:
    for t, e in enumerate(m):
        if e:
            return t
    return len(m)


def _bump(m, k, d=1):
    return m[:k] + (m[k] + d,) + m[k + 1:]


def _acc(out: dict, key, v):
    nv = out.get(key, MPQ_ZERO) + v
    if nv:
        out[key] = nv
    else:
        out.pop(key, None)


def _scale_into(out: dict, terms: dict, pk, c):
    """out += c * pk * terms, where terms is raw (mono, pk2) -> mpq."""
    if pk == ONE_KEY:
        for (m, pk2), v in terms.items():
            _acc(out, (m, pk2), c * v)
    else:
        for (m, pk2), v in terms.items():
            k, s = key_mul(pk, pk2)
            _acc(out, (m, k), c * v if s > 0 else -c * v)


def mono_times_gen(L: LieAlgebra, m: tuple, k: int) -> dict:
    """PBW normal form of (PBW monomial m) * X_{k+1}."""
    key = (m, k)
    cache = L._gen_cache
    hit = cache.get(key)
    if hit is not None:
        return hit
    j = _last(m)
    if j <= k:
        res = {(_bump(m, k), ONE_KEY): mpq(1)}
    else:
        # m = m' X_j and X_j X_k = X_k X_j + [X_j, X_k]
        mp = _bump(m, j, -1)
        res = {}
        for (mm, pk), c in mono_times_gen(L, mp, k).items():
            _scale_into(res, mono_times_gen(L, mm, j), pk, c)
        for (u, pk), c in _raw_bracket(L)[(j, k)].items():
            t = _last(u)
            if t < 0:
                _acc(res, (mp, pk), c)
            else:
                _scale_into(res, mono_times_gen(L, mp, t), pk, c)
    cache[key] = res
    return res


def mono_mul(L: LieAlgebra, a: tuple, b: tuple) -> dict:
    """PBW normal form of the product of two PBW monomials."""
    k = _first(b)
    if k == len(b):
        return {(a, ONE_KEY): mpq(1)}
    if _last(a) <= k:
        return {(tuple(x + y for x, y in zip(a, b)), ONE_KEY): mpq(1)}
    key = (a, b)
    cache = L._mul_cache
    hit = cache.get(key)
    if hit is not None:
        return hit
    rest = _bump(b, k, -1)
    res: dict = {}
    for (mm, pk), c in mono_times_gen(L, a, k).items():
        _scale_into(res, mono_mul(L, mm, rest), pk, c)
    cache[key] = res
    return res


# ---------------------------------------------------------------------------


class EAElement:
    """Immutable element of U(g) in PBW normal form."""

    __slots__ = ("algebra", "_t", "_hash")

    def __init__(self, algebra: LieAlgebra, raw: dict | None = None):
        self.algebra = algebra
        self._t = {k: v for k, v in (raw or {}).items() if v}
        self._hash = None

    @classmethod
    def _wrap(cls, algebra, raw):
        e = cls.__new__(cls)
        e.algebra = algebra
        e._t = raw
        e._hash = None
        return e

    # constructors ----------------------------------------------------

    @classmethod
    def scalar(cls, algebra, c) -> "EAElement":
        c = Scalar(c)
        zero = (0,) * algebra.dim
        return cls._wrap(algebra, {(zero, pk): v for pk, v in c._t.items()})

    @classmethod
    def gen(cls, algebra, k: int) -> "EAElement":
        """Generator X_k (1-based)."""
        if not 1 <= k <= algebra.dim:
            raise IndexError(f"generator index {k} out of range 1..{algebra.dim}")
        m = tuple(1 if t == k - 1 else 0 for t in range(algebra.dim))
        return cls._wrap(algebra, {(m, ONE_KEY): mpq(1)})

    @classmethod
    def linear(cls, algebra, comb: dict) -> "EAElement":
        """From {k: Scalar}; k == 0 is the identity."""
        out = cls.scalar(algebra, 0)
        for k, c in comb.items():
            base = cls.scalar(algebra, 1) if k == 0 else cls.gen(algebra, k)
            out = out + base * Scalar(c)
        return out

    @classmethod
    def from_terms(cls, algebra, terms: dict) -> "EAElement":
        """From {exponent tuple: Scalar}."""
        raw: dict = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != algebra.dim or any(e < 0 for e in m):
                raise ValueError(f"bad monomial {m}")
            for pk, v in Scalar(c)._t.items():
                _acc(raw, (m, pk), v)
        return cls._wrap(algebra, raw)

    # views -----------------------------------------------------------

    @property
    def terms(self) -> dict:
        """PBW exponent tuple -> Scalar."""
        grouped: dict = {}
        for (m, pk), v in self._t.items():
            grouped.setdefault(m, {})[pk] = v
        return {m: Scalar._raw(t) for m, t in grouped.items()}

    def degree(self) -> int:
        return max((sum(m) for m, _ in self._t), default=-1)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def nterms(self) -> int:
        return len({m for m, _ in self._t})

    def constant_term(self) -> Scalar:
        zero = (0,) * self.algebra.dim
        return Scalar._raw({pk: v for (m, pk), v in self._t.items() if m == zero})

    # arithmetic ------------------------------------------------------

    def _check(self, other) -> "EAElement":
        if isinstance(other, EAElement):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise AlgebraMismatch(f"mixed-algebra operands: {self.algebra.name} vs {other.algebra.name}")
            return other
        if isinstance(other, Scalar) or isinstance(other, (int,)) or _is_rational(other):
            return EAElement.scalar(self.algebra, other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if not other._t:
            return self
        raw = dict(self._t)
        for k, v in other._t.items():
            _acc(raw, k, v)
        return EAElement._wrap(self.algebra, raw)

    __radd__ = __add__

    def __neg__(self):
        return EAElement._wrap(self.algebra, {k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "EAElement":
        c = Scalar(c)
        raw: dict = {}
        for (m, pk), v in self._t.items():
            for pk2, w in c._t.items():
                k, s = key_mul(pk, pk2)
                _acc(raw, (m, k), v * w if s > 0 else -(v * w))
        return EAElement._wrap(self.algebra, raw)

    def __mul__(self, other):
        if isinstance(other, Scalar) or isinstance(other, int) or _is_rational(other):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Scalar) or isinstance(other, int) or _is_rational(other):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers exist in U(g)")
        out = EAElement.scalar(self.algebra, 1)
        for _ in range(n):
            out = mul(out, self)
        return out

    def __truediv__(self, c):
        return self.scale(Scalar(c).inverse())

    def __eq__(self, other):
        if isinstance(other, EAElement):
            return self.algebra == other.algebra and self._t == other._t
        if isinstance(other, (int, Scalar)) or _is_rational(other):
            return self._t == EAElement.scalar(self.algebra, other)._t
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def map_coefficients(self, fn) -> "EAElement":
        """Apply ``fn: Scalar -> Scalar`` to every PBW coefficient."""
        return EAElement.from_terms(self.algebra, {m: fn(c) for m, c in self.terms.items()})

    # rendering -------------------------------------------------------

    def sorted_terms(self):
        terms = self.terms
        return sorted(terms.items(), key=lambda mc: (-sum(mc[0]), tuple(-e for e in mc[0])))

    def __str__(self):
        return render_element(self.sorted_terms(), self.algebra.labels)

    def __repr__(self):
        return f"EAElement({str(self)!r})"


def _is_rational(x) -> bool:
    from numbers import Rational
    return isinstance(x, Rational) or type(x).__name__ == "mpq"


def word_text(m, labels) -> str:
    parts = []
    for lab, e in zip(labels, m):
        if e == 1:
            parts.append(lab)
        elif e:
            parts.append(f"{lab}^{e}")
    return "*".join(parts)


def render_element(sorted_terms, labels) -> str:
    """Canonical text: one signed term per monomial, multi-term coefficients in parentheses."""
    entries = []
    for m, c in sorted_terms:
        mono = word_text(m, labels)
        ct = c.sorted_terms()
        if len(ct) == 1:
            k, re, im = ct[0]
            pm = monomial_text(k)
            entries.append(("*".join(p for p in (pm, mono) if p), re, im))
        else:
            entries.append((f"({c})" + (f"*{mono}" if mono else ""), mpq(1), MPQ_ZERO))
    return render_terms(entries)


# ---------------------------------------------------------------------------
# operations


def same_algebra(*els):
    alg = els[0].algebra
    for e in els[1:]:
        if e.algebra is not alg and e.algebra != alg:
            raise AlgebraMismatch(f"mixed-algebra operands: {alg.name} vs {e.algebra.name}")
    return alg


def _grouped(e: EAElement) -> dict:
    g: dict = {}
    for (m, pk), v in e._t.items():
        g.setdefault(m, {})[pk] = v
    return g


def mul(a: EAElement, b: EAElement) -> EAElement:
    L = same_algebra(a, b)
    ga, gb = _grouped(a), _grouped(b)
    out: dict = {}
    for ma, sa in ga.items():
        for mb, sb in gb.items():
            prod = mono_mul(L, ma, mb)
            for pa, ca in sa.items():
                for pb, cb in sb.items():
                    pk, s = key_mul(pa, pb)
                    c = ca * cb if s > 0 else -(ca * cb)
                    _scale_into(out, prod, pk, c)
    return EAElement._wrap(L, out)


def commutator(a: EAElement, b: EAElement) -> EAElement:
    return mul(a, b) - mul(b, a)


def anticommutator(a: EAElement, b: EAElement) -> EAElement:
    return mul(a, b) + mul(b, a)


def sym3(a: EAElement, b: EAElement, c: EAElement) -> EAElement:
    """(abc + cab + bca + acb + bac + cba) / 6."""
    same_algebra(a, b, c)
    ab, ba = mul(a, b), mul(b, a)
    total = mul(ab, c) + mul(c, ab) + mul(b, mul(c, a)) + mul(a, mul(c, b)) + mul(ba, c) + mul(c, ba)
    return total.scale(mpq(1, 6))


# ---------------------------------------------------------------------------
# word-level rewriting (independent of the memoized product)


def normal_form(raw, algebra: LieAlgebra | None = None, strategy: str = "left", rng=None) -> EAElement:
    """PBW normal form of a formal sum of words by explicit adjacent-swap rewriting.

    ``raw`` is an iterable of ``(word, coefficient)`` pairs where a word is a
    sequence of 1-based generator indices.  ``strategy`` picks which inversion
    to rewrite: ``"left"`` (leftmost), ``"right"`` (rightmost) or ``"random"``.
    Words are processed highest degree first.
    """
    L = algebra or su3()
    rng = rng or random.Random(0)
    pending: dict = {}
    for word, c in raw:
        word = tuple(word)
        for g in word:
            if not 1 <= g <= L.dim:
                raise IndexError(f"generator index {g} out of range 1..{L.dim}")
        for pk, v in Scalar(c)._t.items():
            _acc(pending, (word, pk), v)
    done: dict = {}
    while pending:
        top = max(len(w) for w, _ in pending)
        batch = [(k, v) for k, v in pending.items() if len(k[0]) == top]
        for k, _ in batch:
            del pending[k]
        for (word, pk), c in batch:
            inv = [p for p in range(len(word) - 1) if word[p] > word[p + 1]]
            if not inv:
                m = [0] * L.dim
                for g in word:
                    m[g - 1] += 1
                _acc(done, (tuple(m), pk), c)
                continue
            if strategy == "left":
                p = inv[0]
            elif strategy == "right":
                p = inv[-1]
            elif strategy == "random":
                p = rng.choice(inv)
            else:
                raise ValueError(f"unknown strategy {strategy!r}")
            j, i = word[p], word[p + 1]
            swapped = word[:p] + (i, j) + word[p + 2:]
            assert _inversions(swapped) < _inversions(word)
            _acc(pending, (swapped, pk), c)
            # X_j X_i = X_i X_j - [X_i, X_j]
            for k, d in L.bracket(i, j):
                new = word[:p] + ((k,) if k else ()) + word[p + 2:]
                assert len(new) < len(word)
                for pk2, w in d._t.items():
                    kk, s = key_mul(pk, pk2)
                    _acc(pending, (new, kk), -c * w if s > 0 else c * w)
    return EAElement._wrap(L, done)


def _inversions(word) -> int:
    return sum(1 for a in range(len(word)) for b in range(a + 1, len(word)) if word[a] > word[b])


def word_element(algebra: LieAlgebra, word, coeff=1) -> EAElement:
    """Product of generators along ``word`` via the memoized engine."""
    out = EAElement.scalar(algebra, coeff)
    for g in word:
        out = mul(out, EAElement.gen(algebra, g))
    return out


# ---------------------------------------------------------------------------
# Casimirs and commutant


def _X(L):
    return {k: EAElement.gen(L, k) for k in range(1, L.dim + 1)}


def _require_su3(L):
    if L != su3():
        raise ValueError(f"Casimir constructors are defined for su3 only, not {L.name}")


def casimir2(L: LieAlgebra | None = None) -> EAElement:
    L = L or su3()
    _require_su3(L)
    X = _X(L)
    q = mpq
    return (-q(2, 3)) * (X[1] * X[1] + X[2] * X[1] + X[2] * X[2]) \
        - q(1, 2) * sum((X[k] * X[k] for k in range(3, 9)), EAElement.scalar(L, 0))


def casimir3(L: LieAlgebra | None = None) -> EAElement:
    L = L or su3()
    _require_su3(L)
    X = _X(L)
    q = mpq
    ac = anticommutator
    return ((X[8] * X[6] + X[7] * X[5]) * X[4] + (X[8] * X[5] - X[7] * X[6]) * X[3]
            + q(4, 27) * (X[1] - X[2]) * (2 * X[1] + X[2]) * (X[1] + 2 * X[2])
            + q(1, 6) * ac(X[1] + 2 * X[2], X[3] * X[3] + X[4] * X[4])
            + q(1, 6) * ac(X[1] - X[2], X[5] * X[5] + X[6] * X[6])
            - q(1, 6) * ac(2 * X[1] + X[2], X[7] * X[7] + X[8] * X[8])
            - q(4, 3) * (X[1] - X[2]))


def commutant_check(p: EAElement, gens) -> tuple[bool, dict]:
    """Whether p commutes with each listed generator; residuals for those that do not."""
    res = {}
    for g in gens:
        r = commutator(p, EAElement.gen(p.algebra, g))
        if r:
            res[g] = r
    return not res, res


# ---------------------------------------------------------------------------
# matrix representation oracle


class RepresentationError(ValueError):
    pass


def check_rep(L: LieAlgebra, rep: dict) -> None:
    """Raise RepresentationError naming the first bracket the matrices violate."""
    n = None
    for k in range(1, L.dim + 1):
        if k not in rep:
            raise RepresentationError(f"no matrix for generator {k}")
        n = rep[k].n
    ident = GMat.identity(n)
    for i in range(1, L.dim + 1):
        for j in range(i + 1, L.dim + 1):
            lhs = rep[i] @ rep[j] - rep[j] @ rep[i]
            rhs = GMat.zeros(n)
            for k, c in L.bracket(i, j):
                if not c.is_constant():
                    raise RepresentationError(f"bracket [{i},{j}] has non-constant coefficient {c}")
                rhs = rhs + (ident if k == 0 else rep[k]).scale(c)
            if not (lhs - rhs).is_zero():
                raise RepresentationError(
                    f"representation violates [{L.labels[i - 1]},{L.labels[j - 1]}] (pair {i},{j})")


def eval_in_rep(p: EAElement, rep: dict, point: dict | None = None, checked: bool = False) -> GMat:
    """Matrix image of p; parameters are set from ``point`` first."""
    L = p.algebra
    if not checked:
        check_rep(L, rep)
    n = rep[1].n
    powers: dict = {}

    def power(k, e):
        if (k, e) not in powers:
            powers[(k, e)] = GMat.identity(n) if e == 0 else power(k, e - 1) @ rep[k + 1]
        return powers[(k, e)]

    out = GMat.zeros(n)
    for m, c in p.terms.items():
        if point:
            c = c.evaluate(point)
        mat = None
        for k, e in enumerate(m):
            if e:
                mat = power(k, e) if mat is None else mat @ power(k, e)
        out = out + (GMat.identity(n) if mat is None else mat).scale(c)
    return out


def fundamental_rep(L: LieAlgebra | None = None) -> dict:
    L = L or su3()
    _require_su3(L)
    return _rep.su3_fundamental()


# ---------------------------------------------------------------------------


def random_element(L: LieAlgebra, rng, max_terms=3, max_deg=2, max_num=4) -> EAElement:
    out = EAElement.scalar(L, 0)
    for _ in range(rng.randint(1, max_terms)):
        word = [rng.randint(1, L.dim) for _ in range(rng.randint(0, max_deg))]
        out = out + word_element(L, word, mpq(rng.randint(-max_num, max_num), rng.randint(1, 3)))
    return out


def sym3_permutation_invariant(a, b, c) -> bool:
    base = sym3(a, b, c)
    return all(sym3(*p) == base for p in permutations((a, b, c)))


__all__ = ["EAElement", "AlgebraMismatch", "normal_form", "mul", "commutator", "anticommutator",
           "sym3", "casimir2", "casimir3", "commutant_check", "eval_in_rep", "fundamental_rep",
           "check_rep", "word_element", "random_element", "RepresentationError", "rational_text",
           "to_mpq"]
