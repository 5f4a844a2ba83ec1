"""Classical phase-space and quantum Weyl-algebra realizations.

Both element types are Laurent in the three positions and polynomial in the
three momenta (classical) or derivatives (quantum).  Terms are stored flat as
``(exponents, param_key) -> mpq`` with a 6-tuple of exponents: three position
exponents (any integer) followed by three momentum/derivative exponents.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from gmpy2 import mpq

from . import linsolve
from .scalar import MPQ_ZERO, ONE_KEY, NPARAMS, Scalar, key_mul, monomial_text, render_terms, _IDX
from .uea import EAElement

ZERO6 = (0,) * 6


def _acc(out, key, v):
    nv = out.get(key, MPQ_ZERO) + v
    if nv:
        out[key] = nv
    else:
        out.pop(key, None)


class _Laurent:
    """Shared linear structure of PhaseElement and WeylElement."""

    labels: tuple = ()
    __slots__ = ("_t", "_hash")

    def __init__(self, raw: dict | None = None):
        self._t = {k: v for k, v in (raw or {}).items() if v}
        self._hash = None

    @classmethod
    def _wrap(cls, raw):
        e = cls.__new__(cls)
        e._t = raw
        e._hash = None
        return e

    @classmethod
    def scalar(cls, c):
        return cls._wrap({(ZERO6, pk): v for pk, v in Scalar(c)._t.items()})

    @classmethod
    def monomial(cls, exps, c=1):
        exps = tuple(exps)
        if len(exps) != 6 or any(e < 0 for e in exps[3:]):
            raise ValueError(f"bad exponent vector {exps}")
        return cls._wrap({(exps, pk): v for pk, v in Scalar(c)._t.items()})

    @classmethod
    def var(cls, k: int):
        """k = 0..2 positions, 3..5 momenta/derivatives."""
        return cls.monomial(tuple(1 if t == k else 0 for t in range(6)))

    @classmethod
    def from_terms(cls, terms: dict):
        raw: dict = {}
        for m, c in terms.items():
            for pk, v in Scalar(c)._t.items():
                _acc(raw, (tuple(m), pk), v)
        return cls._wrap(raw)

    @property
    def terms(self) -> dict:
        grouped: dict = {}
        for (m, pk), v in self._t.items():
            grouped.setdefault(m, {})[pk] = v
        return {m: Scalar._raw(t) for m, t in grouped.items()}

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, _Laurent):
            raise TypeError(f"cannot mix {type(self).__name__} and {type(other).__name__}")
        if isinstance(other, EAElement):
            return NotImplemented
        try:
            return type(self).scalar(other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        raw = dict(self._t)
        for k, v in other._t.items():
            _acc(raw, k, v)
        return self._wrap(raw)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = Scalar(c)
        raw: dict = {}
        for (m, pk), v in self._t.items():
            for pk2, w in c._t.items():
                k, s = key_mul(pk, pk2)
                _acc(raw, (m, k), v * w if s > 0 else -(v * w))
        return self._wrap(raw)

    def __mul__(self, other):
        if isinstance(other, Scalar) or isinstance(other, int) or type(other).__name__ == "mpq":
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._product(other)

    def __rmul__(self, other):
        if isinstance(other, Scalar) or isinstance(other, int) or type(other).__name__ == "mpq":
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        return self.scale(Scalar(c).inverse())

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ValueError("integer powers only")
        if n < 0:
            mono = self.as_monomial()
            if mono is None or any(mono[0][3:]):
                raise ValueError("negative powers exist only for position monomials")
            (m, c) = mono
            re, im = c.constant()
            if im or not c.is_constant():
                raise ValueError("negative powers need a rational coefficient")
            return type(self).monomial(tuple(e * n for e in m), Scalar(1) / (Scalar(re) ** (-n)))
        out = type(self).scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def as_monomial(self):
        t = self.terms
        if len(t) != 1:
            return None
        return next(iter(t.items()))

    def __eq__(self, other):
        if isinstance(other, _Laurent):
            return type(self) is type(other) and self._t == other._t
        if isinstance(other, (int, Scalar)):
            return self._t == type(self).scalar(other)._t
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    def is_zero(self):
        return not self._t

    def degree(self) -> int:
        return max((sum(m) for m, _ in self._t), default=-1)

    def cleared_degree(self) -> int:
        """Degree after multiplying by the smallest denominator-clearing monomial."""
        return sum(_clearing(self)) + self.degree() if self._t else -1

    def nterms(self):
        return len({m for m, _ in self._t})

    def map_coefficients(self, fn):
        return type(self).from_terms({m: fn(c) for m, c in self.terms.items()})

    def substitute(self, name: str, value):
        return self.map_coefficients(lambda c: c.substitute(name, value))

    def mentions(self, name: str) -> bool:
        j = _IDX[name]
        return any(pk[j] for _, pk in self._t)

    def divide_param(self, name: str, power: int = 1):
        """Exact division by a parameter power; raises if some term is not divisible."""
        j = _IDX[name]
        raw = {}
        for (m, pk), v in self._t.items():
            if pk[j] < power:
                raise ValueError(f"term {m} is not divisible by {name}^{power}")
            raw[(m, pk[:j] + (pk[j] - power,) + pk[j + 1:])] = v
        return self._wrap(raw)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (-sum(mc[0]), tuple(-e for e in mc[0])))

    def __str__(self):
        entries = []
        for m, c in self.sorted_terms():
            mono = "*".join(lab if e == 1 else f"{lab}^{e}" for lab, e in zip(self.labels, m) if e)
            ct = c.sorted_terms()
            if len(ct) == 1:
                k, re, im = ct[0]
                entries.append(("*".join(p for p in (monomial_text(k), mono) if p), re, im))
            else:
                entries.append((f"({c})" + (f"*{mono}" if mono else ""), mpq(1), MPQ_ZERO))
        return render_terms(entries)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class PhaseElement(_Laurent):
    """Classical phase-space function: Laurent in x, polynomial in p."""

    labels = ("x1", "x2", "x3", "p1", "p2", "p3")
    __slots__ = ()

    def _product(self, other):
        raw: dict = {}
        for (ma, pa), va in self._t.items():
            for (mb, pb), vb in other._t.items():
                k, s = key_mul(pa, pb)
                m = tuple(x + y for x, y in zip(ma, mb))
                _acc(raw, (m, k), va * vb if s > 0 else -(va * vb))
        return PhaseElement._wrap(raw)

    def diff(self, k: int) -> "PhaseElement":
        raw: dict = {}
        for (m, pk), v in self._t.items():
            e = m[k]
            if e:
                _acc(raw, (m[:k] + (e - 1,) + m[k + 1:], pk), v * e)
        return PhaseElement._wrap(raw)


def poisson_bracket(a: PhaseElement, b: PhaseElement) -> PhaseElement:
    out = PhaseElement()
    for k in range(3):
        out = out + a.diff(k) * b.diff(k + 3) - a.diff(k + 3) * b.diff(k)
    return out


_LEIBNIZ: dict = {}


def _falling(n: int, r: int) -> int:
    out = 1
    for t in range(r):
        out *= n - t
    return out


def _leibniz(d: tuple, s: tuple):
    """Expansion of d^(d) s^(s) as [(r-vector, coefficient)], coordinatewise."""
    key = (d, s)
    hit = _LEIBNIZ.get(key)
    if hit is not None:
        return hit
    per = []
    for di, si in zip(d, s):
        opts = []
        for r in range(di + 1):
            c = comb(di, r) * _falling(si, r)
            if c:
                opts.append((r, c))
        per.append(opts)
    out = []
    for r0, c0 in per[0]:
        for r1, c1 in per[1]:
            for r2, c2 in per[2]:
                out.append(((r0, r1, r2), c0 * c1 * c2))
    _LEIBNIZ[key] = out
    return out


class WeylElement(_Laurent):
    """Differential operator s^a d^b in normal order (positions left)."""

    labels = ("s1", "s2", "s3", "d1", "d2", "d3")
    __slots__ = ()

    def _product(self, other):
        raw: dict = {}
        for (ma, pa), va in self._t.items():
            sa, da = ma[:3], ma[3:]
            for (mb, pb), vb in other._t.items():
                sb, db = mb[:3], mb[3:]
                k, sign = key_mul(pa, pb)
                v = va * vb if sign > 0 else -(va * vb)
                for r, c in _leibniz(da, sb):
                    m = (sa[0] + sb[0] - r[0], sa[1] + sb[1] - r[1], sa[2] + sb[2] - r[2],
                         da[0] - r[0] + db[0], da[1] - r[1] + db[1], da[2] - r[2] + db[2])
                    _acc(raw, (m, k), v * c)
        return WeylElement._wrap(raw)


def weyl_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    return a * b


def weyl_commutator(a: WeylElement, b: WeylElement) -> WeylElement:
    return a * b - b * a


def quantum_bracket(a: WeylElement, b: WeylElement) -> WeylElement:
    """(1/(i hbar)) [a, b], requiring exact divisibility by hbar."""
    return weyl_commutator(a, b).divide_param("hbar").scale(Scalar.gaussian(0, -1))


# ---------------------------------------------------------------------------
# named realizations

_PAIRS = {1: (2, 3), 2: (1, 3), 3: (1, 2)}


def _alpha(k):
    return Scalar.param(f"a{k}")


def _integral(cls, ell: int, kinetic, hbar_shift) -> _Laurent:
    j, k = _PAIRS[ell]
    xj, xk = cls.var(j - 1), cls.var(k - 1)
    pot = _alpha(j) * xk * xj ** -1 + _alpha(k) * xj * xk ** -1
    return mpq(-1, 4) * (kinetic(j, k) + pot * pot + cls.scalar((_alpha(j) - _alpha(k)) ** 2) + hbar_shift)


def classical_T(ell: int) -> PhaseElement:
    """T_l on phase space, positions written x."""
    P = PhaseElement

    def kinetic(j, k):
        L = P.var(j - 1) * P.var(k + 2) - P.var(k - 1) * P.var(j + 2)
        return L * L

    return _integral(P, ell, kinetic, P.scalar(0))


def quantum_T(ell: int) -> WeylElement:
    """Quantum T_l, including the additive -hbar^2 inside the bracket."""
    W = WeylElement
    hb2 = Scalar.param("hbar") ** 2

    def kinetic(j, k):
        L = W.var(j - 1) * W.var(k + 2) - W.var(k - 1) * W.var(j + 2)
        return (L * L).scale(-hb2)

    return _integral(W, ell, kinetic, W.scalar(-hb2))


def classical_images() -> dict:
    """Images of X1..X8 under the coordinate realization."""
    P = PhaseElement
    x = [P.var(k) for k in range(3)]
    p = [P.var(k + 3) for k in range(3)]
    a1, a2, a3 = _alpha(1), _alpha(2), _alpha(3)
    inv = [xi ** -1 for xi in x]
    return {
        1: P.scalar(a2 - a1),
        2: P.scalar(a3 - a2),
        3: x[0] * p[1] - x[1] * p[0],
        4: -a2 * x[0] * inv[1] - a1 * x[1] * inv[0],
        5: x[0] * p[2] - x[2] * p[0],
        6: -a1 * x[2] * inv[0] - a3 * x[0] * inv[2],
        7: x[1] * p[2] - x[2] * p[1],
        8: -a3 * x[1] * inv[2] - a2 * x[2] * inv[1],
    }


def classical_realize(p: EAElement) -> PhaseElement:
    """Substitute the coordinate images into each PBW monomial (commutative product)."""
    if p.algebra.dim != 8:
        raise ValueError("classical realization is defined on U(su3)")
    img = classical_images()
    powers: dict = {}

    def power(k, e):
        if (k, e) not in powers:
            powers[(k, e)] = PhaseElement.scalar(1) if e == 0 else power(k, e - 1) * img[k]
        return powers[(k, e)]

    out = PhaseElement()
    for m, c in p.terms.items():
        term = PhaseElement.scalar(c)
        for k, e in enumerate(m):
            if e:
                term = term * power(k + 1, e)
        out = out + term
    return out


def cartan_specialize(p: EAElement) -> EAElement:
    """Set X1 := a2 - a1 and X2 := a3 - a2 in every PBW monomial.

    X1 and X2 lead the PBW order, so this is the quotient by the right ideal
    generated by X1 - (a2 - a1) and X2 - (a3 - a2).  On elements commuting
    with X1 and X2 it respects products, which is the only use intended.
    """
    L = p.algebra
    if L.dim != 8 or L.labels[0] != "X1" or L.labels[1] != "X2":
        raise ValueError("Cartan specialization needs the su3 generator order X1, X2, ...")
    c1, c2 = _alpha(2) - _alpha(1), _alpha(3) - _alpha(2)
    out: dict = {}
    for m, c in p.terms.items():
        key = (0, 0) + m[2:]
        v = c * c1 ** m[0] * c2 ** m[1]
        out[key] = out.get(key, Scalar(0)) + v
    return EAElement.from_terms(L, {k: v for k, v in out.items() if v})


# ---------------------------------------------------------------------------
# ħ -> 0


class HbarPoleError(ValueError):
    pass


def hbar_limit(e: WeylElement) -> PhaseElement:
    """Principal symbol: hbar*d -> i*p, then hbar -> 0.

    A term c hbar^h s^a d^b with |b| > h would need a negative power of hbar
    and is rejected.
    """
    j = _IDX["hbar"]
    raw: dict = {}
    poles = []
    for (m, pk), v in e._t.items():
        n = sum(m[3:])
        h = pk[j]
        if h < n:
            poles.append((m, pk))
            continue
        if h > n:
            continue
        pk2 = pk[:j] + (0,) + pk[j + 1:]
        # i^n
        unit = {0: (1, 0), 1: (1, 1), 2: (-1, 0), 3: (-1, 1)}[n % 4]
        sgn, ib = unit
        k, s = key_mul(pk2, (0,) * NPARAMS + (ib,))
        _acc(raw, (m, k), v * sgn * s)
    if poles:
        raise HbarPoleError(f"hbar poles at {len(poles)} term(s), e.g. {poles[0]}")
    return PhaseElement._wrap(raw)


# ---------------------------------------------------------------------------
# constraint ideals


@dataclass(frozen=True)
class ConstraintIdeal:
    generators: tuple
    side: str = "right"  # Weyl: e = sum g * c_g ; ignored for Poisson

    def __post_init__(self):
        if not self.generators:
            raise ValueError("empty ideal")
        kinds = {type(g) for g in self.generators}
        if len(kinds) != 1:
            raise ValueError("mixed generator types")
        for g in self.generators:
            if not g:
                raise ValueError("ideal generators must be nonzero")
            for (m, pk) in g._t:
                if pk != ONE_KEY:
                    raise ValueError("ideal generators must have rational constant coefficients")
                if any(e < 0 for e in m):
                    raise ValueError("ideal generators must be polynomial")

    @property
    def kind(self):
        return type(self.generators[0])


def sphere_ideal(cls=PhaseElement, momentum: bool = False) -> ConstraintIdeal:
    s = [cls.var(k) for k in range(3)]
    gens = [s[0] * s[0] + s[1] * s[1] + s[2] * s[2] - 1]
    if momentum:
        gens.append(s[0] * cls.var(3) + s[1] * cls.var(4) + s[2] * cls.var(5))
    return ConstraintIdeal(tuple(gens))


@dataclass
class Membership:
    status: str  # "member", "not_member", "undecided"
    bound: int
    clearing: tuple = ZERO6
    cofactors: list = field(default_factory=list)  # [(generator index, element)]

    @property
    def is_member(self):
        return self.status == "member"

    def certificate_text(self) -> list:
        return [(i, str(c)) for i, c in self.cofactors]


def _clearing(e) -> tuple:
    lo = [0, 0, 0]
    for (m, _pk) in e._t:
        for t in range(3):
            lo[t] = min(lo[t], m[t])
    return (-lo[0], -lo[1], -lo[2], 0, 0, 0)


def _mono(cls, m):
    return cls._wrap({(tuple(m), ONE_KEY): mpq(1)})


def ideal_member(e, ideal: ConstraintIdeal, degree_bound: int) -> Membership:
    """Bounded-degree membership test by exact linear algebra.

    ``e`` is first multiplied by the smallest position monomial that clears its
    Laurent denominators.  Cofactor products are limited to total degree
    ``degree_bound``; infeasibility is therefore "not a member at this bound".
    """
    cls = ideal.kind
    if not isinstance(e, cls):
        raise TypeError(f"ideal over {cls.__name__} cannot test {type(e).__name__}")
    clear = _clearing(e)
    ec = _mono(cls, clear) * e
    if ec.degree() > degree_bound:
        return Membership("undecided", degree_bound, clear)
    if not ec:
        return Membership("member", degree_bound, clear, [])
    gens = ideal.generators
    weyl = cls is WeylElement

    def times(g, m):
        return g * _mono(cls, m) if weyl else _mono(cls, m) * g

    # split the target by parameter key; generators are parameter-free
    comps: dict = {}
    for (m, pk), v in ec._t.items():
        comps.setdefault(pk, {})[m] = v
    cof: dict = {gi: cls() for gi in range(len(gens))}
    for pk, target in comps.items():
        cols, labels = _closure(gens, target, degree_bound, times)
        x = linsolve.solve(cols, target)
        if x is None:
            return Membership("not_member", degree_bound, clear)
        unit = Scalar._raw({pk: mpq(1)})
        for (gi, m), c in zip(labels, x):
            if c:
                cof[gi] = cof[gi] + _mono(cls, m).scale(unit * Scalar(c))
    cofactors = [(gi, c) for gi, c in cof.items() if c]
    return Membership("member", degree_bound, clear, cofactors)


def _closure(gens, target: dict, bound: int, times):
    gen_monos = [[m for (m, _pk) in g._t] for g in gens]
    gdeg = [g.degree() for g in gens]
    seen_cand: set = set()
    cols, labels = [], []
    frontier = list(target)
    seen_mono = set(frontier)
    while frontier:
        nxt = []
        for u in frontier:
            for gi, monos in enumerate(gen_monos):
                for v in monos:
                    cand = tuple(a - b for a, b in zip(u, v))
                    if any(c < 0 for c in cand) or sum(cand) + gdeg[gi] > bound:
                        continue
                    if (gi, cand) in seen_cand:
                        continue
                    seen_cand.add((gi, cand))
                    prod = times(gens[gi], cand)
                    col = {m: val for (m, _pk), val in prod._t.items()}
                    cols.append(col)
                    labels.append((gi, cand))
                    for m in col:
                        if m not in seen_mono:
                            seen_mono.add(m)
                            nxt.append(m)
        frontier = nxt
    return cols, labels


def verify_membership(e, ideal: ConstraintIdeal, cert: Membership) -> bool:
    cls = ideal.kind
    total = cls()
    for gi, c in cert.cofactors:
        g = ideal.generators[gi]
        total = total + (g * c if cls is WeylElement else c * g)
    return total == _mono(cls, cert.clearing) * e
