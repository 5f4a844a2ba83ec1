"""Exact coefficients: polynomials in the fixed parameters over the Gaussian rationals.

A :class:`Scalar` is a finitely supported map from parameter exponent vectors to
Gaussian rationals.  The parameter set is fixed to ``a1, a2, a3, hbar, R``.

Internally every term is keyed by a 6-tuple: the five parameter exponents and a
final ``0``/``1`` flag for the imaginary unit, so ``i`` behaves like a sixth
variable reduced by ``i*i = -1``.  Values are ``gmpy2.mpq``.
"""
from __future__ import annotations

from numbers import Rational

from gmpy2 import mpq

PARAMS = ("a1", "a2", "a3", "hbar", "R")
NPARAMS = len(PARAMS)
_IDX = {name: k for k, name in enumerate(PARAMS)}

ONE_KEY = (0,) * (NPARAMS + 1)
I_KEY = (0,) * NPARAMS + (1,)

MPQ_ZERO = mpq(0)


MPQ = type(MPQ_ZERO)


def to_mpq(value) -> mpq:
    if isinstance(value, MPQ):
        return value
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Rational):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return mpq(value)
    raise TypeError(f"not an exact rational: {value!r}")


def key_mul(ka: tuple, kb: tuple) -> tuple[tuple, int]:
    """Multiply two parameter keys; returns (key, sign)."""
    if ka == ONE_KEY:
        return kb, 1
    if kb == ONE_KEY:
        return ka, 1
    k = tuple(x + y for x, y in zip(ka, kb))
    if k[-1] == 2:
        return k[:-1] + (0,), -1
    return k, 1


def terms_mul(a: dict, b: dict) -> dict:
    """Product of two raw term dicts (key -> mpq)."""
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k, s = key_mul(ka, kb)
            v = va * vb
            if s < 0:
                v = -v
            out[k] = out.get(k, MPQ_ZERO) + v
    return {k: v for k, v in out.items() if v}


def terms_add_into(acc: dict, b: dict, scale=1) -> None:
    for k, v in b.items():
        nv = acc.get(k, MPQ_ZERO) + v * scale
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


class Scalar:
    """Immutable exact coefficient.

    >>> a1 = Scalar.param("a1")
    >>> str((a1 + 1) * (a1 - 1))
    '-1 + a1^2'
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self._t = value._t
        elif isinstance(value, dict):
            self._t = {k: v for k, v in value.items() if v}
        else:
            v = to_mpq(value)
            self._t = {ONE_KEY: v} if v else {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Scalar":
        s = cls.__new__(cls)
        s._t = terms
        s._hash = None
        return s

    @classmethod
    def param(cls, name: str) -> "Scalar":
        try:
            k = _IDX[name]
        except KeyError:
            raise ValueError(f"unknown parameter {name!r}; expected one of {PARAMS}") from None
        key = [0] * (NPARAMS + 1)
        key[k] = 1
        return cls._raw({tuple(key): mpq(1)})

    @classmethod
    def gaussian(cls, re, im=0) -> "Scalar":
        t = {}
        re, im = to_mpq(re), to_mpq(im)
        if re:
            t[ONE_KEY] = re
        if im:
            t[I_KEY] = im
        return cls._raw(t)

    # ring operations -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        terms_add_into(t, other._t)
        return Scalar._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw({k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Scalar._raw(terms_mul(self._t, other._t))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("Scalar powers must be non-negative integers")
        out = Scalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        """Division by a nonzero Gaussian-rational constant only."""
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def inverse(self) -> "Scalar":
        if not self.is_constant() or not self._t:
            raise ZeroDivisionError(f"cannot invert non-constant or zero scalar {self}")
        re = self._t.get(ONE_KEY, MPQ_ZERO)
        im = self._t.get(I_KEY, MPQ_ZERO)
        n = re * re + im * im
        return Scalar.gaussian(re / n, -im / n)

    def conjugate(self) -> "Scalar":
        return Scalar._raw({k: (-v if k[-1] else v) for k, v in self._t.items()})

    # comparisons -----------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return all(k[:NPARAMS] == ONE_KEY[:NPARAMS] for k in self._t)

    def constant(self) -> tuple[mpq, mpq]:
        """(re, im) of a constant scalar."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._t.get(ONE_KEY, MPQ_ZERO), self._t.get(I_KEY, MPQ_ZERO)

    def degree(self) -> int:
        return max((sum(k[:NPARAMS]) for k in self._t), default=-1)

    def degree_in(self, name: str) -> int:
        j = _IDX[name]
        return max((k[j] for k in self._t), default=-1)

    @property
    def terms(self) -> dict:
        """Parameter exponent 5-tuple -> (re, im) Gaussian rational."""
        out: dict = {}
        for k, v in self._t.items():
            re, im = out.get(k[:NPARAMS], (MPQ_ZERO, MPQ_ZERO))
            out[k[:NPARAMS]] = (re, im + v) if k[-1] else (re + v, im)
        return out

    # substitution / evaluation ---------------------------------------

    def mentions(self, name: str) -> bool:
        j = _IDX[name]
        return any(k[j] for k in self._t)

    def substitute(self, name: str, value) -> "Scalar":
        value = _coerce(value)
        if value is NotImplemented:
            raise TypeError(f"cannot substitute {value!r}")
        if value.mentions(name):
            raise ValueError(f"substitution cycle: value for {name} mentions {name}")
        j = _IDX[name]
        powers = {0: Scalar(1)}
        out = Scalar(0)
        for k, v in self._t.items():
            e = k[j]
            if e not in powers:
                powers[e] = value ** e
            rest = k[:j] + (0,) + k[j + 1:]
            out = out + Scalar._raw({rest: v}) * powers[e]
        return out

    def evaluate(self, point: dict) -> "Scalar":
        """Substitute every parameter named in ``point``."""
        out = self
        for name, value in point.items():
            out = out.substitute(name, value)
        return out

    # rendering -------------------------------------------------------

    def sorted_terms(self):
        """(param exponents, re, im) in canonical order."""
        items = self.terms.items()
        return [(k, re, im) for k, (re, im) in
                sorted(items, key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0])))]

    def __str__(self):
        return render_terms([(monomial_text(k), re, im) for k, re, im in self.sorted_terms()])

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, MPQ, Rational)):
        return Scalar(x)
    return NotImplemented


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar.gaussian(0, 1)


def monomial_text(exps) -> str:
    parts = []
    for name, e in zip(PARAMS, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def rational_text(q) -> str:
    q = to_mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def render_terms(entries) -> str:
    """Join (monomial text, re, im) entries as a signed sum.

    Real coefficients render as ``p/q``, imaginary as ``p/q*i``; a term with
    both parts renders its coefficient in parentheses.
    """
    if not entries:
        return "0"
    out = []
    for mono, re, im in entries:
        if re and im:
            sign, coef = "+", f"({rational_text(re)} + {rational_text(im)}*i)" if im > 0 \
                else f"({rational_text(re)} - {rational_text(-im)}*i)"
        else:
            v, suffix = (re, "") if re else (im, "*i")
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if suffix:
                coef = f"{rational_text(a)}*i" if a != 1 else "i"
            else:
                coef = rational_text(a) if (a != 1 or not mono) else ""
        if coef and mono:
            body = f"{coef}*{mono}"
        else:
            body = coef or mono
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def random_scalar(rng, max_terms=3, max_deg=2, max_num=5, gaussian=True) -> Scalar:
    """Small random scalar, for property tests."""
    t: dict = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = [0] * NPARAMS
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.randrange(NPARAMS)] += 1
        ibit = rng.randint(0, 1) if gaussian else 0
        k = tuple(exps) + (ibit,)
        t[k] = t.get(k, MPQ_ZERO) + mpq(rng.randint(-max_num, max_num), rng.randint(1, 3))
    return Scalar(t)


__all__ = ["Scalar", "PARAMS", "ZERO", "ONE", "I", "random_scalar", "render_terms",
           "rational_text", "monomial_text", "to_mpq"]
