"""Exact square matrices over the Gaussian rationals, for the representation oracle.

A matrix is kept as two numpy object arrays of ``mpq`` (real and imaginary
parts) so products run through numpy's object loops instead of a Python
complex-number class.
"""
from __future__ import annotations

import numpy as np
from gmpy2 import mpq

from .scalar import Scalar, to_mpq

_Z = mpq(0)
_ONE = mpq(1)


def _zeros(n):
    return np.full((n, n), _Z, dtype=object)


def gaussian(x) -> tuple:
    """(re, im) of a constant Scalar or a rational."""
    if isinstance(x, Scalar):
        if not x.is_constant():
            raise ValueError(f"coefficient {x} still has free parameters")
        return x.constant()
    if isinstance(x, tuple):
        return to_mpq(x[0]), to_mpq(x[1])
    return to_mpq(x), _Z


class GMat:
    __slots__ = ("re", "im")

    def __init__(self, re: np.ndarray, im: np.ndarray | None = None):
        self.re = re
        self.im = _zeros(re.shape[0]) if im is None else im

    @property
    def n(self) -> int:
        return self.re.shape[0]

    @classmethod
    def zeros(cls, n: int) -> "GMat":
        return cls(_zeros(n), _zeros(n))

    @classmethod
    def scalar(cls, n: int, c) -> "GMat":
        re, im = gaussian(c)
        a, b = _zeros(n), _zeros(n)
        for k in range(n):
            a[k, k] = re
            b[k, k] = im
        return cls(a, b)

    @classmethod
    def identity(cls, n: int) -> "GMat":
        return cls.scalar(n, 1)

    @classmethod
    def unit(cls, n: int, r: int, c: int, value=1) -> "GMat":
        """value * E_rc, 1-based."""
        m = cls.zeros(n)
        re, im = gaussian(value)
        m.re[r - 1, c - 1] = re
        m.im[r - 1, c - 1] = im
        return m

    @classmethod
    def from_rows(cls, rows) -> "GMat":
        n = len(rows)
        m = cls.zeros(n)
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                m.re[r, c], m.im[r, c] = gaussian(x)
        return m

    def __add__(self, o):
        return GMat(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return GMat(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return GMat(-self.re, -self.im)

    def __matmul__(self, o):
        return GMat(self.re.dot(o.re) - self.im.dot(o.im), self.re.dot(o.im) + self.im.dot(o.re))

    def scale(self, c) -> "GMat":
        re, im = gaussian(c)
        if not im:
            return GMat(self.re * re, self.im * re)
        return GMat(self.re * re - self.im * im, self.re * im + self.im * re)

    def is_zero(self) -> bool:
        return not any(self.re.flat) and not any(self.im.flat)

    def as_scalar(self):
        """(re, im) if the matrix is a multiple of the identity, else None."""
        re, im = self.re[0, 0], self.im[0, 0]
        if (self - GMat.scalar(self.n, (re, im))).is_zero():
            return re, im
        return None

    def __eq__(self, o):
        return isinstance(o, GMat) and (self - o).is_zero()

    __hash__ = None

    def entry(self, r: int, c: int) -> tuple:
        return self.re[r, c], self.im[r, c]

    def __repr__(self):
        rows = []
        for r in range(self.n):
            cells = []
            for c in range(self.n):
                a, b = self.entry(r, c)
                cells.append(f"{a}" if not b else f"{a}{b:+}i")
            rows.append("[" + ", ".join(cells) + "]")
        return "GMat(" + ", ".join(rows) + ")"


I_UNIT = (_Z, _ONE)


def su3_fundamental() -> dict:
    """3x3 matrices realizing the su(3) table: generator index -> matrix."""
    E = lambda r, c, v=1: GMat.unit(3, r, c, v)  # noqa: E731
    i = I_UNIT
    return {
        1: E(1, 1, i) - E(2, 2, i),
        2: E(2, 2, i) - E(3, 3, i),
        3: E(1, 2) - E(2, 1),
        4: E(1, 2, i) + E(2, 1, i),
        5: E(1, 3) - E(3, 1),
        6: E(1, 3, i) + E(3, 1, i),
        7: E(2, 3) - E(3, 2),
        8: E(2, 3, i) + E(3, 2, i),
    }


def contracted_fundamental() -> dict:
    """Limit of the conjugated fundamental matrices under the (0,0,1,1,0,0,1,1) scaling.

    Conjugating by diag(1, R, 1) and dividing the weight-one generators by R
    leaves only the E21 / E23 parts of X3, X4, X7, X8.
    """
    rep = su3_fundamental()
    E = lambda r, c, v=1: GMat.unit(3, r, c, v)  # noqa: E731
    rep[3] = -E(2, 1)
    rep[4] = E(2, 1, I_UNIT)
    rep[7] = E(2, 3)
    rep[8] = E(2, 3, I_UNIT)
    return rep


def adjoint(L) -> dict:
    """ad(X_i) as dim x dim matrices from the structure constants (constant tables only)."""
    n = L.dim
    out = {}
    for i in range(1, n + 1):
        m = GMat.zeros(n)
        for j in range(1, n + 1):
            for k, c in L.bracket(i, j):
                if k == 0:
                    raise ValueError("adjoint matrices need a table without constant terms")
                re, im = gaussian(c)
                m.re[k - 1, j - 1] += re
                m.im[k - 1, j - 1] += im
        out[i] = m
    return out


def kron(a: GMat, b: GMat) -> GMat:
    return GMat(np.kron(a.re, b.re) - np.kron(a.im, b.im), np.kron(a.re, b.im) + np.kron(a.im, b.re))


def tensor(r1: dict, r2: dict) -> dict:
    """X -> X (x) 1 + 1 (x) X."""
    i1, i2 = GMat.identity(r1[1].n), GMat.identity(r2[1].n)
    return {k: kron(r1[k], i2) + kron(i1, r2[k]) for k in r1}


def random_point(rng, names=("a1", "a2", "a3", "hbar", "R")) -> dict:
    """Random nonzero rational values for the parameters."""
    out = {}
    for n in names:
        num = 0
        while num == 0:
            num = rng.randint(-9, 9)
        out[n] = mpq(num, rng.randint(1, 7))
    return out
