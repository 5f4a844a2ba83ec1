"""Evaluation engines for DSL expressions.

Every engine turns numbers, names and calls into values of one arithmetic:
PBW elements, phase-space functions, Weyl operators, or representation
matrices.  The DSL evaluator only needs ``const``, ``lookup``, ``mul``,
``power``, ``divide`` and ``call``; ``+``/``-`` use the values' own operators.
"""
from __future__ import annotations

from gmpy2 import mpq

from .dsl import DslError, evaluate
from .realize import (PhaseElement, WeylElement, cartan_specialize, hbar_limit, poisson_bracket,
                      quantum_bracket, weyl_commutator, HbarPoleError)
from .rep import GMat
from .scalar import I, PARAMS, Scalar
from .uea import EAElement, anticommutator, commutator, eval_in_rep, sym3

UEA, POISSON, WEYL, CONTRACTED, MATRIX = "UEA", "POISSON", "WEYL", "CONTRACTED-UEA", "MATRIX"


def _sym3_generic(a, b, c, mul):
    terms = [mul(mul(a, b), c), mul(mul(c, a), b), mul(mul(b, c), a),
             mul(mul(a, c), b), mul(mul(b, a), c), mul(mul(c, b), a)]
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    return total


class _Engine:
    kind = "?"
    functions: frozenset = frozenset()

    def __init__(self, bindings: dict, aliases: dict | None = None):
        self.bindings = bindings
        self.aliases = aliases or {}
        self.notes: set = set()

    def known(self, name: str) -> bool:
        return name in self.bindings or name in self.aliases or name in PARAMS or name == "i"

    def scalar_value(self, s: Scalar):
        raise NotImplementedError

    def const(self, c):
        return self.scalar_value(c if isinstance(c, Scalar) else Scalar(c))

    def lookup(self, name, node):
        if name in self.bindings:
            return self.bindings[name]
        if name in self.aliases:
            target = self.aliases[name]
            self.notes.add(f"{name} read as {target}")
            return self.bindings[target]
        if name == "i":
            return self.scalar_value(I)
        if name in PARAMS:
            return self.scalar_value(Scalar.param(name))
        from .dsl import _unknown_message
        raise DslError(_unknown_message(name), *node.pos)

    def mul(self, a, b):
        return a * b

    def power(self, a, n, node):
        if n < 0:
            raise DslError(f"negative exponent {n} is not allowed in the {self.kind} engine", *node.pos)
        return a ** n

    def constant_of(self, v):
        raise NotImplementedError

    def divide(self, a, b, node):
        c = self.constant_of(b)
        if c is None or c.is_zero():
            raise DslError("division is only by nonzero constants", *node.pos)
        return self.mul(a, self.scalar_value(c.inverse()))

    def call(self, fn, args, node):
        if fn not in self.functions:
            raise DslError(f"{fn}() is not available in the {self.kind} engine", *node.pos)
        return getattr(self, "fn_" + fn)(*args)

    def fn_nf(self, a):
        return a

    def run(self, node):
        return evaluate(node, self)


class UEAEngine(_Engine):
    """Products in the enveloping algebra of ``algebra``."""

    functions = frozenset({"comm", "acomm", "sym3", "nf", "at_cartan"})

    def __init__(self, algebra, bindings: dict, aliases=None, kind=UEA):
        super().__init__(bindings, aliases)
        self.algebra = algebra
        self.kind = kind

    def scalar_value(self, s):
        return EAElement.scalar(self.algebra, s)

    def constant_of(self, v):
        if v.degree() > 0:
            return None
        c = v.constant_term()
        return c if c.is_constant() else None

    def power(self, a, n, node):
        if n < 0:
            raise DslError(f"negative exponent {n}: the enveloping algebra has no inverses", *node.pos)
        return a ** n

    def fn_comm(self, a, b):
        return commutator(a, b)

    def fn_acomm(self, a, b):
        return anticommutator(a, b)

    def fn_sym3(self, a, b, c):
        return sym3(a, b, c)

    def fn_at_cartan(self, a):
        return cartan_specialize(a)


class _LaurentEngine(_Engine):
    cls = None

    def scalar_value(self, s):
        return self.cls.scalar(s)

    def constant_of(self, v):
        if v.degree() != 0 or v.nterms() > 1:
            return None
        terms = v.terms
        if not terms:
            return Scalar(0)
        (exps, c), = terms.items()
        if any(exps):
            return None
        return c if c.is_constant() else None

    def power(self, a, n, node):
        try:
            return a ** n
        except ValueError as e:
            raise DslError(str(e), *node.pos) from None


class PhaseEngine(_LaurentEngine):
    """Commutative phase-space functions with the Poisson bracket."""

    kind = POISSON
    cls = PhaseElement
    functions = frozenset({"comm", "acomm", "sym3", "pb", "nf"})

    def fn_comm(self, a, b):
        return a * b - b * a

    def fn_acomm(self, a, b):
        return 2 * (a * b)

    def fn_sym3(self, a, b, c):
        return a * b * c

    def fn_pb(self, a, b):
        return poisson_bracket(a, b)


class WeylEngine(_LaurentEngine):
    """Position/derivative operators with hbar as a parameter."""

    kind = WEYL
    cls = WeylElement
    functions = frozenset({"comm", "acomm", "sym3", "qc", "nf", "hbar0"})

    def mul(self, a, b):
        return a * b

    def fn_comm(self, a, b):
        return weyl_commutator(a, b)

    def fn_acomm(self, a, b):
        return a * b + b * a

    def fn_sym3(self, a, b, c):
        return _sym3_generic(a, b, c, self.mul) * mpq(1, 6)

    def fn_qc(self, a, b):
        return quantum_bracket(a, b)

    def fn_hbar0(self, a):
        if isinstance(a, PhaseElement):
            return a
        try:
            return hbar_limit(a)
        except HbarPoleError as e:
            raise DslError(str(e)) from None


class MatrixEngine(_Engine):
    """Values are representation matrices; parameters are fixed at ``point``.

    ``definitions`` is an ordered list of (name, AST) evaluated lazily with
    this engine, so named elements never pass through PBW ordering.  Names
    without a definition fall back to ``eval_in_rep`` of their element.
    """

    kind = MATRIX
    functions = frozenset({"comm", "acomm", "sym3", "nf"})

    def __init__(self, rep: dict, labels, point: dict, definitions=(), elements=None, aliases=None):
        n = rep[1].n
        gens = {lab: rep[k] for k, lab in enumerate(labels, start=1)}
        super().__init__(gens, aliases)
        self.n = n
        self.rep = rep
        self.point = point
        self.defs = dict(definitions)
        self.elements = elements or {}

    def known(self, name):
        return super().known(name) or name in self.defs or name in self.elements

    def scalar_value(self, s):
        return GMat.scalar(self.n, s.evaluate(self.point))

    def lookup(self, name, node):
        if name not in self.bindings:
            if name in self.defs:
                self.bindings[name] = evaluate(self.defs[name], self)
            elif name in self.elements:
                self.bindings[name] = eval_in_rep(self.elements[name], self.rep, self.point, checked=True)
        return super().lookup(name, node)

    def mul(self, a, b):
        return a @ b

    def power(self, a, n, node):
        if n < 0:
            raise DslError(f"negative exponent {n} is not allowed for matrices", *node.pos)
        out = GMat.identity(self.n)
        for _ in range(n):
            out = out @ a
        return out

    def constant_of(self, v):
        s = v.as_scalar()
        return None if s is None else Scalar.gaussian(*s)

    def fn_comm(self, a, b):
        return a @ b - b @ a

    def fn_acomm(self, a, b):
        return a @ b + b @ a

    def fn_sym3(self, a, b, c):
        return _sym3_generic(a, b, c, self.mul).scale(mpq(1, 6))
