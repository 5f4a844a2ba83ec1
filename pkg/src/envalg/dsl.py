"""A small expression language for algebra elements.

Grammar (ASCII)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := NUMBER | NAME | NAME "(" expr ("," expr)* ")" | "(" expr ")"

``*`` is left-associative and order matters.  Names may carry a prime,
``X'3``.  Evaluation is delegated to an engine object so the same text can be
read in the enveloping algebra, on phase space, in the Weyl algebra, or as
matrices in a representation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from gmpy2 import mpq

from .scalar import PARAMS, Scalar


class DslError(ValueError):
    def __init__(self, message: str, line: int = 1, col: int = 1, expected=()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(sorted(expected))
        text = f"{line}:{col}: {message}"
        if self.expected:
            text += " (expected one of: " + ", ".join(self.expected) + ")"
        super().__init__(text)


# name -> arity
FUNCTIONS = {
    "comm": 2, "acomm": 2, "sym3": 3, "pb": 2, "qc": 2,
    "nf": 1, "hbar0": 1, "at_cartan": 1,
}


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class Name:
    id: str
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class Neg:
    arg: object
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


# -- lexer -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*(?:'[0-9]+)?)|(?P<op>[-+*/^(),]))")


def _tokens(text: str):
    out = []
    pos = 0
    line, line_start = 1, 0
    n = len(text)
    while pos < n:
        # track newlines inside skipped whitespace
        m = _TOKEN.match(text, pos)
        ws_end = pos
        while ws_end < n and text[ws_end].isspace():
            if text[ws_end] == "\n":
                line, line_start = line + 1, ws_end + 1
            ws_end += 1
        if ws_end == n:
            break
        col = ws_end - line_start + 1
        if not m:
            raise DslError(f"unexpected character {text[ws_end]!r}", line, col,
                           {"number", "name", "(", "-"})
        kind = m.lastgroup
        out.append((kind, m.group(kind), (line, col)))
        pos = m.end()
    out.append(("end", "", (line, n - line_start + 1)))
    return out


class _Parser:
    def __init__(self, text: str, known=None):
        self.toks = _tokens(text)
        self.i = 0
        self.known = known

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value, expected=None):
        t = self.next()
        if t[1] != value or t[0] == "end":
            self.fail(t, f"expected {value!r}", expected or {value})
        return t

    def fail(self, tok, msg, expected):
        got = "end of input" if tok[0] == "end" else repr(tok[1])
        raise DslError(f"{msg}, got {got}", tok[2][0], tok[2][1], expected)

    def parse(self):
        e = self.expr()
        t = self.peek()
        if t[0] != "end":
            self.fail(t, "unexpected token", {"+", "-", "*", "/", "^", "end of input"})
        return e

    def expr(self):
        e = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            t = self.next()
            e = BinOp(t[1], e, self.term(), t[2])
        return e

    def term(self):
        e = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            t = self.next()
            e = BinOp(t[1], e, self.unary(), t[2])
        return e

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] == "-":
            self.next()
            return Neg(self.unary(), t[2])
        if t[0] == "op" and t[1] == "+":
            self.next()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.next()
            sign = 1
            if self.peek()[1] == "-" and self.peek()[0] == "op":
                self.next()
                sign = -1
            n = self.next()
            if n[0] != "num":
                self.fail(n, "exponent must be an integer literal", {"integer"})
            return Pow(base, sign * int(n[1]), t[2])
        return base

    def atom(self):
        t = self.next()
        if t[0] == "num":
            return Num(int(t[1]), t[2])
        if t[0] == "name":
            if self.peek()[1] == "(" and self.peek()[0] == "op":
                if t[1] not in FUNCTIONS:
                    raise DslError(f"unknown function {t[1]!r}", *t[2], FUNCTIONS)
                self.next()
                args = [self.expr()]
                while self.peek()[1] == ",":
                    self.next()
                    args.append(self.expr())
                self.expect(")", {",", ")"})
                arity = FUNCTIONS[t[1]]
                if len(args) != arity:
                    raise DslError(f"{t[1]} takes {arity} argument(s), got {len(args)}", *t[2])
                return Call(t[1], tuple(args), t[2])
            if t[1] in FUNCTIONS:
                raise DslError(f"function {t[1]!r} needs arguments", *t[2], {"("})
            if self.known is not None and not self.known(t[1]):
                raise DslError(_unknown_message(t[1]), *t[2])
            return Name(t[1], t[2])
        if t[0] == "op" and t[1] == "(":
            e = self.expr()
            self.expect(")", {")", "+", "-", "*", "/", "^"})
            return e
        self.fail(t, "expected an operand", {"number", "name", "("})


def _unknown_message(name: str) -> str:
    if re.fullmatch(r"X'?[0-9]+", name):
        return f"unknown generator {name!r}"
    return f"unknown identifier {name!r}"


def parse(text: str, known=None):
    """Parse text into an AST.  ``known(name) -> bool`` enables identifier checks."""
    return _Parser(text, known).parse()


# -- printer -----------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def to_text(node) -> str:
    return _show(node, 0)


def _show(node, ctx: int) -> str:
    # ctx is the weakest binding the parent accepts without parentheses:
    # sums 1, products 2, unary minus 3, powers 4, atoms 5
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Name):
        return node.id
    if isinstance(node, Call):
        return node.fn + "(" + ", ".join(_show(a, 0) for a in node.args) + ")"
    if isinstance(node, Pow):
        s = _show(node.base, 5) + "^" + str(node.exp)
        prec = 4
    elif isinstance(node, Neg):
        s = "-" + _show(node.arg, 3)
        prec = 3
    elif isinstance(node, BinOp):
        prec = _PREC[node.op]
        sep = f" {node.op} " if prec == 1 else node.op
        s = _show(node.left, prec) + sep + _show(node.right, prec + 1)
    else:
        raise TypeError(f"not an AST node: {node!r}")
    return f"({s})" if prec < ctx else s


def names_in(node) -> set:
    out = set()
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, Name):
            out.add(n.id)
        elif isinstance(n, Neg):
            stack.append(n.arg)
        elif isinstance(n, BinOp):
            stack += [n.left, n.right]
        elif isinstance(n, Pow):
            stack.append(n.base)
        elif isinstance(n, Call):
            stack += list(n.args)
    return out


def sum_terms(node) -> list:
    """Flatten top-level +/- into [(sign, term)]."""
    if isinstance(node, BinOp) and node.op in "+-":
        left = sum_terms(node.left)
        right = sum_terms(node.right)
        if node.op == "-":
            right = [(-s, t) for s, t in right]
        return left + right
    if isinstance(node, Neg):
        return [(-s, t) for s, t in sum_terms(node.arg)]
    return [(1, node)]


def product_factors(node) -> list:
    """Flatten a left-nested product into its ordered factors (division kept as a factor)."""
    if isinstance(node, BinOp) and node.op == "*":
        return product_factors(node.left) + product_factors(node.right)
    return [node]


def join_product(factors):
    if not factors:
        return Num(1)
    out = factors[0]
    for f in factors[1:]:
        out = BinOp("*", out, f)
    return out


# -- scalars -----------------------------------------------------------------

def parse_scalar(text: str) -> Scalar:
    """Read a Scalar from its canonical text (or any DSL text over numbers, params and i)."""
    node = parse(text, known=lambda n: n in PARAMS or n == "i")
    return evaluate(node, ScalarEngine())


class ScalarEngine:
    kind = "scalar"

    def const(self, c):
        return Scalar(c) if not isinstance(c, Scalar) else c

    def lookup(self, name, node):
        if name == "i":
            return Scalar.gaussian(0, 1)
        if name in PARAMS:
            return Scalar.param(name)
        raise DslError(f"unknown identifier {name!r}", *node.pos)

    def mul(self, a, b):
        return a * b

    def power(self, a, n, node):
        if n < 0:
            raise DslError("negative exponent on a scalar", *node.pos)
        return a ** n

    def divide(self, a, b, node):
        if not b.is_constant() or b.is_zero():
            raise DslError("division only by nonzero constants", *node.pos)
        return a * b.inverse()

    def as_constant(self, v):
        return v if v.is_constant() else None

    def call(self, fn, args, node):
        raise DslError(f"{fn} is not available for scalars", *node.pos)


def evaluate(node, engine):
    if isinstance(node, Num):
        return engine.const(mpq(node.value))
    if isinstance(node, Name):
        return engine.lookup(node.id, node)
    if isinstance(node, Neg):
        return -evaluate(node.arg, engine)
    if isinstance(node, BinOp):
        a = evaluate(node.left, engine)
        b = evaluate(node.right, engine)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return engine.mul(a, b)
        return engine.divide(a, b, node)
    if isinstance(node, Pow):
        return engine.power(evaluate(node.base, engine), node.exp, node)
    if isinstance(node, Call):
        args = [evaluate(a, engine) for a in node.args]
        return engine.call(node.fn, args, node)
    raise TypeError(f"not an AST node: {node!r}")
