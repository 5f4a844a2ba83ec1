"""Typo diagnosis for failing checks.

Stages, each tried only when the previous one found nothing:

1. declared variants of the equation;
2. single sign flips on the +/- nodes of the right-hand side;
3. a correction to one term's coefficient;
4. a joint correction over all terms of the check (or a declared basis).

Coefficients range over polynomials of bounded degree in the Cartan
generators X1, X2 (enveloping-algebra checks) and the parameters the check
mentions, times 1 or i.  Every candidate is re-parsed and re-evaluated
before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .. import linsolve
from ..dsl import BinOp, Call, Name, Neg, Num, Pow, join_product, names_in, parse, product_factors, \
    sum_terms, to_text
from ..engines import CONTRACTED, UEA
from ..scalar import I, PARAMS

MAX_SIGN_NODES = 24


@dataclass
class Candidate:
    kind: str  # variant | sign | coefficient | ansatz
    description: str
    lhs: str
    rhs: str

    def to_dict(self):
        return {"kind": self.kind, "description": self.description, "lhs": self.lhs, "rhs": self.rhs}


class RepairError(ValueError):
    pass


class Memo:
    """DSL evaluation with a per-check cache of sub-expression values."""

    def __init__(self, engine):
        self.engine = engine
        self.cache: dict = {}

    def __call__(self, node):
        hit = self.cache.get(node)
        if hit is not None:
            return hit
        e = self.engine
        if isinstance(node, Num):
            v = e.const(node.value)
        elif isinstance(node, Name):
            v = e.lookup(node.id, node)
        elif isinstance(node, Neg):
            v = -self(node.arg)
        elif isinstance(node, BinOp):
            a, b = self(node.left), self(node.right)
            if node.op == "+":
                v = a + b
            elif node.op == "-":
                v = a - b
            elif node.op == "*":
                v = e.mul(a, b)
            else:
                v = e.divide(a, b, node)
        elif isinstance(node, Pow):
            v = e.power(self(node.base), node.exp, node)
        elif isinstance(node, Call):
            v = e.call(node.fn, [self(a) for a in node.args], node)
        else:
            raise TypeError(node)
        self.cache[node] = v
        return v


def _has_i(v) -> bool:
    return any(pk[-1] for (_m, pk) in v._t)


def _vector(v) -> dict:
    return v._t


def _is_cartan_poly(v, uea_like: bool) -> bool:
    if uea_like:
        return all(not any(m[2:]) for (m, _pk) in v._t)
    return all(not any(m) for (m, _pk) in v._t)


def _split_term(node, value_of, uea_like):
    """(coefficient factors, core factors) of one product term."""
    factors = product_factors(node)
    k = 0
    while k < len(factors) and _is_cartan_poly(value_of(factors[k]), uea_like):
        k += 1
    return factors[:k], factors[k:]


def _monomials(gens: list, limit: int, one, mul):
    """Products of generators with total weight <= limit; gens are (text, value, weight)."""
    out = [("1", one, 0)]
    frontier = [((), one, 0)]
    while frontier:
        nxt = []
        for combo, v, w in frontier:
            start = combo[-1] if combo else 0
            for g in range(start, len(gens)):
                text, gv, gw = gens[g]
                if w + gw > limit:
                    continue
                item = (combo + (g,), mul(v, gv), w + gw)
                nxt.append(item)
                out.append(("*".join(gens[k][0] for k in item[0]), item[1], item[2]))
        frontier = nxt
    return [(t, v) for t, v, _w in out]


class _Context:
    """Everything the repair stages need for one check."""

    def __init__(self, check, env, residual_of, ideal_zero):
        self.check = check
        self.env = env
        self.engine = env.engine()
        self.ev = Memo(self.engine)
        self.uea_like = env.kind in (UEA, CONTRACTED) and check.transform is None
        self.residual_of = residual_of  # (lhs value, rhs value) -> residual after transform
        self.ideal_zero = ideal_zero  # residual -> bool
        self.lhs_node = parse(check.lhs)
        self.rhs_node = parse(check.rhs)
        self.lhs = self.ev(self.lhs_node)
        self.rhs = self.ev(self.rhs_node)
        self.residual = residual_of(self.lhs, self.rhs)

    def holds(self, lhs_text, rhs_text) -> bool:
        lv = self.ev(parse(lhs_text))
        rv = self.ev(parse(rhs_text))
        return self.ideal_zero(self.residual_of(lv, rv))

    def coefficient_gens(self):
        chk = self.check
        if chk.coeff_gens:
            out = []
            for g in chk.coeff_gens:
                text, w = (g, 1) if isinstance(g, str) else g
                out.append((text, self.ev(parse(text)), w))
            return out
        names = ["X1", "X2"] if self.uea_like else []
        mentioned = names_in(self.lhs_node) | names_in(self.rhs_node)
        names += [p for p in PARAMS if p in mentioned]
        return [(n, self.ev(Name(n)), 1) for n in names]

    def degree(self):
        return self.check.ansatz_degree if self.check.ansatz_degree is not None else 2


def _flip_nodes(node, path=()):
    """Paths to every sign-carrying node: binary +/- and unary minus."""
    out = []
    if isinstance(node, BinOp):
        if node.op in "+-":
            out.append(path)
        out += _flip_nodes(node.left, path + ("left",))
        out += _flip_nodes(node.right, path + ("right",))
    elif isinstance(node, Neg):
        out.append(path)
        out += _flip_nodes(node.arg, path + ("arg",))
    elif isinstance(node, Pow):
        out += _flip_nodes(node.base, path + ("base",))
    elif isinstance(node, Call):
        for k, a in enumerate(node.args):
            out += _flip_nodes(a, path + (k,))
    return out


def _flip(node, path):
    if not path:
        if isinstance(node, Neg):
            return node.arg
        return BinOp("-" if node.op == "+" else "+", node.left, node.right, node.pos)
    head, rest = path[0], path[1:]
    if isinstance(head, int):
        args = list(node.args)
        args[head] = _flip(args[head], rest)
        return Call(node.fn, tuple(args), node.pos)
    kw = {f: getattr(node, f) for f in node.__dataclass_fields__}
    kw[head] = _flip(getattr(node, head), rest)
    return type(node)(**kw)


def _at(node, path):
    for p in path:
        node = node.args[p] if isinstance(p, int) else getattr(node, p)
    return node


def _stage_variants(ctx):
    out = []
    for v in ctx.check.variants:
        lhs = v.lhs or ctx.check.lhs
        if ctx.holds(lhs, v.rhs):
            out.append(Candidate("variant", f"declared variant holds: {v.label}", lhs, v.rhs))
    return out


def _stage_signs(ctx):
    paths = _flip_nodes(ctx.rhs_node)
    if len(paths) > MAX_SIGN_NODES:
        return []
    out = []
    for path in paths:
        new = _flip(ctx.rhs_node, path)
        text = to_text(new)
        if ctx.holds(ctx.check.lhs, text):
            site = to_text(_at(ctx.rhs_node, path))
            out.append(Candidate("sign", f"flip the sign in {site}", ctx.check.lhs, text))
    return out


def _core_entries(ctx, node, side):
    """[(side, sign, coefficient nodes, core node)] for each top-level term."""
    out = []
    for sign, term in sum_terms(node):
        coef, core = _split_term(term, ctx.ev, ctx.uea_like)
        out.append((side, sign, coef, join_product(core)))
    return out


def _columns(ctx, cores, monos_for):
    need_i = _has_i(ctx.residual) or any(_has_i(ctx.ev(c)) for c in cores)
    iv = ctx.engine.scalar_value(I)
    cols, labels = [], []
    for core in cores:
        cv = ctx.ev(core)
        for mtext, mv in monos_for(core):
            base = ctx.residual_of(ctx.engine.mul(mv, cv), None)
            cols.append(_vector(base))
            labels.append((core, mtext, mv, False))
            if need_i:
                cols.append(_vector(ctx.residual_of(ctx.engine.mul(ctx.engine.mul(iv, mv), cv), None)))
                labels.append((core, mtext, mv, True))
    return cols, labels


def _deltas(ctx, x, labels):
    """core -> delta value (engine element) from a solution vector."""
    iv = ctx.engine.scalar_value(I)
    out: dict = {}
    for c, (core, _mt, mv, imag) in zip(x, labels):
        if not c:
            continue
        term = mv * c
        if imag:
            term = ctx.engine.mul(iv, term)
        out[core] = out[core] + term if core in out else term
    return {k: v for k, v in out.items() if v}


def _render_delta(v) -> str:
    return str(v)


def _amended(ctx, deltas) -> str:
    text = ctx.check.rhs
    for core, d in deltas.items():
        text = f"{text} + ({_render_delta(d)})" + ("" if core == Num(1) else f"*{_wrap_node(core)}")
    return text


def _wrap_node(core) -> str:
    text = to_text(core)
    return text if isinstance(core, (Name, Call)) else f"({text})"


def _stage_single(ctx):
    gens = ctx.coefficient_gens()
    one = ctx.engine.const(1)
    monos = _monomials(gens, ctx.degree(), one, ctx.engine.mul)
    entries = _core_entries(ctx, ctx.rhs_node, "rhs") + _core_entries(ctx, ctx.lhs_node, "lhs")
    entries.append(("rhs", 1, [], Num(1)))
    unique, values = [], []
    for e in entries:
        v = ctx.ev(e[3])
        if v and not any(v == w for w in values):
            unique.append(e)
            values.append(v)
    target = _vector(ctx.residual)
    out = []
    for side, sign, coef, core in unique:
        cols, labels = _columns(ctx, [core], lambda _c: monos)
        x = linsolve.solve(cols, target)
        if x is None:
            continue
        deltas = _deltas(ctx, x, labels)
        rhs = _amended(ctx, deltas)
        if not ctx.holds(ctx.check.lhs, rhs):
            continue
        d = deltas.get(core)
        old = ctx.ev(join_product(coef)) if coef else one
        old = old if sign > 0 else -old
        new = old + d if side == "rhs" else old - d
        desc = f"coefficient of {to_text(core)} on the {'right' if side == 'rhs' else 'left'}: " \
               f"{old} -> {new}"
        out.append(Candidate("coefficient", desc, ctx.check.lhs, rhs))
    return out


def _stage_ansatz(ctx):
    gens = ctx.coefficient_gens()
    one = ctx.engine.const(1)
    deg = ctx.degree()
    if ctx.check.basis:
        cores, limits = [], {}
        for b in ctx.check.basis:
            text, d = (b, deg) if isinstance(b, str) else b
            node = parse(text)
            cores.append(node)
            limits[node] = d
    else:
        entries = _core_entries(ctx, ctx.rhs_node, "rhs") + _core_entries(ctx, ctx.lhs_node, "lhs")
        cores = []
        for _s, _sg, _c, core in entries + [("rhs", 1, [], Num(1))]:
            v = ctx.ev(core)
            if v and not any(v == ctx.ev(c) for c in cores):
                cores.append(core)
        limits = {c: deg for c in cores}
    table = {d: _monomials(gens, d, one, ctx.engine.mul) for d in set(limits.values())}
    cols, labels = _columns(ctx, cores, lambda c: table[limits[c]])
    x = linsolve.solve(cols, _vector(ctx.residual))
    if x is None:
        return []
    deltas = _deltas(ctx, x, labels)
    rhs = _amended(ctx, deltas)
    if not ctx.holds(ctx.check.lhs, rhs):
        return []
    desc = "add " + "; ".join(f"({d})*{_wrap_node(c)}" if c != Num(1) else f"({d})"
                              for c, d in deltas.items()) + " to the right-hand side"
    return [Candidate("ansatz", desc, ctx.check.lhs, rhs)]


def repair(check, env, residual_of, ideal_zero, stages=("variants", "signs", "single", "ansatz")):
    """Candidate corrections for a failing check, from the first stage that finds any.

    ``residual_of(lhs, rhs)`` maps values to the residual that must vanish
    (rhs may be None, meaning zero); ``ideal_zero`` decides vanishing,
    modulo a constraint ideal where the check has one.
    """
    ctx = _Context(check, env, residual_of, ideal_zero)
    if ideal_zero(ctx.residual):
        raise RepairError(f"{check.id} holds; nothing to repair")
    funcs = {"variants": _stage_variants, "signs": _stage_signs,
             "single": _stage_single, "ansatz": _stage_ansatz}
    for s in stages:
        if s in ("single", "ansatz") and check.ideal:
            continue
        found = funcs[s](ctx)
        if found:
            return found
    return []
