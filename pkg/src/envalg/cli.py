"""Command-line front end.

    envalg nf -e "X4*X3"
    envalg comm T1 T2
    envalg pb T1 T2 --ideal sphere+momentum
    envalg verify --group sec3.table --format json
    envalg contract --weights 0,0,1,1,0,0,1,1 --dump
    envalg repl

Exit status: 0 on success (and for ``verify`` when nothing FAILs), 1 when
``verify`` reports a FAIL, 2 for usage, parse and evaluation errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .contract import ContractionSpec, DivergentContraction, contract_algebra
from .dsl import DslError, parse
from .envs import ENVIRONMENTS, generators_env, get_env
from .lie import LieAlgebra, LieAlgebraError, su3
from .realize import PhaseElement, WeylElement, ideal_member, poisson_bracket, sphere_ideal

IDEALS = ("none", "sphere", "sphere+momentum")


class CliError(Exception):
    pass


def _load_algebra(args):
    if not getattr(args, "algebra", None):
        return None
    try:
        with open(args.algebra, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise CliError(f"cannot read {args.algebra}: {e.strerror}") from None
    try:
        return LieAlgebra.from_json(text, check_jacobi=not args.no_jacobi_check)
    except (ValueError, KeyError, TypeError) as e:
        raise CliError(f"{args.algebra}: {e}") from None


def _env(args):
    L = _load_algebra(args)
    if L is not None and L != su3():
        if args.env not in (None, "standard"):
            raise CliError(f"--env {args.env} is only available for the built-in su3")
        return generators_env(L)
    return get_env(args.env or "standard")


def _eval(env, text):
    node = parse(text, known=env.known)
    eng = env.engine()
    value = eng.run(node)
    return value, sorted(eng.notes)


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_nf(args):
    env = _env(args)
    text = args.expr if args.expr is not None else args.text
    if text is None:
        raise CliError("nf needs an expression (-e EXPR)")
    value, notes = _eval(env, text)
    _emit(args, {"env": env.name, "expr": text, "result": str(value), "notes": notes}, str(value))
    return 0


def cmd_comm(args):
    env = _env(args)
    a, _ = _eval(env, args.a)
    b, _ = _eval(env, args.b)
    eng = env.engine()
    if "comm" not in eng.functions:
        raise CliError(f"no commutator in the {env.kind} engine")
    value = eng.fn_comm(a, b)
    _emit(args, {"env": env.name, "a": args.a, "b": args.b, "result": str(value)}, str(value))
    return 0


def cmd_pb(args):
    env = get_env(args.env or "classical")
    if env.kind != "POISSON":
        raise CliError("pb needs the classical environment")
    a, _ = _eval(env, args.a)
    b, _ = _eval(env, args.b)
    value = poisson_bracket(a, b)
    payload = {"env": env.name, "a": args.a, "b": args.b, "result": str(value)}
    lines = [str(value)]
    if args.ideal and args.ideal != "none" and value:
        ideal = sphere_ideal(PhaseElement, momentum=args.ideal == "sphere+momentum")
        m = ideal_member(value, ideal, value.cleared_degree() + 2)
        payload["ideal"] = {"name": args.ideal, "status": m.status, "bound": m.bound}
        lines.append(f"modulo {args.ideal} (degree bound {m.bound}): {m.status.replace('_', ' ')}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_verify(args):
    from .suite import run_suite
    from .suite.runner import UnknownGroup
    groups = args.group or ["all"]
    try:
        report = run_suite(groups, do_repair=not args.no_repair, oracle=not args.no_oracle,
                           timing=args.timing, seed=args.seed, ideal_override=args.ideal)
    except UnknownGroup as e:
        raise CliError(str(e)) from None
    if args.format == "json":
        print(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return report.exit_code()


def cmd_contract(args):
    L = _load_algebra(args) or su3()
    try:
        spec = ContractionSpec.parse(args.weights)
        C = contract_algebra(L, spec, check_jacobi=not args.no_jacobi_check)
    except DivergentContraction as e:
        raise CliError(str(e)) from None
    except (ValueError, LieAlgebraError) as e:
        raise CliError(str(e)) from None
    if args.dump:
        print(C.to_json())
        return 0
    lines = [f"{C.name} ({C.dim} generators, weights {','.join(map(str, spec.weights))})"]
    vanished = []
    for i in range(1, L.dim + 1):
        for j in range(i + 1, L.dim + 1):
            before = L.bracket(i, j)
            after = C.bracket(i, j)
            if after:
                lines.append(f"[{C.labels[i - 1]},{C.labels[j - 1]}] = {_lin_text(C, after)}")
            elif before:
                vanished.append(f"[{C.labels[i - 1]},{C.labels[j - 1]}]")
    lines.append(f"vanished ({len(vanished)}): " + (", ".join(vanished) if vanished else "none"))
    print("\n".join(lines))
    return 0


def _lin_text(L, terms):
    from .uea import EAElement
    return str(EAElement.linear(L, {k: c for k, c in terms}))


def cmd_repl(args):
    env = _env(args)
    local: dict = {}
    stream = sys.stdin
    interactive = stream.isatty()
    while True:
        if interactive:
            sys.stdout.write(f"{env.name}> ")
            sys.stdout.flush()
        line = stream.readline()
        if not line:
            break
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line in (":q", ":quit", "quit", "exit"):
            break
        try:
            if line.startswith(":env"):
                name = line.split(None, 1)[1] if " " in line else ""
                env, local = get_env(name), {}
                print(f"environment {env.name}")
                continue
            target = None
            if "=" in line:
                target, line = (s.strip() for s in line.split("=", 1))
                if not target.isidentifier():
                    raise CliError(f"cannot bind to {target!r}")
            eng = env.engine()
            eng.bindings = {**eng.bindings, **local}
            known = lambda n: eng.known(n) or n in local  # noqa: E731
            value = eng.run(parse(line, known=known))
            if target:
                local[target] = value
            print(str(value))
        except (DslError, CliError, ValueError, ArithmeticError) as e:
            print(f"error: {e}")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="envalg", description="Exact enveloping-algebra identity checker.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, env=True):
        sp.add_argument("--algebra", metavar="FILE.json", help="Lie algebra in JSON (default: built-in su3)")
        sp.add_argument("--no-jacobi-check", action="store_true", help="load algebras without the Jacobi check")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if env:
            sp.add_argument("--env", choices=sorted(ENVIRONMENTS), default=None)

    sp = sub.add_parser("nf", help="PBW normal form of an expression")
    common(sp)
    sp.add_argument("-e", "--expr", help="expression text")
    sp.add_argument("text", nargs="?", help="expression text (alternative to -e)")
    sp.set_defaults(func=cmd_nf)

    sp = sub.add_parser("comm", help="commutator [A, B]")
    common(sp)
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(func=cmd_comm)

    sp = sub.add_parser("pb", help="Poisson bracket {A, B} on phase space")
    common(sp)
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--ideal", choices=IDEALS, default="none")
    sp.set_defaults(func=cmd_pb)

    sp = sub.add_parser("verify", help="run identity checks")
    common(sp, env=False)
    sp.add_argument("--group", action="append", help="group name or 'all' (repeatable)")
    sp.add_argument("--ideal", choices=IDEALS, default=None,
                    help="override the constraint ideal of phase-space checks")
    sp.add_argument("--timing", action="store_true", help="report wall times (makes output run-dependent)")
    sp.add_argument("--seed", type=int, default=0, help="seed for the matrix oracle's sample points")
    sp.add_argument("--no-repair", action="store_true")
    sp.add_argument("--no-oracle", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("contract", help="Inonu-Wigner contraction of an algebra")
    common(sp, env=False)
    sp.add_argument("--weights", required=True, help="comma-separated non-negative integers, one per generator")
    sp.add_argument("--dump", action="store_true", help="print the contracted algebra as JSON")
    sp.set_defaults(func=cmd_contract)

    sp = sub.add_parser("repl", help="interactive evaluation; NAME = EXPR binds, :env NAME switches")
    common(sp)
    sp.set_defaults(func=cmd_repl)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.func(args)
    except (CliError, DslError, LieAlgebraError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # output piped into head and the like
        sys.stderr.close()
        return 0


if __name__ == "__main__":
    sys.exit(main())
