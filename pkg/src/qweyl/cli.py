"""Command line front end: ``qweyl <subcommand> ...``.

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource
guard exceeded.  With ``--json`` every command prints one JSON report with
``schema: 1``; key order and list order are canonical, so identical
invocations print identical bytes.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional, Sequence

from . import verify as V
from .algebra import AlgebraError, epsilon, parse_comm, parse_element, poisson, tau_lift
from .charvariety import goldman_bracket
from .groebner import GroebnerExceeded, Limits
from .ideals import (LaurentIdeal, a_ideal_preset, eps_ideal_listed, groebner, member,
                     radical_member)
from .knotdata import apply, export_oracle, trefoil_colored_jones_oracle, unknot_J, zero_function
from .rootdata import RootDataError, parse_algebra

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_EXCEEDED = 0, 1, 2, 3
SCHEMA = 1
FUNCTIONS = ("unknot", "zero", "trefoil-left", "trefoil-right")


class UsageError(Exception):
    pass


def _ints(text: str, what: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be comma separated integers, got {text!r}") from None


def _algebra(name: str):
    try:
        return parse_algebra(name)
    except RootDataError as exc:
        raise UsageError(str(exc)) from None


def _pair(text: str, what: str):
    v = _ints(text, what)
    if len(v) != 2:
        raise UsageError(f"{what} needs two integers a,b")
    return tuple(v)


def _lattice_function(rd, name: str, framing: int = 0):
    if name == "unknot":
        return unknot_J(rd)
    if name == "zero":
        return zero_function(rd)
    if name in ("trefoil-left", "trefoil-right"):
        if rd.name != "sl2":
            raise UsageError("trefoil functions live on sl2")
        return trefoil_colored_jones_oracle(name.split("-")[1], framing)
    raise UsageError(f"unknown function {name!r}; choose from {', '.join(FUNCTIONS)}")


def _weight(rd, text: str):
    v = _ints(text, "--lambda")
    if len(v) == 1 and rd.rank == 1:
        return rd.rank1(v[0])
    if len(v) != rd.dim:
        raise UsageError(f"--lambda needs {rd.dim} integers for {rd.name}")
    return rd.canon(tuple(v))


# -- commands -------------------------------------------------------------------------


def cmd_bracket(args):
    rd = _algebra(args.algebra)
    x, y = _pair(args.x, "--x"), _pair(args.y, "--y")
    lhs = poisson(tau_lift(rd, *x), tau_lift(rd, *y))
    rhs = goldman_bracket(rd, x, y)
    equal = lhs == rhs
    det = x[0] * y[1] - x[1] * y[0]
    details = {"det": det, "poisson": str(lhs), "goldman": str(rhs), "equal": equal}
    if not equal:
        details["witness"] = {"x": list(x), "y": list(y)}
    return "pass" if equal else "fail", {"algebra": rd.name, "x": list(x), "y": list(y)}, details


def cmd_verify(args):
    vid = args.id
    params = {"id": vid, "seed": args.seed}
    try:
        if vid == "inv-rec-unknot":
            r = args.radius if args.radius is not None else 30
            params["radius"] = r
            res = V.inv_rec_unknot(r)
        elif vid == "rec-unknot-sln":
            algs = [args.algebra] if args.algebra else ["sl2", "sl3", "sl4"]
            params.update(algebras=algs, radius=args.radius)
            res = V.rec_unknot_sln(algs, args.radius)
        elif vid == "goldman":
            if args.algebra:
                cases = [(args.algebra, args.range if args.range is not None else 2)]
            else:
                cases = list(V.GOLDMAN_CASES)
            _ = [_algebra(a) for a, _r in cases]
            params["cases"] = [[a, r] for a, r in cases]
            res = V.goldman(cases, parallel=args.parallel)
        elif vid == "iva":
            res = V.iva()
        elif vid == "ivacor":
            res = V.ivacor()
        elif vid == "j-sym":
            algs = [args.algebra] if args.algebra else list(V.J_SYM_ALGEBRAS)
            r = args.radius if args.radius is not None else 20
            params.update(algebras=algs, radius=r)
            res = V.j_sym(algs, r)
        elif vid == "trefoil-annihilation":
            r = args.radius if args.radius is not None else 15
            params["radius"] = r
            res = V.trefoil_annihilation(r)
        else:  # argparse restricts the choices
            raise UsageError(f"unknown id {vid!r}")
    except (RootDataError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    return res.status, params, res.details


def cmd_apply(args):
    rd = _algebra(args.algebra)
    op = parse_element(rd, args.op)
    f = _lattice_function(rd, args.fn, args.framing)
    lam = _weight(rd, args.lam)
    value = apply(op, f, lam)
    params = {"algebra": rd.name, "op": str(op), "fn": args.fn, "lambda": list(lam)}
    return "pass", params, {"value": str(value)}


def _ideal(args) -> LaurentIdeal:
    if args.knot:
        try:
            return (a_ideal_preset if args.kind == "a" else eps_ideal_listed)(args.knot)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    if not args.gens:
        raise UsageError("give --knot or at least one --gen")
    return LaurentIdeal.from_strings(args.gens)


def cmd_groebner(args):
    I = _ideal(args)
    queries = [parse_comm(I.generators[0].rd, p) for p in args.query]
    params = {"algebra": "sl2", "generators": [str(g) for g in I.generators]}
    try:
        groebner(I, Limits())
        rows = [{"poly": str(p), "member": member(p, I), "radical_member": radical_member(p, I, Limits())}
                for p in queries]
    except GroebnerExceeded as exc:
        return "exceeded", params, {"reason": str(exc), "status": "exceeded"}
    details = {"basis_size": I.basis_size, "trivial": I.is_trivial(), "queries": rows}
    return "pass", params, details


def cmd_epsilon(args):
    rd = _algebra(args.algebra)
    x = parse_element(rd, args.expr)
    return "pass", {"algebra": rd.name, "expr": args.expr}, {"value": str(epsilon(x))}


def cmd_mul(args):
    rd = _algebra(args.algebra)
    xs = [parse_element(rd, t) for t in args.exprs]
    prod = xs[0]
    for y in xs[1:]:
        prod = prod * y
    return "pass", {"algebra": rd.name, "exprs": list(args.exprs)}, {"value": str(prod)}


def cmd_oracle_export(args):
    rd = _algebra(args.algebra)
    f = _lattice_function(rd, args.fn, args.framing)
    if rd.rank != 1:
        raise UsageError("oracle-export handles rank one algebras")
    lo, hi = args.start, args.stop
    values = json.loads(export_oracle(f, range(lo, hi + 1)))
    params = {"algebra": rd.name, "fn": args.fn, "framing": args.framing, "from": lo, "to": hi}
    return "pass", params, {"values": values}


COMMANDS = {"bracket": cmd_bracket, "verify": cmd_verify, "apply": cmd_apply, "groebner": cmd_groebner,
            "epsilon": cmd_epsilon, "mul": cmd_mul, "oracle-export": cmd_oracle_export}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    common.add_argument("--parallel", type=int, default=1, metavar="N", help="worker processes for sweeps")

    p = argparse.ArgumentParser(prog="qweyl", description="Exact computations in quantum Weyl algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bracket", parents=[common], help="compare the Poisson and Goldman brackets")
    s.add_argument("--algebra", required=True)
    s.add_argument("--x", required=True, help="a,b")
    s.add_argument("--y", required=True, help="c,d")

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("id", choices=V.VERIFY_IDS)
    s.add_argument("--algebra")
    s.add_argument("--range", type=int)
    s.add_argument("--radius", type=int)

    s = sub.add_parser("apply", parents=[common], help="apply an operator to a lattice function")
    s.add_argument("--algebra", default="sl2")
    s.add_argument("--op", required=True)
    s.add_argument("--fn", required=True, choices=FUNCTIONS)
    s.add_argument("--lambda", dest="lam", required=True, help="integer (rank one) or weight vector")
    s.add_argument("--framing", type=int, default=0)

    s = sub.add_parser("groebner", parents=[common], help="ideal membership in Q[E^{+-1}, Q^{+-1}]")
    s.add_argument("--knot", choices=FUNCTIONS[:1] + FUNCTIONS[2:])
    s.add_argument("--kind", choices=("a", "eps"), default="eps", help="A-ideal or listed q = 1 ideal")
    s.add_argument("--gen", dest="gens", action="append", default=[])
    s.add_argument("--query", action="append", default=[])

    s = sub.add_parser("epsilon", parents=[common], help="evaluate an element at q = 1")
    s.add_argument("--algebra", default="sl2")
    s.add_argument("expr")

    s = sub.add_parser("mul", parents=[common], help="multiply elements in written order")
    s.add_argument("--algebra", default="sl2")
    s.add_argument("exprs", nargs="+")

    s = sub.add_parser("oracle-export", parents=[common], help="export lattice function values")
    s.add_argument("--algebra", default="sl2")
    s.add_argument("--fn", required=True, choices=FUNCTIONS)
    s.add_argument("--from", dest="start", type=int, default=0)
    s.add_argument("--to", dest="stop", type=int, default=10)
    s.add_argument("--framing", type=int, default=0)
    return p


def _text(report: dict, elapsed: float) -> str:
    lines = [f"{report['command']}: {report['status']}"]
    for k, v in report["parameters"].items():
        lines.append(f"  {k}: {v}")
    for k, v in report["details"].items():
        lines.append(f"  {k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}")
    lines.append(f"  time: {elapsed:.2f}s")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    start = time.perf_counter()
    try:
        status, params, details = COMMANDS[args.command](args)
    except (UsageError, AlgebraError) as exc:
        print(f"qweyl {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GroebnerExceeded as exc:
        status, params, details = "exceeded", {}, {"reason": str(exc)}
    report = {"schema": SCHEMA, "command": args.command, "argv": argv,
              "algebra": params.get("algebra", getattr(args, "algebra", None)), "parameters": params, "status": status,
              "details": details}
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(_text(report, time.perf_counter() - start))
    return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "exceeded": EXIT_EXCEEDED}[status]


if __name__ == "__main__":
    sys.exit(main())
