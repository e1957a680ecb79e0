"""Command-line entry point: ``fuzzysim <subcommand> ...``.

Exit codes: 0 success, 1 negative outcome (violations found, relation
mismatch), 2 usage error, 3 parse error, 4 validation error, 5 precondition
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import DegreeError, TNorm, degree, format_degree
from .characterization import (LogicalPreorderParams, PreconditionError, WitnessBuilder,
                               hm_relation, preservation_test)
from .logic import (EvaluationError, FormulaSyntaxError, classify, eval_formula,
                    eval_program, parse_formula, parse_program)
from .model import ModelError, ModelParseError, Signature, dumps, random_flts, read_flts
from .simulation import (CrispRelation, OracleBoundError, brute_force_largest,
                         check_directed_simulation, check_simulation, refine)

EXIT_NEGATIVE = 1
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_PRECONDITION = 5

DEFAULT_SEED = 20240101

_MEMBER_ORDER = ("fedKDelta", "fedPDL", "fpdK", "fpdPDL")


def _decimal(d: Fraction) -> str:
    text = format_degree(d)
    if "/" in text:
        return f"{text} ~ {float(d):.6f}"
    if d.denominator == 1:
        return text
    return f"{d.numerator}/{d.denominator} = {text}"


def _emit(args, payload, text: str):
    out = json.dumps(payload, indent=2, sort_keys=True) if args.json else text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _models(args):
    return read_flts(args.model_a), read_flts(args.model_b)


def cmd_eval(args) -> int:
    m = read_flts(args.model)
    f = parse_formula(args.formula)
    values = eval_formula(m, f, args.tnorm)
    _emit(args, {"formula": str(f), "tnorm": args.tnorm.value,
                 "values": {s: format_degree(v) for s, v in values.items()}},
          "\n".join(f"{s}: {_decimal(v)}" for s, v in values.items()))
    return 0


def cmd_prog_eval(args) -> int:
    m = read_flts(args.model)
    p = parse_program(args.program)
    rel = eval_program(m, p, args.tnorm)
    nonzero = {k: v for k, v in rel.items() if v > 0}
    _emit(args, {"program": str(p), "tnorm": args.tnorm.value,
                 "values": [[x, y, format_degree(v)] for (x, y), v in nonzero.items()]},
          "\n".join(f"({x},{y}): {_decimal(v)}" for (x, y), v in nonzero.items()) or "(empty)")
    return 0


def cmd_simulate(args) -> int:
    m, m2 = _models(args)
    ref = refine(m, m2, directed=args.directed, order_seed=None)
    payload = {"directed": args.directed, "relation": ref.relation.to_json(),
               "rounds": ref.rounds}
    text = str(ref.relation)
    code = 0
    if args.oracle:
        oracle = brute_force_largest(m, m2, args.directed, args.oracle_bound)
        agree = oracle.pairs == ref.relation.pairs
        payload["oracle_agrees"] = agree
        text += f"\noracle: {'agrees' if agree else 'DISAGREES: ' + str(oracle)}"
        code = 0 if agree else EXIT_NEGATIVE
    _emit(args, payload, text)
    return code


def cmd_check(args) -> int:
    m, m2 = _models(args)
    with open(args.relation, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelParseError(exc.msg, exc.lineno, exc.colno) from None
    z = CrispRelation.from_json(m, m2, data)
    report = (check_directed_simulation if args.directed else check_simulation)(m, m2, z)
    kind = "directed simulation" if args.directed else "simulation"
    text = f"is a {kind}" if report.ok else "\n".join(str(v) for v in report)
    _emit(args, {"ok": report.ok, "violations": [v.to_json() for v in report]}, text)
    return 0 if report.ok else EXIT_NEGATIVE


def cmd_distinguish(args) -> int:
    m, m2 = _models(args)
    for s, model in ((args.state_a, m), (args.state_b, m2)):
        if s not in model.states:
            raise ModelError(f"unknown state {s!r}")
    res = WitnessBuilder(m, m2, args.directed).distinguish(args.state_a, args.state_b, args.tnorm)
    if res.related:
        text = "related"
    else:
        text = (f"{res.formula}\n  value at {args.state_a}: {_decimal(res.left)}"
                f"\n  value at {args.state_b}: {_decimal(res.right)}\n  fragment: {res.fragment}")
    _emit(args, res.to_json(), text)
    return 0


def cmd_hm_verify(args) -> int:
    m, m2 = _models(args)
    params = LogicalPreorderParams(args.fragment, args.tnorm, args.depth)
    res = hm_relation(m, m2, params)
    fixpoint = refine(m, m2, directed=params.directed).relation
    matches = res.relation.pairs == fixpoint.pairs
    state = f"converged at depth {res.depth}" if res.converged else f"not converged by depth {res.depth}"
    verdict = "relation matches fixpoint" if matches else f"relation differs from fixpoint {fixpoint}"
    payload = res.to_json()
    payload["matches_fixpoint"] = matches
    _emit(args, payload, f"{state}; {verdict}\n{res.relation}")
    return 0 if matches else EXIT_NEGATIVE


def cmd_preserve(args) -> int:
    m, m2 = _models(args)
    params = LogicalPreorderParams(args.fragment, args.tnorm, args.depth)
    if args.relation:
        with open(args.relation, encoding="utf-8") as fh:
            z = CrispRelation.from_json(m, m2, json.load(fh))
    else:
        z = refine(m, m2, directed=params.directed).relation
    rep = preservation_test(m, m2, z, params, args.samples, args.seed)
    text = (f"{rep.n_formulas} formulas, {rep.n_checks} checks, "
            f"{len(rep.violations)} violations")
    for v in rep.violations[:10]:
        text += f"\n  {v.formula} at {v.pair}: {format_degree(v.left)} > {format_degree(v.right)}"
    _emit(args, rep.to_json(), text)
    return 0 if rep.ok else EXIT_NEGATIVE


def cmd_fragment(args) -> int:
    f = parse_formula(args.formula)
    rep = classify(f)
    members = [n for n in _MEMBER_ORDER if rep.member(n)]
    others = [n for n in reversed(_MEMBER_ORDER) if not rep.member(n)]
    text = ", ".join(members) if members else "fdPDL only"
    if others:
        text += "; not " + ", ".join(others)
    _emit(args, {"formula": str(f), "fragments": members}, text)
    return 0


def cmd_random(args) -> int:
    sig = Signature(tuple(args.actions.split(",")), tuple(args.props.split(",")))
    grid = [degree(g) for g in args.grid.split(",")]
    m = random_flts(args.states, sig, Fraction(args.density), grid, args.seed)
    text = dumps(m).rstrip("\n")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--output", "-o", help="write output to this file")
    tn = argparse.ArgumentParser(add_help=False)
    tn.add_argument("--tnorm", type=TNorm.parse, default=TNorm.GOEDEL,
                    help="godel (default), lukasiewicz or product")
    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("model_a")
    pair.add_argument("model_b")

    ap = argparse.ArgumentParser(prog="fuzzysim", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common, tn], help="evaluate a formula")
    p.add_argument("model")
    p.add_argument("formula")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("prog-eval", parents=[common, tn], help="evaluate a program")
    p.add_argument("model")
    p.add_argument("program")
    p.set_defaults(fn=cmd_prog_eval)

    p = sub.add_parser("simulate", parents=[common, pair],
                       help="largest (directed) simulation")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    p.add_argument("--oracle-bound", type=int, default=16)
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("check", parents=[common, pair], help="check a relation file")
    p.add_argument("relation", help="JSON list of [x, x'] pairs")
    p.add_argument("--directed", action="store_true")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("distinguish", parents=[common, tn], help="distinguishing formula")
    p.add_argument("model_a")
    p.add_argument("state_a")
    p.add_argument("model_b")
    p.add_argument("state_b")
    p.add_argument("--directed", action="store_true")
    p.set_defaults(fn=cmd_distinguish)

    p = sub.add_parser("hm-verify", parents=[common, pair, tn],
                       help="logical preorder vs. fixpoint relation")
    p.add_argument("--fragment", choices=("fedKDelta", "fpdK"), default="fedKDelta")
    p.add_argument("--depth", type=int, default=10)
    p.set_defaults(fn=cmd_hm_verify)

    p = sub.add_parser("preserve", parents=[common, pair, tn],
                       help="sample formulas and check preservation")
    p.add_argument("--fragment", choices=("fedPDL", "fedKDelta", "fpdPDL", "fpdK"),
                   default="fedPDL")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--relation", help="JSON pair list (default: the largest relation)")
    p.set_defaults(fn=cmd_preserve)

    p = sub.add_parser("fragment", parents=[common], help="classify a formula")
    p.add_argument("formula")
    p.set_defaults(fn=cmd_fragment)

    p = sub.add_parser("random", parents=[common], help="generate a random model")
    p.add_argument("--states", type=int, default=4)
    p.add_argument("--actions", default="r")
    p.add_argument("--props", default="p")
    p.add_argument("--density", default="1/2")
    p.add_argument("--grid", default="0.25,0.5,0.75,1")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(fn=cmd_random)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (FormulaSyntaxError, ModelParseError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, OracleBoundError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ModelError, EvaluationError, DegreeError, ValueError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
