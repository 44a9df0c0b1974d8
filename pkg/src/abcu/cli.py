"""Command-line interface.

One query per invocation.  Exit status 0 means the answer was computed
(and is in the report), 2 means an input error, 3 means an enumeration
budget was exceeded.  ``--output machine`` prints a JSON report with
every probability as an exact ``num/den`` fraction, the method tag and
any requested witness; reports are byte-stable for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import decide, optimize, probability, reductions
from .axioms import AXIOMS, Violation, axiom_violation
from .io import Document, document_for, emit_document, parse_document, parse_dimacs, parse_edge_list
from .model import BudgetError, InputError
from .uncertainty import (
    CandidateProbModel,
    JointModel,
    LotteryModel,
    PlausibleProfile,
    ThreeValuedModel,
    cp_to_lottery,
    first_plausible,
    lottery_to_joint,
    plausible_count,
    tva_to_cp,
)


def _load_document(path: str) -> Document:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return parse_document(text)


def _need_committee(doc: Document):
    if doc.committee is None:
        raise InputError("this query needs a 'committee' entry in the document")
    return doc.committee


def _certain_profile(doc: Document):
    if plausible_count(doc.model) != 1:
        raise InputError(
            f"this query needs a certain profile, but the model has "
            f"{plausible_count(doc.model)} plausible profiles"
        )
    return first_plausible(doc.model).profile


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _machine_value(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        return _frac(value)
    if isinstance(value, Violation):
        return {
            "axiom": value.axiom,
            "ell": value.ell,
            "group": list(value.group),
            "common": list(value.common),
        }
    if isinstance(value, PlausibleProfile):
        return {"profile": [list(s) for s in value.profile], "prob": _frac(value.prob)}
    if isinstance(value, tuple):
        return [_machine_value(v) for v in value]
    if isinstance(value, dict):
        return {k: _machine_value(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_machine_value(v) for v in value]
    return value


def _human_value(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, Fraction):
        return f"{value} (approx. {float(value):.6f})"
    if isinstance(value, (Violation, PlausibleProfile, dict, list, tuple)):
        return json.dumps(_machine_value(value))
    return str(value)


def _render(payload: dict, output: str) -> None:
    if output == "machine":
        print(json.dumps(_machine_value(payload), indent=2, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {_human_value(value)}")


def _decision_payload(result: decide.DecisionResult, witness: bool) -> dict:
    payload: dict = {"answer": result.answer, "method": result.method}
    if result.witness_committee is not None:
        payload["committee"] = list(result.witness_committee)
    if witness:
        if result.witness_profile is not None:
            payload["witness_profile"] = result.witness_profile
        if result.witness_violation is not None:
            payload["witness_violation"] = result.witness_violation
    return payload


# ---------------------------------------------------------------------------
# command handlers: each returns (payload or document text, exit status)


def cmd_validate(args) -> int:
    try:
        _load_document(args.file)
    except InputError as exc:
        _render({"valid": False, "errors": str(exc).split("; ")}, args.output)
        return 2
    _render({"valid": True, "errors": []}, args.output)
    return 0


def cmd_convert(args) -> int:
    doc = _load_document(args.file)
    model = doc.model
    if args.target == "to-lottery":
        if isinstance(model, ThreeValuedModel):
            model = cp_to_lottery(tva_to_cp(model), args.budget)
        elif isinstance(model, CandidateProbModel):
            model = cp_to_lottery(model, args.budget)
        elif isinstance(model, JointModel):
            raise InputError("a joint model has no lottery representation in general")
    else:
        if isinstance(model, ThreeValuedModel):
            model = lottery_to_joint(cp_to_lottery(tva_to_cp(model), args.budget), args.budget)
        elif isinstance(model, CandidateProbModel):
            model = lottery_to_joint(cp_to_lottery(model, args.budget), args.budget)
        elif isinstance(model, LotteryModel):
            model = lottery_to_joint(model, args.budget)
    sys.stdout.write(emit_document(document_for(model, doc.committee, doc.size)))
    return 0


def cmd_check(args) -> int:
    doc = _load_document(args.file)
    prof = _certain_profile(doc)
    w = _need_committee(doc)
    violation = axiom_violation(doc.instance, prof, w, args.axiom)
    payload: dict = {"axiom": args.axiom, "satisfied": violation is None}
    if args.witness and violation is not None:
        payload["witness_violation"] = violation
    _render(payload, args.output)
    return 0


def cmd_decide(args) -> int:
    doc = _load_document(args.file)
    w = _need_committee(doc)
    if args.mode == "poss":
        result = decide.is_poss_axiom(
            doc.model, w, args.axiom,
            budget=args.budget, force_enumeration=args.force_enumeration,
        )
    else:
        result = decide.is_nec_axiom(
            doc.model, w, args.axiom,
            budget=args.budget, force_enumeration=args.force_enumeration,
        )
    _render(_decision_payload(result, args.witness), args.output)
    return 0


def cmd_exists(args) -> int:
    doc = _load_document(args.file)
    if args.question == "poss-jr":
        result = decide.exists_poss_jr(doc.model)
    else:
        axiom = args.question.split("-", 1)[1]
        result = decide.exists_nec_axiom(
            doc.model, axiom,
            budget=args.budget, force_enumeration=args.force_enumeration,
        )
    _render(_decision_payload(result, args.witness), args.output)
    return 0


def cmd_prob(args) -> int:
    doc = _load_document(args.file)
    w = _need_committee(doc)
    result = probability.axiom_probability(
        doc.model, w, args.axiom,
        budget=args.budget, force_enumeration=args.force_enumeration,
    )
    payload: dict = {
        "axiom": args.axiom,
        "probability": result.value,
        "method": result.method,
    }
    if result.counts is not None:
        payload["satisfying"], payload["total"] = result.counts
    _render(payload, args.output)
    return 0


def cmd_count(args) -> int:
    doc = _load_document(args.file)
    w = _need_committee(doc)
    satisfying, total = probability.jr_satisfying_count(doc.model, w, budget=args.budget)
    _render(
        {"satisfying": satisfying, "total": total,
         "probability": Fraction(satisfying, total)},
        args.output,
    )
    return 0


def cmd_max(args) -> int:
    doc = _load_document(args.file)
    result = optimize.max_axiom(
        doc.model, args.axiom,
        budget=args.budget, force_enumeration=args.force_enumeration,
    )
    _render(
        {"axiom": args.axiom, "committee": list(result.committee),
         "value": result.value, "ties": result.ties},
        args.output,
    )
    return 0


def cmd_sizejr(args) -> int:
    doc = _load_document(args.file)
    prof = _certain_profile(doc)
    size = args.size if args.size is not None else doc.size
    if size is None:
        raise InputError("sizejr needs --size or a 'size' entry in the document")
    found, w = optimize.size_jr(doc.instance, prof, size)
    payload: dict = {"answer": found, "size": size}
    if w is not None:
        payload["committee"] = list(w)
    _render(payload, args.output)
    return 0


def cmd_reduce(args) -> int:
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc}") from None
    if args.gadget == "3sat":
        model, _, w = reductions.reduce_3sat(parse_dimacs(text))
    else:
        model, _, w = reductions.reduce_vc(parse_edge_list(text))
    sys.stdout.write(emit_document(document_for(model, w)))
    return 0


def cmd_gen(args) -> int:
    model = reductions.gen_random(
        args.kind, args.voters, args.candidates, args.committee_size,
        args.uncertainty, args.seed,
    )
    sys.stdout.write(emit_document(document_for(model)))
    return 0


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help="enumeration cap (profiles/committees; default 2^20)")
    common.add_argument("--force-enumeration", action="store_true",
                        help="skip polynomial special cases, enumerate everything")
    common.add_argument("--seed", type=int, default=0, help="generator seed")
    common.add_argument("--witness", action="store_true",
                        help="include witnesses in the report")
    common.add_argument("--output", choices=("human", "machine"), default="human",
                        help="report style")

    parser = argparse.ArgumentParser(
        prog="abcu",
        description="Exact approval-based committee voting under uncertainty.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate a document")
    p.add_argument("file")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("convert", parents=[common], help="convert between model kinds")
    p.add_argument("target", choices=("to-lottery", "to-joint"))
    p.add_argument("file")
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser("check", parents=[common],
                       help="check an axiom on a certain profile")
    p.add_argument("axiom", choices=AXIOMS)
    p.add_argument("file")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("decide", parents=[common],
                       help="possible/necessary satisfaction of a committee")
    p.add_argument("mode", choices=("poss", "nec"))
    p.add_argument("axiom", choices=AXIOMS)
    p.add_argument("file")
    p.set_defaults(handler=cmd_decide)

    p = sub.add_parser("exists", parents=[common],
                       help="existence of a possibly/necessarily satisfying committee")
    p.add_argument("question", choices=("poss-jr", "nec-jr", "nec-pjr", "nec-ejr"))
    p.add_argument("file")
    p.set_defaults(handler=cmd_exists)

    p = sub.add_parser("prob", parents=[common],
                       help="exact satisfaction probability of a committee")
    p.add_argument("axiom", choices=AXIOMS)
    p.add_argument("file")
    p.set_defaults(handler=cmd_prob)

    p = sub.add_parser("count", parents=[common],
                       help="count satisfying profiles (three-valued models)")
    p.add_argument("file")
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("max", parents=[common],
                       help="probability-maximizing committee")
    p.add_argument("axiom", choices=AXIOMS)
    p.add_argument("file")
    p.set_defaults(handler=cmd_max)

    p = sub.add_parser("sizejr", parents=[common],
                       help="JR committee of a given size below k")
    p.add_argument("file")
    p.add_argument("--size", type=int, default=None,
                   help="target committee size (overrides the document)")
    p.set_defaults(handler=cmd_sizejr)

    p = sub.add_parser("reduce", parents=[common],
                       help="build a document from a CNF formula or a graph")
    p.add_argument("gadget", choices=("3sat", "vc"))
    p.add_argument("file")
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("gen", parents=[common], help="generate a random model")
    p.add_argument("--kind", required=True, choices=reductions.KINDS)
    p.add_argument("--voters", type=int, required=True)
    p.add_argument("--candidates", type=int, required=True)
    p.add_argument("--committee-size", type=int, required=True)
    p.add_argument("--uncertainty", type=int, default=0)
    p.set_defaults(handler=cmd_gen)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
