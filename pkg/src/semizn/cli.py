"""Command-line surface.

Commands:
  check group|identity|inverse INSTANCE   decision procedures (exit 0/1/2)
  graph word INSTANCE --word "1 2 ..."    trace a word's graph
  graph analyze GRAPH                     structural report
  euler-close GRAPH                       union of translations, Eulerian
  syzygy INSTANCE                         relation-module generators
  frontend METABELIAN                     metabelian presentation -> instance
  verify WITNESS INSTANCE                 re-check an emitted witness

Exit status: 0 = yes/success, 1 = no/invalid, 2 = unknown, 64 = usage,
65 = malformed input.  All structured output is canonical JSON on stdout.
"""
from __future__ import annotations

import argparse
import json
import sys

from semizn import jsonio, positions
from semizn.closure import ClosureBudgetError, ClosurePreconditionError, eulerian_closure
from semizn.decide import (Budget, HypothesisError, decide_group, decide_identity,
                           decide_inverse, verify_witness)
from semizn.geometry import is_face_accessible
from semizn.ggraph import graph_of_word
from semizn.group import magnus_frontend
from semizn.jsonio import FormatError

USAGE_EXIT = 64
DATA_EXIT = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(USAGE_EXIT)


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        sys.exit(DATA_EXIT)
    except json.JSONDecodeError as exc:
        print(f"error: {path}:{exc.lineno}:{exc.colno}: {exc.msg}", file=sys.stderr)
        sys.exit(DATA_EXIT)


def _load_instance(path: str, strict: bool = False):
    try:
        gens = jsonio.instance_from_json(_load_json(path))
    except FormatError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        sys.exit(DATA_EXIT)
    if strict:
        try:
            gens.presentation.validate_strict(extra_vectors=[list(g.y) for g in gens.elements])
        except ValueError as exc:
            print(f"error: {path}: strict validation failed: {exc}", file=sys.stderr)
            sys.exit(DATA_EXIT)
    return gens


def _load_graph(path: str):
    try:
        return jsonio.graph_from_json(_load_json(path))
    except FormatError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        sys.exit(DATA_EXIT)


def _budget(args) -> Budget:
    return Budget(
        degree=args.budget_degree,
        height=args.budget_height,
        samples=args.samples,
        seed=args.seed,
        closure_n=args.closure_n,
        timeout=args.timeout,
    )


def _emit(doc):
    sys.stdout.write(jsonio.dumps(doc))


def _add_budget_flags(p):
    p.add_argument("--budget-degree", type=int, default=2)
    p.add_argument("--budget-height", type=int, default=2)
    p.add_argument("--samples", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--closure-n", type=int, default=16)
    p.add_argument("--timeout", type=float, default=None)
    p.add_argument("--certificate", action="store_true",
                   help="include per-face / per-cell detail in reports")
    p.add_argument("--strict", action="store_true",
                   help="verify rels_N and generators lie in span(gens_M)")


def build_parser() -> _Parser:
    parser = _Parser(prog="semizn", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decision procedures")
    p_check.add_argument("problem", choices=["group", "identity", "inverse"])
    p_check.add_argument("instance")
    p_check.add_argument("--target", type=int, default=1,
                         help="1-based generator index for the inverse problem")
    _add_budget_flags(p_check)

    p_graph = sub.add_parser("graph", help="graph construction and analysis")
    graph_sub = p_graph.add_subparsers(dest="graph_command", required=True)
    p_word = graph_sub.add_parser("word")
    p_word.add_argument("instance")
    p_word.add_argument("--word", required=True, help='letters, e.g. "1 2 2 3"')
    p_word.add_argument("--dot", help="also write DOT to this path")
    p_analyze = graph_sub.add_parser("analyze")
    p_analyze.add_argument("graph")
    p_analyze.add_argument("--certificate", action="store_true")

    p_close = sub.add_parser("euler-close", help="Eulerian union of translations")
    p_close.add_argument("graph")
    p_close.add_argument("--max-n", type=int, default=16)
    p_close.add_argument("--dot", help="also write the union's DOT to this path")

    p_syz = sub.add_parser("syzygy", help="relation-module generators")
    p_syz.add_argument("instance")
    p_syz.add_argument("--strict", action="store_true")

    p_front = sub.add_parser("frontend", help="metabelian presentation -> instance")
    p_front.add_argument("presentation")
    p_front.add_argument("-o", "--output", help="write the instance here instead of stdout")

    p_verify = sub.add_parser("verify", help="re-check a witness document")
    p_verify.add_argument("witness")
    p_verify.add_argument("instance")
    return parser


def _cmd_check(args) -> int:
    gens = _load_instance(args.instance, strict=args.strict)
    budget = _budget(args)
    try:
        if args.problem == "group":
            verdict = decide_group(gens, budget)
        elif args.problem == "identity":
            verdict = decide_identity(gens, budget)
        else:
            verdict = decide_inverse(gens, args.target, budget)
    except HypothesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(DATA_EXIT)
    if (args.certificate and args.problem == "group" and verdict.kind == "yes"
            and "positions" in (verdict.witness or {})):
        _, _, cells = positions.check_escape_condition(
            verdict.witness["positions"], range(1, gens.K + 1), frozenset(),
            gens.steps, want_cells=True,
        )
        verdict.witness["escape_cells"] = cells
    _emit(jsonio.verdict_to_json(verdict))
    return verdict.exit_code


def _cmd_graph_word(args) -> int:
    gens = _load_instance(args.instance)
    try:
        word = [int(tok) for tok in args.word.split()]
    except ValueError:
        print("error: --word must be space-separated integers", file=sys.stderr)
        return USAGE_EXIT
    try:
        graph = graph_of_word(gens, word)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_EXIT
    element = graph.represented_element(gens)
    doc = jsonio.graph_to_json(graph)
    doc["represents"] = {
        "y": jsonio.vector_to_json(element.y),
        "a": list(element.a),
    }
    _emit(doc)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(graph.to_dot())
    return 0


def _cmd_graph_analyze(args) -> int:
    graph = _load_graph(args.graph)
    accessible, report = is_face_accessible(graph)
    doc = {
        "symmetric": graph.is_symmetric(),
        "full_image": graph.is_full_image(),
        "face_accessible": accessible,
        "zn_generating": graph.is_zn_generating(),
        "inaccessible_faces": [r for r in report if not r["accessible"]],
    }
    if args.certificate:
        doc["faces"] = report
        fs = positions.position_polynomials(graph)
        doc["position_polynomials"] = [jsonio.poly_to_json(f) for f in fs]
    _emit(doc)
    return 0


def _cmd_euler_close(args) -> int:
    graph = _load_graph(args.graph)
    try:
        result = eulerian_closure(graph, max_n=args.max_n)
    except ClosurePreconditionError as exc:
        _emit({"error": "precondition", "failed": exc.failed, "report": exc.report})
        return 1
    except ClosureBudgetError as exc:
        _emit({"error": "budget", "max_n": exc.max_n})
        return 2
    _emit({
        "N": result.N,
        "translations": [list(z) for z in result.translations],
        "union": jsonio.graph_to_json(result.union),
    })
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(result.union.to_dot())
    return 0


def _cmd_syzygy(args) -> int:
    from semizn.algebra import syzygy_basis

    gens = _load_instance(args.instance, strict=args.strict)
    basis = syzygy_basis(gens.presentation, gens.ys, gens.steps)
    _emit({
        "K": basis.K,
        "generators": [[jsonio.poly_to_json(p) for p in g] for g in basis.generators],
    })
    return 0


def _cmd_frontend(args) -> int:
    try:
        pres, gen_words = jsonio.metabelian_from_json(_load_json(args.presentation))
    except FormatError as exc:
        print(f"error: {args.presentation}: {exc}", file=sys.stderr)
        return DATA_EXIT
    try:
        _, gens = magnus_frontend(pres, gen_words)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_EXIT
    doc = jsonio.instance_to_json(gens)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(jsonio.dumps(doc))
    else:
        _emit(doc)
    return 0


def _cmd_verify(args) -> int:
    gens = _load_instance(args.instance)
    try:
        witness = jsonio.witness_from_json(_load_json(args.witness), gens)
    except FormatError as exc:
        print(f"error: {args.witness}: {exc}", file=sys.stderr)
        return DATA_EXIT
    ok = verify_witness(witness, gens)
    _emit({"valid": ok})
    return 0 if ok else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "check":
        return _cmd_check(args)
    if args.command == "graph":
        if args.graph_command == "word":
            return _cmd_graph_word(args)
        return _cmd_graph_analyze(args)
    if args.command == "euler-close":
        return _cmd_euler_close(args)
    if args.command == "syzygy":
        return _cmd_syzygy(args)
    if args.command == "frontend":
        return _cmd_frontend(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
