"""
simpord command line

    python src/cli.py ord cmp "t(1,0)" "t(t(1,0))"
    python src/cli.py term cmp --order theta --k 1 "g(1,1)" "f_1(1,1)"
    python src/cli.py check --order theta --k 1 --conditions 1,2,3 --max-size 4
    python src/cli.py embed --k 1 "f_1(1,1)"
    python src/cli.py termof --k 1 "t(1,0)"
    python src/cli.py wfp edges.txt --nodes a,b
    python src/cli.py enum ords --max-nodes 2 --max-vector-len 2

Exit status: 0 pass, 1 fail with witness, 2 usage or parse error,
3 inconclusive.
"""

import argparse
import json
import sys
from typing import List, Optional, Tuple

from checkers import (ConditionChecker, Precedence, lex_arg_orders, load_arg_orders,
                      lpo_lt, lpo_order, overall_exit_code)
from config import *
from errors import ConfigError, WorkbenchError
from order_extensions import predecessors_from_edges, wfp_compute
from ordinals import Ordering, compare, enumerate_notations, format_ordinal, parse_ordinal, plus_map
from relation_generator import read_edge_file
from reporting import render_reports_json, render_reports_text, wfp_document, wfp_lines
from terms import Signature, enumerate_terms, format_term, load_signature, parse_term
from theta_embedding import arg_orders, build_context, denote, term_of, theta_order


# ===== HELPERS =====

def _split(text: Optional[str]) -> List[str]:
    if not text:
        return []
    return [part.strip() for part in text.split(',') if part.strip()]


def _parse_conditions(text: str) -> List[int]:
    try:
        conditions = [int(x) for x in _split(text)]
    except ValueError:
        raise ConfigError(f"conditions must be a comma list of 0..3, got '{text}'")
    if not conditions or any(c not in (0, 1, 2, 3) for c in conditions):
        raise ConfigError(f"conditions must be a comma list of 0..3, got '{text}'")
    return conditions


def _lpo_setup(args: argparse.Namespace) -> Tuple[Signature, Precedence]:
    if not args.sig or not args.prec:
        raise ConfigError("--order lpo requires --sig and --prec")
    sig = load_signature(args.sig)
    return sig, Precedence.from_names(sig, _split(args.prec))


def _emit(text: str) -> None:
    print(text)


# ===== COMMANDS =====

def cmd_ord_cmp(args: argparse.Namespace) -> int:
    a = parse_ordinal(args.a)
    b = parse_ordinal(args.b)
    _emit(compare(a, b).name)
    return EXIT_PASS


def cmd_term_cmp(args: argparse.Namespace) -> int:
    if args.order == 'theta':
        ctx = build_context(args.k)
        s = parse_term(args.s, ctx.signature)
        t = parse_term(args.t, ctx.signature)
        a, b = denote(ctx, s), denote(ctx, t)
        _emit(compare(a, b).name)
        _emit(f"o({format_term(s)}) = {format_ordinal(a)}")
        _emit(f"o({format_term(t)}) = {format_ordinal(b)}")
        return EXIT_PASS

    sig, prec = _lpo_setup(args)
    s = parse_term(args.s, sig)
    t = parse_term(args.t, sig)
    if s == t:
        verdict = Ordering.EQUAL
    elif lpo_lt(prec, s, t):
        verdict = Ordering.LESS
    elif lpo_lt(prec, t, s):
        verdict = Ordering.GREATER
    else:
        verdict = None
    _emit(verdict.name if verdict else 'INCOMPARABLE')
    return EXIT_PASS


def cmd_check(args: argparse.Namespace) -> int:
    conditions = _parse_conditions(args.conditions)
    if args.max_size < 1:
        raise ConfigError("--max-size must be at least 1")

    if args.order == 'theta':
        ctx = build_context(args.k)
        sig = ctx.signature
        order = theta_order(ctx)
        defaults = arg_orders(ctx)
    else:
        sig, prec = _lpo_setup(args)
        order = lpo_order(prec)
        defaults = lex_arg_orders(order, sig)

    per_symbol = defaults
    if args.arg_orders:
        per_symbol = load_arg_orders(args.arg_orders, order, sig, defaults)

    universe = list(enumerate_terms(sig, args.max_size))
    checker = ConditionChecker(order, per_symbol, universe, budget=args.budget, seed=args.seed)
    reports = checker.run(conditions)

    if args.format == 'json':
        _emit(render_reports_json(reports))
    else:
        _emit(render_reports_text(reports))
    return overall_exit_code(reports)


def cmd_embed(args: argparse.Namespace) -> int:
    ctx = build_context(args.k)
    t = parse_term(args.term, ctx.signature)
    _emit(format_ordinal(denote(ctx, t)))
    return EXIT_PASS


def cmd_termof(args: argparse.Namespace) -> int:
    ctx = build_context(args.k)
    a = parse_ordinal(args.ordinal)
    t = term_of(ctx, a)
    image = denote(ctx, t)
    target = plus_map(a)
    _emit(format_term(t))
    if image == target:
        _emit(f"check: o({format_term(t)}) = {format_ordinal(image)} = plus({format_ordinal(a)})")
        return EXIT_PASS
    _emit(f"check FAILED: o({format_term(t)}) = {format_ordinal(image)}, "
          f"plus({format_ordinal(a)}) = {format_ordinal(target)}")
    return EXIT_FAIL


def cmd_wfp(args: argparse.Namespace) -> int:
    nodes, edges = read_edge_file(args.edges, _split(args.nodes))
    result = wfp_compute(predecessors_from_edges(edges), nodes, args.budget)
    if args.format == 'json':
        _emit(json.dumps(wfp_document(result), indent=2))
    else:
        for line in wfp_lines(result):
            _emit(line)
    return EXIT_PASS


def cmd_enum(args: argparse.Namespace) -> int:
    if args.kind == 'terms':
        sig = load_signature(args.sig) if args.sig else build_context(args.k).signature
        items = (format_term(t) for t in enumerate_terms(sig, args.max_size))
    else:
        items = (format_ordinal(a)
                 for a in enumerate_notations(args.max_nodes, args.max_vector_len))
    if args.count:
        _emit(str(sum(1 for _ in items)))
    else:
        for item in items:
            _emit(item)
    return EXIT_PASS


# ===== PARSER =====

def _add_order_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--order', choices=ORDER_NAMES, default=DEFAULT_ORDER,
                        help='theta (F_k signature) or lpo (needs --sig and --prec)')
    parser.add_argument('--k', type=int, default=DEFAULT_K, help='F_k for --order theta')
    parser.add_argument('--sig', help='signature JSON file for --order lpo')
    parser.add_argument('--prec', help='precedence, lowest first, e.g. a,g')


def build_parser() -> argparse.ArgumentParser:
    budget = budget_from_env(DEFAULT_BUDGET)
    parser = argparse.ArgumentParser(
        prog='simpord',
        description='Termination-order workbench: ordinal notations, term orders and '
                    'bounded checks of well-foundedness conditions.'
    )
    commands = parser.add_subparsers(dest='command', required=True)

    ord_parser = commands.add_parser('ord', help='ordinal notation commands')
    ord_commands = ord_parser.add_subparsers(dest='ord_command', required=True)
    ord_cmp = ord_commands.add_parser('cmp', help='compare two notations')
    ord_cmp.add_argument('a')
    ord_cmp.add_argument('b')
    ord_cmp.set_defaults(func=cmd_ord_cmp)

    term_parser = commands.add_parser('term', help='term commands')
    term_commands = term_parser.add_subparsers(dest='term_command', required=True)
    term_cmp = term_commands.add_parser('cmp', help='compare two terms')
    _add_order_args(term_cmp)
    term_cmp.add_argument('s')
    term_cmp.add_argument('t')
    term_cmp.set_defaults(func=cmd_term_cmp)

    check = commands.add_parser('check', help='bounded condition checks')
    _add_order_args(check)
    check.add_argument('--conditions', default='1,2,3',
                       help='comma list; 0 is the proper-order check')
    check.add_argument('--max-size', type=int, default=DEFAULT_MAX_SIZE)
    check.add_argument('--budget', type=int, default=budget)
    check.add_argument('--format', choices=OUTPUT_FORMATS, default=DEFAULT_FORMAT)
    check.add_argument('--seed', type=int, default=DEFAULT_SEED)
    check.add_argument('--arg-orders', help='JSON file overriding argument orders')
    check.set_defaults(func=cmd_check)

    embed = commands.add_parser('embed', help='denotation of a term over F_k')
    embed.add_argument('--k', type=int, default=DEFAULT_K)
    embed.add_argument('term')
    embed.set_defaults(func=cmd_embed)

    termof = commands.add_parser('termof', help='term whose denotation is plus(a)')
    termof.add_argument('--k', type=int, default=DEFAULT_K)
    termof.add_argument('ordinal')
    termof.set_defaults(func=cmd_termof)

    wfp = commands.add_parser('wfp', help='well-founded part of an edge file')
    wfp.add_argument('edges')
    wfp.add_argument('--nodes', help='extra nodes, comma separated')
    wfp.add_argument('--budget', type=int, default=budget)
    wfp.add_argument('--format', choices=OUTPUT_FORMATS, default=DEFAULT_FORMAT)
    wfp.set_defaults(func=cmd_wfp)

    enum = commands.add_parser('enum', help='enumerate terms or notations')
    enum.add_argument('kind', choices=['terms', 'ords'])
    enum.add_argument('--k', type=int, default=DEFAULT_K)
    enum.add_argument('--sig')
    enum.add_argument('--max-size', type=int, default=DEFAULT_MAX_SIZE)
    enum.add_argument('--max-nodes', type=int, default=ORDINAL_MAX_NODES)
    enum.add_argument('--max-vector-len', type=int, default=ORDINAL_MAX_VECTOR_LEN)
    enum.add_argument('--count', action='store_true', help='print only the count')
    enum.set_defaults(func=cmd_enum)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return int(args.func(args))
    except (WorkbenchError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RecursionError:
        print("error: input nested too deeply", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
