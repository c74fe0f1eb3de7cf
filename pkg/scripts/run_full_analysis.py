"""
Complete Workbench Pipeline Runner
Builds the desk-scale universes, runs every property suite and condition
check, and saves tables, figures and the final report
"""

import sys
from functools import cmp_to_key
from itertools import permutations
from pathlib import Path
import time

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from config import *
from checkers import (ConditionChecker, Precedence, load_arg_orders, lex_arg_orders,
                      lpo_order, make_arg_order, order_violations, reports_to_frame,
                      search_descending_chain)
from order_extensions import (OrderOracle, accessible_brute, dm_multiset_lt, pair_multiset_lt,
                              predecessors_from_edges, universe_height, wfp_compute)
from ordinals import compare, enumerate_notations, format_ordinal, notation_size, ord_lt, plus_map
from relation_generator import RelationGenerator
from reporting import generate_final_report
from terms import (Term, count_terms, enumerate_terms, format_term, load_signature,
                   parse_term, small_signatures, term_size)
from theta_embedding import arg_orders, build_context, denote, term_of, theta_order
from visualization import WorkbenchVisualizer
import numpy as np
import pandas as pd


def print_section(title: str):
    """Print formatted section header"""
    print("\n" + "=" * 80)
    print(f" {title}")
    print("=" * 80 + "\n")


def suite_row(suite: str, checked: int, violations: int, detail: str = '') -> dict:
    return {'suite': suite, 'checked': checked, 'violations': violations,
            'status': 'PASS' if violations == 0 else 'FAIL', 'detail': detail}


def sampled_pairs(n: int, rng: np.random.Generator, exhaustive: bool):
    if exhaustive:
        return ((i, j) for i in range(n) for j in range(n))
    return ((int(i), int(j)) for i, j in rng.integers(0, n, size=(PAIR_SAMPLES, 2)))


def main():
    """
    Run complete workbench pipeline
    """
    start_time = time.time()
    ensure_output_dirs()
    rng = np.random.default_rng(DEFAULT_SEED)
    suites = []

    print_section("SIMPORD WORKBENCH: BOUNDED WELL-FOUNDEDNESS CHECKS")

    # ===== STEP 1: UNIVERSES =====
    print_section("STEP 1: BUILDING UNIVERSES")

    print(f"📊 Enumerating notations with <= {ORDINAL_MAX_NODES} nodes, "
          f"vectors <= {ORDINAL_MAX_VECTOR_LEN}...")
    notations = list(enumerate_notations(ORDINAL_MAX_NODES, ORDINAL_MAX_VECTOR_LEN))
    small = [a for a in notations if notation_size(a) <= ORDINAL_EXHAUSTIVE_NODES]
    print(f"✅ {len(notations):,} notations ({len(small):,} with <= {ORDINAL_EXHAUSTIVE_NODES} nodes)")

    growth_rows = []
    signatures = {f"F_{k}": build_context(k).signature for k in range(CHECK_MAX_K + 1)}
    signatures['a,f,g'] = load_signature(FIXTURES_DIR / 'sig_afg.json')
    for label, sig in signatures.items():
        counts = count_terms(sig, CHECK_MAX_SIZE + 2)
        enumerated = [0] * len(counts)
        for t in enumerate_terms(sig, CHECK_MAX_SIZE + 2):
            enumerated[term_size(t)] += 1
        mismatches = sum(1 for a, b in zip(counts, enumerated) if a != b)
        suites.append(suite_row(f"enumeration count ({label})", len(counts) - 1, mismatches))
        for size, count in enumerate(counts[1:], 1):
            growth_rows.append({'signature': label, 'size': size, 'count': count})
    growth_df = pd.DataFrame(growth_rows)
    print(growth_df.pivot(index='size', columns='signature', values='count').to_string())

    # ===== STEP 2: ORDINAL ORDER =====
    print_section("STEP 2: TOTAL ORDER ON NOTATIONS")

    notation_order = OrderOracle(ord_lt, name='ordinal')
    print("--- Trichotomy ---")
    trich = order_violations(notation_order, small)
    suites.append(suite_row('trichotomy (exhaustive)', len(small) ** 2, len(trich)))
    bad = 0
    pairs = 0
    for i, j in sampled_pairs(len(notations), rng, exhaustive=False):
        pairs += 1
        a, b = notations[i], notations[j]
        if ord_lt(a, b) + (a == b) + ord_lt(b, a) != 1:
            bad += 1
    suites.append(suite_row('trichotomy (sampled)', pairs, bad))
    print(f"✅ Trichotomy: {len(trich)} exhaustive and {bad} sampled violations")

    print("\n--- Transitivity ---")
    checker = ConditionChecker(notation_order, {}, notations, budget=TRANSITIVITY_TRIPLES,
                               seed=DEFAULT_SEED, verbose=True)
    proper = checker.run((0,))[0]
    suites.append(suite_row('irreflexivity and transitivity', proper.budget_used,
                            0 if proper.status.value == 'PASS' else 1, proper.note))

    # ===== STEP 3: EMBEDDINGS =====
    print_section("STEP 3: PLUS MAP AND TERM EMBEDDING")

    bad = 0
    pairs = 0
    for i, j in sampled_pairs(len(small), rng, exhaustive=True):
        pairs += 1
        a, b = small[i], small[j]
        if compare(a, b) != compare(plus_map(a), plus_map(b)):
            bad += 1
    suites.append(suite_row('plus map order embedding', pairs, bad))
    print(f"✅ Plus map: {bad} violations over {pairs:,} pairs")

    ctx = build_context(ORDINAL_MAX_VECTOR_LEN - 1)
    bad = sum(1 for a in notations if denote(ctx, term_of(ctx, a)) != plus_map(a))
    suites.append(suite_row(f"embedding law (k={ctx.k})", len(notations), bad))
    print(f"✅ Embedding law: {bad} violations over {len(notations):,} notations")

    # ===== STEP 4: ORDER EXTENSIONS =====
    print_section("STEP 4: MULTISET EXTENSION AGREEMENT")

    ints = OrderOracle(lambda x, y: x < y, name='int')
    carrier = range(MULTISET_CARRIER_SIZE)
    tuples = [(x, y) for x in carrier for y in carrier]
    print(f"📊 Comparing {len(tuples) ** 2:,} pairs of pairs...")
    bad = sum(1 for t in tuples for s in tuples
              if pair_multiset_lt(ints, t, s) != dm_multiset_lt(ints, t, s))
    suites.append(suite_row('pair vs Dershowitz-Manna multiset', len(tuples) ** 2, bad))
    print(f"✅ Disagreements: {bad}")

    # ===== STEP 5: WELL-FOUNDED PART =====
    print_section("STEP 5: WELL-FOUNDED PART ORACLE")

    generator = RelationGenerator(seed=DEFAULT_SEED)
    graphs = generator.random_graphs()
    bad = 0
    for nodes, edges in graphs:
        result = wfp_compute(predecessors_from_edges(edges), nodes, budget=len(nodes))
        if result.accessible() != accessible_brute(edges, nodes):
            bad += 1
    graphs_df = generator.graphs_frame(graphs)
    suites.append(suite_row('wfp vs brute-force fixpoint', len(graphs), bad))
    print(f"✅ {len(graphs)} random graphs, {bad} disagreements")

    # ===== STEP 6: CONDITION CHECKS =====
    print_section("STEP 6: CONDITION CHECKS")

    reports = []
    for k in range(CHECK_MAX_K + 1):
        ctx_k = build_context(k)
        universe = list(enumerate_terms(ctx_k.signature, CHECK_MAX_SIZE))
        checker = ConditionChecker(theta_order(ctx_k), arg_orders(ctx_k), universe,
                                   budget=DEFAULT_BUDGET, verbose=True)
        reports += checker.run_all()

    ctx_1 = build_context(1)
    chain_universe = list(enumerate_terms(ctx_1.signature, CHAIN_SEARCH_MAX_SIZE))

    print("\n--- LPO over small signatures ---")
    lpo_runs = 0
    for sig in small_signatures():
        universe = list(enumerate_terms(sig, CHECK_MAX_SIZE))
        for ranking in permutations(sig):
            prec = Precedence(sig, ranking)
            order = lpo_order(prec)
            lpo_runs += 1
            reports += ConditionChecker(order, lex_arg_orders(order, sig), universe).run((0, 1, 2))
    print(f"✅ {lpo_runs} precedences checked")

    print("\n--- Negative controls ---")
    sig_ag = load_signature(FIXTURES_DIR / 'sig_ag.json')
    prec_ag = Precedence.from_names(sig_ag, ['a', 'g'])
    order_ag = lpo_order(prec_ag)
    universe_ag = list(enumerate_terms(sig_ag, CHECK_MAX_SIZE))
    revlex = {sig_ag.get('g'): make_arg_order(order_ag, 'revlex')}
    reports += ConditionChecker(order_ag, revlex, universe_ag, verbose=True).run((2,))
    planted = load_arg_orders(FIXTURES_DIR / 'arg_orders_planted_cycle.json', order_ag, sig_ag)
    reports += ConditionChecker(order_ag, planted, list(enumerate_terms(sig_ag, 3)),
                                verbose=True).run((3,))

    reports_df = reports_to_frame(reports)
    print(reports_df.groupby(['condition', 'status']).size().to_string())

    # ===== STEP 7: DESCENDING CHAINS =====
    print_section("STEP 7: DESCENDING CHAIN SEARCHES")

    chain_rows = []
    order_1 = theta_order(ctx_1)
    base_wfp = wfp_compute(lambda x: [u for u in chain_universe if order_1.lt(u, x)],
                           chain_universe, DEFAULT_BUDGET)
    height = universe_height(base_wfp)
    for text in ['f_1(1,1)', 'g(1,1)', '1']:
        start = parse_term(text, ctx_1.signature)
        chain = search_descending_chain(order_1, start, universe=chain_universe)
        chain_rows.append({'order': order_1.name, 'start': text, 'length': len(chain) - 1,
                           'height': height, 'chain': ' > '.join(map(format_term, chain))})

    g = sig_ag.get('g')
    a = Term(sig_ag.get('a'), ())
    broken = OrderOracle(lambda s, t: term_size(s) > term_size(t), name='size-increasing')
    chain = search_descending_chain(broken, a, neighbor_gen=lambda t: [Term(g, (t, a))],
                                    max_len=CHAIN_MAX_LEN)
    chain_rows.append({'order': broken.name, 'start': 'a', 'length': len(chain) - 1,
                       'height': None, 'chain': ' > '.join(map(format_term, chain))})
    chains_df = pd.DataFrame(chain_rows)
    print(chains_df[['order', 'start', 'length', 'height']].to_string(index=False))

    # Save tables
    suites_df = pd.DataFrame(suites)
    suites_df.to_csv(PROCESSED_DATA_DIR / 'property_suites.csv', index=False)
    reports_df.to_csv(PROCESSED_DATA_DIR / 'condition_reports.csv', index=False)
    chains_df.to_csv(PROCESSED_DATA_DIR / 'descending_chains.csv', index=False)
    growth_df.to_csv(PROCESSED_DATA_DIR / 'universe_growth.csv', index=False)
    graphs_df.to_csv(PROCESSED_DATA_DIR / 'random_graphs.csv', index=False)
    wfp_df = base_wfp.to_frame(label=format_term)
    wfp_df.to_csv(PROCESSED_DATA_DIR / 'term_ranks.csv', index=False)
    print(f"💾 Saved tables to {PROCESSED_DATA_DIR}")

    # ===== STEP 8: VISUALIZATIONS =====
    print_section("STEP 8: CREATING VISUALIZATIONS")

    viz = WorkbenchVisualizer()
    heat = sorted((a for a in notations if notation_size(a) <= HEATMAP_MAX_NODES),
                  key=cmp_to_key(lambda x, y: compare(x, y).value))
    viz.plot_comparison_heatmap(heat, [format_ordinal(a) for a in heat],
                                lambda x, y: compare(x, y).value)
    viz.plot_condition_summary(reports_df)
    viz.plot_rank_histogram(wfp_df)
    viz.plot_universe_growth(growth_df)

    # ===== STEP 9: FINAL REPORT =====
    print_section("STEP 9: GENERATING FINAL REPORT")

    summary = {
        'seed': DEFAULT_SEED,
        'notations': len(notations),
        'notations_checked_exhaustively': len(small),
        'theta_term_universe_f1': len(chain_universe),
        'lpo_precedences': lpo_runs,
        'random_graphs': len(graphs),
        'elapsed_seconds': time.time() - start_time,
    }
    report = generate_final_report(summary, suites_df, reports_df, chains_df)
    report_path = REPORTS_DIR / 'workbench_report.txt'
    with open(report_path, 'w', encoding='utf-8') as f:
        f.write(report)

    print(f"💾 Final report saved to: {report_path}")

    # ===== COMPLETE =====
    elapsed_time = time.time() - start_time

    print_section("PIPELINE EXECUTION COMPLETE!")

    print(f"⏱️  Total execution time: {elapsed_time:.2f} seconds")
    print(f"\n📁 All outputs saved to:")
    print(f"   - Data: {PROCESSED_DATA_DIR}")
    print(f"   - Figures: {FIGURES_DIR}")
    print(f"   - Reports: {REPORTS_DIR}")

    failures = int((suites_df['status'] == 'FAIL').sum())
    print(f"\n✅ {len(suites_df) - failures}/{len(suites_df)} property suites passed")


if __name__ == "__main__":
    main()
