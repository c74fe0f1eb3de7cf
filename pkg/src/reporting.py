"""
Reporting Module
Text and JSON renderings of condition reports and well-founded-part results,
and the pipeline's final text report
"""

import json
from typing import Any, Callable, Dict, List, Sequence

import pandas as pd

from checkers import ConditionReport, Status, overall_exit_code
from config import *
from order_extensions import Accessible, NonAccessible, WfpResult

_EXIT_VERDICT = {EXIT_PASS: 'PASS', EXIT_FAIL: 'FAIL', EXIT_INCONCLUSIVE: 'INCONCLUSIVE'}


# ===== CONDITION REPORTS =====

def report_lines(report: ConditionReport) -> List[str]:
    data = report.to_dict()
    lines = [f"condition {report.condition} ({report.title}): {report.status.value}"]
    if report.order_name:
        lines.append(f"  order: {report.order_name}")
    lines.append(f"  pairs checked: {report.pairs_checked}, universe size: "
                 f"{report.universe_size}, budget used: {report.budget_used}")
    if report.seed is not None:
        lines.append(f"  seed: {report.seed}")
    if 'witness' in data:
        parts = ', '.join(f"{k}={v}" for k, v in data['witness'].items())
        lines.append(f"  witness: {parts}")
    if report.note:
        lines.append(f"  note: {report.note}")
    return lines


def render_reports_text(reports: Sequence[ConditionReport]) -> str:
    lines: List[str] = []
    for report in reports:
        lines.extend(report_lines(report))
    lines.append(f"overall: {_EXIT_VERDICT[overall_exit_code(reports)]}")
    return '\n'.join(lines)


def reports_document(reports: Sequence[ConditionReport]) -> Dict[str, Any]:
    """JSON document described by docs/report_schema.json"""
    return {
        'reports': [r.to_dict() for r in reports],
        'overall': _EXIT_VERDICT[overall_exit_code(reports)],
    }


def render_reports_json(reports: Sequence[ConditionReport]) -> str:
    return json.dumps(reports_document(reports), indent=2)


# ===== WELL-FOUNDED PART =====

def wfp_lines(result: WfpResult, label: Callable[[Any], str] = str) -> List[str]:
    """
    One line per node in classification order:
    `x ACCESSIBLE rank 1`, `x NON_ACCESSIBLE cycle x > y > x`,
    `x UNKNOWN budget-exhausted via y`
    """
    lines = []
    for node, c in result.classification.items():
        if isinstance(c, Accessible):
            lines.append(f"{label(node)} ACCESSIBLE rank {c.rank}")
        elif isinstance(c, NonAccessible):
            loop = ' > '.join(label(x) for x in c.cycle + c.cycle[:1])
            line = f"{label(node)} NON_ACCESSIBLE cycle {loop}"
            if c.via is not None:
                line += f" via {label(c.via)}"
            lines.append(line)
        else:
            line = f"{label(node)} UNKNOWN {c.reason}"
            if c.via is not None:
                line += f" via {label(c.via)}"
            lines.append(line)
    return lines


def wfp_document(result: WfpResult, label: Callable[[Any], str] = str) -> Dict[str, Any]:
    nodes = []
    for node, c in result.classification.items():
        entry: Dict[str, Any] = {'node': label(node), 'status': c.status}
        if isinstance(c, Accessible):
            entry['rank'] = c.rank
        elif isinstance(c, NonAccessible):
            entry['cycle'] = [label(x) for x in c.cycle]
        else:
            entry['reason'] = c.reason
        if not isinstance(c, Accessible) and c.via is not None:
            entry['via'] = label(c.via)
        nodes.append(entry)
    return {'nodes': nodes, 'budget_used': result.budget_used, 'height': result.height(),
            'counts': result.counts()}


# ===== FINAL REPORT =====

def generate_final_report(summary: Dict[str, Any],
                          suites: pd.DataFrame,
                          condition_reports: pd.DataFrame,
                          chains: pd.DataFrame) -> str:
    """
    Plain-text report for the full pipeline run

    Args:
        summary: Universe sizes and timings
        suites: One row per property suite (suite, checked, violations, status)
        condition_reports: Rows from reports_to_frame
        chains: One row per descending-chain search
    """
    report = "=" * 80 + "\n"
    report += "SIMPORD WORKBENCH REPORT\n"
    report += "Bounded checks of well-foundedness conditions for term orders\n"
    report += "=" * 80 + "\n\n"

    report += "RUN SUMMARY\n"
    report += "-" * 80 + "\n"
    report += f"Run Date: {pd.Timestamp.now().strftime('%B %d, %Y')}\n"
    report += f"Seed: {summary.get('seed', DEFAULT_SEED)}\n"
    for key, value in summary.items():
        if key == 'seed':
            continue
        label = key.replace('_', ' ').title()
        if isinstance(value, float):
            report += f"{label}: {value:,.2f}\n"
        elif isinstance(value, int):
            report += f"{label}: {value:,}\n"
        else:
            report += f"{label}: {value}\n"
    report += "\n"

    report += "PROPERTY SUITES\n"
    report += "-" * 80 + "\n"
    for _, row in suites.iterrows():
        report += f"{row['suite']}: {row['status']}\n"
        report += f"   Checked: {row['checked']:,}\n"
        report += f"   Violations: {row['violations']:,}\n"
        if isinstance(row.get('detail'), str) and row['detail']:
            report += f"   Detail: {row['detail']}\n"
        report += "\n"

    report += "CONDITION CHECKS\n"
    report += "-" * 80 + "\n"
    for _, row in condition_reports.iterrows():
        report += f"[{row['status']}] condition {row['condition']} for {row['order']}: {row['title']}\n"
        report += f"   Universe: {row['universe_size']:,} terms, pairs checked: {row['pairs_checked']:,}\n"
        if isinstance(row['witness'], str):
            report += f"   Witness: {row['witness']}\n"
        report += "\n"

    report += "DESCENDING CHAIN SEARCHES\n"
    report += "-" * 80 + "\n"
    for _, row in chains.iterrows():
        report += f"{row['order']} from {row['start']}: length {row['length']} (height {row['height']})\n"
    report += "\n"

    failed = int((condition_reports['status'] == Status.FAIL.value).sum()) \
        + int((suites['status'] == Status.FAIL.value).sum())
    report += "CAVEAT\n"
    report += "-" * 80 + "\n"
    report += "Every verdict above concerns the finite universes examined.\n"
    report += "A PASS means no counterexample was found there, not that a condition\n"
    report += "holds for all ground terms.\n"
    report += f"Failed checks: {failed}\n\n"

    report += "=" * 80 + "\n"
    report += "END OF REPORT\n"
    report += "=" * 80 + "\n"

    return report
