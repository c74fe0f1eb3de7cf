import json

import jsonschema
import pandas as pd

from checkers import ConditionReport, Status, reports_to_frame
from config import DOCS_DIR
from order_extensions import predecessors_from_edges, wfp_compute
from reporting import (generate_final_report, render_reports_json, render_reports_text,
                       wfp_document, wfp_lines)

PASSED = ConditionReport(1, Status.PASS, 12, 5, note='bounded', order_name='theta(F_1)')
FAILED = ConditionReport(0, Status.FAIL, 3, 5, witness={'property': 'irreflexivity', 'x': 'a'},
                         order_name='always')


def test_text_rendering():
    text = render_reports_text([PASSED, FAILED])
    lines = text.splitlines()
    assert lines[0] == "condition 1 (contains the subterm relation): PASS"
    assert "  witness: property=irreflexivity, x=a" in lines
    assert lines[-1] == "overall: FAIL"


def test_json_rendering_matches_schema():
    schema = json.loads((DOCS_DIR / "report_schema.json").read_text())
    document = json.loads(render_reports_json([PASSED, FAILED]))
    jsonschema.validate(document, schema)
    assert document['overall'] == 'FAIL'
    assert document['reports'][1]['witness'] == {'property': 'irreflexivity', 'x': 'a'}


def test_wfp_rendering():
    result = wfp_compute(predecessors_from_edges([('y', 'x'), ('z', 'z')]), ['x', 'y', 'z'], 10)
    assert wfp_lines(result) == ["x ACCESSIBLE rank 1", "y ACCESSIBLE rank 0",
                                 "z NON_ACCESSIBLE cycle z > z"]
    document = wfp_document(result)
    assert document['nodes'][2] == {'node': 'z', 'status': 'NON_ACCESSIBLE', 'cycle': ['z']}
    assert document['budget_used'] == 3


def test_final_report():
    suites = pd.DataFrame([{'suite': 'trichotomy', 'checked': 625, 'violations': 0,
                            'status': 'PASS', 'detail': ''}])
    chains = pd.DataFrame([{'order': 'theta(F_1)', 'start': 'f_1(1,1)', 'length': 3,
                            'height': 3}])
    report = generate_final_report({'terms': 33, 'seed': 7}, suites,
                                   reports_to_frame([PASSED, FAILED]), chains)
    assert "SIMPORD WORKBENCH REPORT" in report
    assert "Seed: 7" in report
    assert "[FAIL] condition 0 for always" in report
    assert "Failed checks: 1" in report
