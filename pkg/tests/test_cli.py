import json

import jsonschema
import pytest

from cli import main
from config import (BUDGET_ENV_VAR, DOCS_DIR, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_PASS,
                    EXIT_USAGE)
from errors import NoConstantWarning


@pytest.fixture
def run(capsys):
    """Run the CLI; returns (exit code, stdout lines, stderr)"""
    def _run(*argv):
        code = main([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out.splitlines(), captured.err
    return _run


@pytest.fixture(scope='module')
def report_schema():
    return json.loads((DOCS_DIR / "report_schema.json").read_text())


class TestOrdinalCommands:

    @pytest.mark.parametrize('a, b, verdict', [
        ("t(1,0)", "t(t(1,0))", "LESS"),
        ("t(t(1,0))", "t(1,1)", "LESS"),
        ("t(0,1)", "t(1)", "EQUAL"),
        ("t(1,1)", "1+1", "GREATER"),
    ])
    def test_compare(self, run, a, b, verdict):
        assert run("ord", "cmp", a, b) == (EXIT_PASS, [verdict], "")

    def test_parse_error(self, run):
        code, out, err = run("ord", "cmp", "t(1", "1")
        assert code == EXIT_USAGE
        assert out == []
        assert "position 3" in err

    def test_usage(self, run):
        code, _, _ = run("ord")
        assert code == EXIT_USAGE

    def test_help(self, run):
        code, out, _ = run("--help")
        assert code == EXIT_PASS
        assert any("simpord" in line for line in out)

    def test_deep_nesting_is_a_usage_error(self, run):
        deep = "t(" * 5000 + "0" + ")" * 5000
        code, out, err = run("ord", "cmp", deep, "1")
        assert code == EXIT_USAGE
        assert out == []
        assert err.startswith("error:")


class TestTermCommands:

    def test_theta_compare(self, run):
        code, out, _ = run("term", "cmp", "--order", "theta", "--k", 1, "g(1,1)", "f_1(1,1)")
        assert code == EXIT_PASS
        assert out == ["LESS", "o(g(1,1)) = 1+1", "o(f_1(1,1)) = t(1,1)"]

    def test_lpo_compare(self, run, fixtures_dir):
        sig = fixtures_dir / "sig_one_f0.json"
        code, out, _ = run("term", "cmp", "--order", "lpo", "--sig", sig, "--prec", "1,f_0",
                           "1", "f_0(1)")
        assert (code, out) == (EXIT_PASS, ["LESS"])

    def test_lpo_needs_precedence(self, run, fixtures_dir):
        code, _, err = run("term", "cmp", "--order", "lpo", "--sig",
                           fixtures_dir / "sig_ag.json", "a", "g(a,a)")
        assert code == EXIT_USAGE
        assert "--prec" in err

    def test_embed(self, run):
        assert run("embed", "--k", 1, "f_1(1,1)") == (EXIT_PASS, ["t(1,1)"], "")
        assert run("embed", "--k", 1, "g(1,1)") == (EXIT_PASS, ["1+1"], "")

    def test_embed_outside_signature(self, run):
        code, _, err = run("embed", "--k", 0, "f_1(1,1)")
        assert code == EXIT_USAGE
        assert err.startswith("error:")

    def test_embed_deep_nesting_is_a_usage_error(self, run):
        deep = "f_0(" * 5000 + "1" + ")" * 5000
        code, out, err = run("embed", "--k", 0, deep)
        assert code == EXIT_USAGE
        assert out == []
        assert "nested too deeply" in err

    def test_termof(self, run):
        code, out, _ = run("termof", "--k", 1, "t(1,0)")
        assert code == EXIT_PASS
        assert out == ["f_1(f_0(1),1)", "check: o(f_1(f_0(1),1)) = t(t(1),1) = plus(t(1,0))"]

    def test_termof_zero(self, run):
        code, out, _ = run("termof", "--k", 1, "0")
        assert code == EXIT_PASS
        assert out[0] == "1"

    def test_termof_vector_too_long(self, run):
        code, _, _ = run("termof", "--k", 0, "t(1,0)")
        assert code == EXIT_USAGE


class TestCheckCommand:

    def test_theta_passes(self, run):
        code, out, _ = run("check", "--order", "theta", "--k", 1, "--conditions", "1,2,3",
                           "--max-size", 4)
        assert code == EXIT_PASS
        assert out[-1] == "overall: PASS"
        verdicts = [line for line in out if line.startswith("condition")]
        assert len(verdicts) == 3
        assert all(line.endswith(": PASS") for line in verdicts)

    def test_json_matches_schema(self, run, report_schema):
        code, out, _ = run("check", "--k", 1, "--conditions", "0,1,2", "--max-size", 4,
                           "--format", "json")
        document = json.loads("\n".join(out))
        jsonschema.validate(document, report_schema)
        assert code == EXIT_PASS
        assert [r['condition'] for r in document['reports']] == [0, 1, 2]
        assert document['overall'] == 'PASS'

    def test_planted_cycle_fails(self, run, fixtures_dir, report_schema):
        code, out, _ = run("check", "--order", "lpo", "--sig", fixtures_dir / "sig_ag.json",
                           "--prec", "a,g", "--arg-orders",
                           fixtures_dir / "arg_orders_planted_cycle.json",
                           "--conditions", 3, "--max-size", 3, "--format", "json")
        assert code == EXIT_FAIL
        document = json.loads("\n".join(out))
        jsonschema.validate(document, report_schema)
        report = document['reports'][0]
        assert report['status'] == 'FAIL'
        assert report['witness']['symbol'] == 'g'
        assert report['witness']['tuple'] == '(a,a)'

    def test_revlex_fails_decomposition(self, run, fixtures_dir):
        code, out, _ = run("check", "--order", "lpo", "--sig", fixtures_dir / "sig_ag.json",
                           "--prec", "a,g", "--arg-orders",
                           fixtures_dir / "arg_orders_revlex.json",
                           "--conditions", 2, "--max-size", 5)
        assert code == EXIT_FAIL
        assert any(line.strip().startswith("witness:") for line in out)
        assert out[-1] == "overall: FAIL"

    def test_tiny_budget_is_inconclusive(self, run):
        code, out, _ = run("check", "--k", 1, "--conditions", 3, "--max-size", 4,
                           "--budget", 1)
        assert code == EXIT_INCONCLUSIVE
        assert out[-1] == "overall: INCONCLUSIVE"

    def test_budget_from_environment(self, run, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV_VAR, "1")
        code, _, _ = run("check", "--k", 1, "--conditions", 3, "--max-size", 4)
        assert code == EXIT_INCONCLUSIVE

    def test_bad_budget_environment_falls_back(self, run, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV_VAR, "abc")
        with pytest.warns(UserWarning):
            code, _, _ = run("check", "--k", 1, "--conditions", 3, "--max-size", 3)
        assert code == EXIT_PASS

    @pytest.mark.parametrize('extra', [
        ["--conditions", "5"],
        ["--conditions", "x"],
        ["--max-size", "0"],
        ["--order", "lpo"],
        ["--order", "bogus"],
    ])
    def test_usage_errors(self, run, extra):
        code, _, _ = run("check", *extra)
        assert code == EXIT_USAGE


class TestWfpCommand:

    def test_chain(self, run, fixtures_dir):
        code, out, _ = run("wfp", fixtures_dir / "edges_chain.txt")
        assert code == EXIT_PASS
        assert out == ["y ACCESSIBLE rank 0", "x ACCESSIBLE rank 1"]

    def test_cycle(self, run, fixtures_dir):
        _, out, _ = run("wfp", fixtures_dir / "edges_cycle.txt")
        assert out == ["x NON_ACCESSIBLE cycle x > y > x", "y NON_ACCESSIBLE cycle y > x > y"]

    def test_declared_nodes(self, run, fixtures_dir):
        _, out, _ = run("wfp", fixtures_dir / "edges_empty.txt", "--nodes", "a,b")
        assert out == ["a ACCESSIBLE rank 0", "b ACCESSIBLE rank 0"]

    def test_mixed(self, run, fixtures_dir):
        code, out, _ = run("wfp", fixtures_dir / "edges_mixed.txt")
        assert code == EXIT_PASS
        assert out == [
            "b ACCESSIBLE rank 0",
            "a ACCESSIBLE rank 1",
            "c NON_ACCESSIBLE cycle c > d > c",
            "d NON_ACCESSIBLE cycle d > c > d",
            "e NON_ACCESSIBLE cycle d > c > d via d",
            "f ACCESSIBLE rank 0",
        ]

    def test_budget(self, run, fixtures_dir):
        _, out, _ = run("wfp", fixtures_dir / "edges_chain.txt", "--budget", 1)
        assert out == ["y ACCESSIBLE rank 0", "x UNKNOWN budget-exhausted"]

    def test_json(self, run, fixtures_dir):
        code, out, _ = run("wfp", fixtures_dir / "edges_chain.txt", "--format", "json")
        document = json.loads("\n".join(out))
        assert code == EXIT_PASS
        assert document['height'] == 1
        assert document['counts'] == {'ACCESSIBLE': 2, 'NON_ACCESSIBLE': 0, 'UNKNOWN': 0}
        assert document['nodes'][1] == {'node': 'x', 'status': 'ACCESSIBLE', 'rank': 1}

    def test_bad_file(self, run, fixtures_dir):
        code, _, err = run("wfp", fixtures_dir / "edges_bad.txt")
        assert code == EXIT_USAGE
        assert "position 4" in err

    def test_missing_file(self, run, tmp_path):
        code, _, _ = run("wfp", tmp_path / "missing.txt")
        assert code == EXIT_USAGE


class TestEnumCommand:

    def test_binary_trees(self, run, fixtures_dir):
        code, out, _ = run("enum", "terms", "--sig", fixtures_dir / "sig_ag.json",
                           "--max-size", 5, "--count")
        assert (code, out) == (EXIT_PASS, ["4"])

    def test_smallest_notations(self, run):
        assert run("enum", "ords", "--max-nodes", 1, "--max-vector-len", 1) == \
            (EXIT_PASS, ["0", "1"], "")

    def test_two_node_notations(self, run):
        _, out, _ = run("enum", "ords", "--max-nodes", 2, "--max-vector-len", 2)
        assert out == ["0", "1", "t(1)", "t(1,0)", "1+1"]

    def test_no_constant(self, run, fixtures_dir):
        with pytest.warns(NoConstantWarning):
            code, out, _ = run("enum", "terms", "--sig", fixtures_dir / "sig_no_constant.json",
                               "--count")
        assert (code, out) == (EXIT_PASS, ["0"])

    def test_bad_bound(self, run):
        code, _, _ = run("enum", "ords", "--max-nodes", 0)
        assert code == EXIT_USAGE
