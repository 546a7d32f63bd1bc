import json

import pytest

from cli.report_format import render, render_markdown, validation_errors
from cli.suite_runner import SUITE_IDS, SuiteSpec, Task, list_suites, report_body, run_suite, run_task
from main import EXIT_FAILURE, EXIT_PASS, EXIT_USAGE, main
from models.errors import ConfigError


@pytest.fixture(scope="module")
def sigma_report():
    return run_suite(SuiteSpec('appendix-b'))


@pytest.mark.parametrize("options", [
    {'suite': 'everything'},
    {'suite': 'closure', 'N': 0},
    {'suite': 'closure', 'N': 5},
    {'suite': 'tower', 'tower_depth': 5},
    {'suite': 'tower', 'jet_order': 7},
    {'suite': 'relations', 'jobs': 0},
    {'suite': 'relations', 'format': 'html'},
])
def test_spec_rejects_out_of_range_options(options):
    with pytest.raises(ConfigError):
        SuiteSpec(**options).validate()


def test_suite_listing():
    suites = list_suites()
    assert tuple(suites) == SUITE_IDS
    assert len(suites['appendix-a']) == 20
    assert len(suites['appendix-b']) == 9
    assert len(suites['closure']) == 5
    assert len(suites['relations']) == 17
    assert [id for id, _ in suites['kinematics']] == ["KINEMATICS:MASTER6", "KINEMATICS:KILLING4"]
    assert SuiteSpec('all').validate().suites == SUITE_IDS


def test_sigma_suite_report(sigma_report):
    assert validation_errors(sigma_report) == []
    assert sigma_report['pass']
    assert sigma_report['totals'] == {'checks': 9, 'passed': 9, 'failed': 0, 'informational': 0}
    ids = [e['id'] for e in sigma_report['entries']]
    assert ids == sorted(ids)
    assert all(e['suite'] == 'appendix-b' for e in sigma_report['entries'])
    assert len(sigma_report['fingerprint']) == 64


def test_report_body_is_reproducible(sigma_report):
    again = run_suite(SuiteSpec('appendix-b', jobs=1))
    assert report_body(again) == report_body(sigma_report)
    assert 'timing' not in report_body(again)


def test_schema_flags_broken_reports(sigma_report):
    broken = json.loads(json.dumps(sigma_report))
    broken['entries'][0]['pass'] = "yes"
    del broken['totals']
    errors = validation_errors(broken)
    assert len(errors) == 2
    assert any(e.startswith("entries/0/pass") for e in errors)


def test_failed_task_becomes_error_entry():
    entries, seconds = run_task(Task("NOPE", 'appendix-a', 'identity6', "NOPE", ""), SuiteSpec('appendix-a'))
    assert seconds >= 0
    assert entries == [{'id': "NOPE", 'suite': 'appendix-a', 'pass': False, 'residual': {},
                        'error_class': "catalog-error", 'error': entries[0]['error']}]


def test_markdown_rendering(sigma_report):
    text = render(sigma_report, 'markdown')
    assert text == render_markdown(sigma_report)
    assert text.startswith("# Verification report: appendix-b")
    assert "Result: PASS (9/9 passed, 0 informational)" in text
    assert text.count("| appendix-b | pass |") == 9
    with pytest.raises(ConfigError):
        render(sigma_report, 'pdf')


@pytest.mark.slow
def test_relations_suite_marks_pseudo_majorana_informational():
    report = run_suite(SuiteSpec('relations'))
    entry = next(e for e in report['entries'] if e['id'] == "PSEUDO_MAJORANA")
    assert entry['informational'] is True
    assert report['totals']['informational'] == 1
    assert validation_errors(report) == []


def test_main_list(capsys):
    assert main(["verify", "--list"]) == EXIT_PASS
    out = capsys.readouterr().out
    assert "appendix-b (9 checks)" in out
    assert "SUPERFIELD" in out


def test_main_usage_errors(capsys):
    assert main(["verify"]) == EXIT_USAGE
    assert main(["verify", "--suite", "closure", "--N", "9"]) == EXIT_USAGE
    with pytest.raises(SystemExit) as exit_info:
        main(["verify", "--suite", "closure", "--format", "pdf"])
    assert exit_info.value.code == EXIT_USAGE


def test_main_writes_report(tmp_path):
    out = tmp_path / "reports" / "sigma.json"
    assert main(["verify", "--suite", "appendix-b", "--out", str(out)]) == EXIT_PASS
    report = json.loads(out.read_text(encoding='utf-8'))
    assert report['config'] == {'suite': 'appendix-b', 'N': 1, 'jet_order': 4, 'tower_depth': 4}
    assert validation_errors(report) == []


def test_main_reports_unwritable_path(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("", encoding='utf-8')
    assert main(["verify", "--suite", "appendix-b", "--out", str(blocker / "report.json")]) == EXIT_FAILURE
