"""
Rendering and validation of run reports. JSON is the source of truth and the
markdown view is derived from it.
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Dict, List

from jsonschema import Draft202012Validator

from models.errors import ConfigError

SCHEMA_PATH = Path(__file__).with_name("report_schema.json")


@lru_cache(maxsize=None)
def report_validator() -> Draft202012Validator:
    with open(SCHEMA_PATH, encoding='utf-8') as f:
        schema = json.load(f)
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


def validation_errors(report: Dict) -> List[str]:
    """Schema violations as 'path: message' strings, empty for a valid report"""
    errors = sorted(report_validator().iter_errors(report), key=lambda e: list(e.path))
    return [f"{'/'.join(str(p) for p in e.path) or '<root>'}: {e.message}" for e in errors]


def render_json(report: Dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _residual_summary(entry: Dict) -> str:
    if 'error_class' in entry:
        return f"{entry['error_class']}: {entry.get('error', '')}"
    residual = entry['residual']
    if 'max_residual_re' in residual:
        summary = f"max |re| {residual['max_residual_re']}, max |im| {residual['max_residual_im']}"
        if residual.get('first_failure') is not None:
            summary += f", first failure {residual['first_failure']}"
        return summary
    if 'pair_count' in residual:
        summary = f"{residual['pair_count']} pairs, {residual['tuple_count']} tuples"
        if residual.get('first_failure'):
            summary += f", first failure {residual['first_failure']}"
        return summary
    if 'dimension' in residual:
        return f"dimension {residual['dimension']}, missing directions {residual['missing_directions']}"
    return ""


def render_markdown(report: Dict) -> str:
    config = report['config']
    totals = report['totals']
    lines = [
        f"# Verification report: {config['suite']}",
        "",
        f"- N: {config['N']}",
        f"- Jet order: {config['jet_order']}",
        f"- Tower depth: {config['tower_depth']}",
        f"- Representation fingerprint: `{report['fingerprint']}`",
        f"- Result: {'PASS' if report['pass'] else 'FAIL'} "
        f"({totals['passed']}/{totals['checks']} passed, {totals['informational']} informational)",
        "",
        "| Check | Suite | Result | Residual |",
        "|---|---|---|---|",
    ]
    for entry in report['entries']:
        result = "pass" if entry['pass'] else "FAIL"
        if entry.get('informational'):
            result += " (info)"
        summary = _residual_summary(entry).replace("|", "\\|")
        lines.append(f"| {entry['id']} | {entry['suite']} | {result} | {summary} |")
    lines.append("")
    return "\n".join(lines)


def render(report: Dict, format: str) -> str:
    if format == 'json':
        return render_json(report)
    if format == 'markdown':
        return render_markdown(report)
    raise ConfigError(f"Unknown report format: {format}")
