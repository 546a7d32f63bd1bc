"""
Command-line batch runner for the verification suites.
"""

from .report_format import render, validation_errors
from .suite_runner import SUITE_IDS, SuiteSpec, format_suite_listing, list_suites, report_body, run_suite

__all__ = [
    'SUITE_IDS',
    'SuiteSpec',
    'format_suite_listing',
    'list_suites',
    'render',
    'report_body',
    'run_suite',
    'validation_errors',
]
