"""
Batch suite runner.

A suite expands into independent tasks (one identity, one model's closure,
one relation, ...). Tasks run in-process or on a process pool and every task
returns one or more report entries; entries are sorted by id before the
report is assembled, so the report body does not depend on completion order.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from itertools import repeat
from typing import Dict, List, NamedTuple, Optional, Tuple

from models.clifford6 import build_gamma6
from models.errors import ConfigError, VerifierError
from models.identities4 import CATALOG4, IDENTITY_IDS4, verify_identity4
from models.identities6 import CATALOG6, IDENTITY_IDS6, verify_identity6
from models.kinematics import KINEMATIC_MODELS, check_kinematics
from models.residual_report import ResidualReport
from models.sigma4 import build_sigma4
from models.susy.catalog import MAX_JET_ORDER, MODEL_CATALOG, MODEL_IDS, load_model
from models.susy.closure import check_closure
from models.susy.relations import RELATION_CATALOG, check_pseudo_majorana, check_relation
from models.susy.superfield import GRASSMANN_COUNT, check_superfield
from models.susy.tower import MAX_TOWER_DEPTH, check_tower
from utils.logger import NO_LOG_FILE_ENV, logger
from utils.utils import combined_fingerprint, tensor_fingerprint, timed

SUITE_IDS = ('appendix-a', 'appendix-b', 'closure', 'relations', 'tower', 'kinematics', 'superfield')
ALL_SUITES = 'all'
FORMATS = ('json', 'markdown')
MAX_N = 4
REPORT_VERSION = 1

TOWER_MODELS = ("6d-tensor-onshell", "4d-maxwell-onshell")
SUPERFIELD_MODEL = "6d-tensor-offshell"
PSEUDO_MAJORANA_MODEL = "6d-tensor-offshell"


@dataclass
class SuiteSpec:
    suite: str
    N: int = 1
    jet_order: int = 4
    tower_depth: int = MAX_TOWER_DEPTH
    jobs: int = 1
    format: str = 'json'
    out: Optional[str] = None

    def validate(self) -> "SuiteSpec":
        """Raise ConfigError before any computation when an option is out of range"""
        if self.suite not in SUITE_IDS + (ALL_SUITES,):
            raise ConfigError(f"Unknown suite: {self.suite}")
        if not 1 <= self.N <= MAX_N:
            raise ConfigError(f"N must lie in 1..{MAX_N}, got {self.N}")
        if not 1 <= self.jet_order <= MAX_JET_ORDER:
            raise ConfigError(f"Jet order must lie in 1..{MAX_JET_ORDER}, got {self.jet_order}")
        if not 1 <= self.tower_depth <= MAX_TOWER_DEPTH:
            raise ConfigError(f"Tower depth must lie in 1..{MAX_TOWER_DEPTH}, got {self.tower_depth}")
        if self.jobs < 1:
            raise ConfigError(f"Jobs must be at least 1, got {self.jobs}")
        if self.format not in FORMATS:
            raise ConfigError(f"Unknown report format: {self.format}")
        return self

    @property
    def suites(self) -> Tuple[str, ...]:
        return SUITE_IDS if self.suite == ALL_SUITES else (self.suite,)

    def config(self) -> Dict:
        """Options that determine the report body"""
        return {'suite': self.suite, 'N': self.N, 'jet_order': self.jet_order, 'tower_depth': self.tower_depth}


class Task(NamedTuple):
    id: str
    suite: str
    kind: str
    target: str
    anchor: str


# catalog

def _model_N(name: str, spec: SuiteSpec) -> int:
    return spec.N if MODEL_CATALOG[name].variable_N else 1


def suite_tasks(suite: str) -> List[Task]:
    """Tasks of one suite, in listing order"""
    if suite == 'appendix-a':
        return [Task(id, suite, 'identity6', id, CATALOG6[id].anchor) for id in IDENTITY_IDS6]
    if suite == 'appendix-b':
        return [Task(id, suite, 'identity4', id, CATALOG4[id].anchor) for id in IDENTITY_IDS4]
    if suite == 'closure':
        return [Task(f"CLOSURE:{name}", suite, 'closure', name, MODEL_CATALOG[name].anchor) for name in MODEL_IDS]
    if suite == 'relations':
        tasks = [Task(id, suite, 'relation', id, entry.description) for id, entry in RELATION_CATALOG.items()]
        tasks.append(Task("PSEUDO_MAJORANA", suite, 'pseudo-majorana', PSEUDO_MAJORANA_MODEL,
                          "reality structure of the supercharges (informational)"))
        return tasks
    if suite == 'tower':
        return [Task(f"TOWER:{name}", suite, 'tower', name, f"gauge tower of {MODEL_CATALOG[name].anchor}")
                for name in TOWER_MODELS]
    if suite == 'kinematics':
        return [Task(f"KINEMATICS:{id}", suite, 'kinematics', id, model.anchor) for id, model in KINEMATIC_MODELS.items()]
    if suite == 'superfield':
        return [Task("SUPERFIELD", suite, 'superfield', SUPERFIELD_MODEL,
                     f"theta expansion of the scalar through order {GRASSMANN_COUNT}")]
    raise ConfigError(f"Unknown suite: {suite}")


def list_suites() -> Dict[str, List[Tuple[str, str]]]:
    """Suite id -> [(check id, anchor)]"""
    return {suite: [(task.id, task.anchor) for task in suite_tasks(suite)] for suite in SUITE_IDS}


def format_suite_listing() -> str:
    lines = []
    for suite, checks in list_suites().items():
        lines.append(f"{suite} ({len(checks)} checks)")
        for id, anchor in checks:
            lines.append(f"  {id:<32} {anchor}")
    return "\n".join(lines)


# entries

def _entry(id: str, suite: str, passed: bool, residual: Dict, informational: bool = False) -> Dict:
    entry = {'id': id, 'suite': suite, 'pass': passed, 'residual': residual}
    if informational:
        entry['informational'] = True
    return entry


def _report_entry(task: Task, report: ResidualReport, prefix: bool) -> Dict:
    data = report.to_dict()
    passed = data.pop('pass')
    data.pop('id')
    informational = data.pop('informational', False)
    id = f"{task.id}/{report.id}" if prefix else task.id
    return _entry(id, task.suite, passed, data, informational)


def _error_entry(task: Task, error_class: str, message: str) -> Dict:
    entry = _entry(task.id, task.suite, False, {})
    entry['error_class'] = error_class
    entry['error'] = message
    return entry


def _evaluate(task: Task, spec: SuiteSpec) -> List[Dict]:
    if task.kind == 'identity6':
        return [_report_entry(task, verify_identity6(build_gamma6(spec.N), task.target), False)]
    if task.kind == 'identity4':
        return [_report_entry(task, verify_identity4(build_sigma4(), task.target), False)]
    if task.kind == 'closure':
        model = load_model(task.target, _model_N(task.target, spec), spec.jet_order)
        report = check_closure(model)
        entries = []
        for closure_entry in report.entries:
            data = closure_entry.to_dict()
            passed = data.pop('pass')
            data['expected_closure'] = report.expected_closure
            data['N'] = report.N
            id = f"{task.id}/{closure_entry.generator}/{closure_entry.bracket}"
            entries.append(_entry(id, task.suite, passed, data))
        return entries
    if task.kind == 'relation':
        entry = RELATION_CATALOG[task.target]
        name = entry.models[0]
        model = load_model(name, _model_N(name, spec), spec.jet_order, quotient=entry.quotient)
        return [_report_entry(task, check_relation(model, task.target), False)]
    if task.kind == 'pseudo-majorana':
        model = load_model(task.target, 1, spec.jet_order)
        return [_report_entry(task, check_pseudo_majorana(model), False)]
    if task.kind == 'tower':
        model = load_model(task.target, 1, spec.jet_order)
        return [_report_entry(task, report, True) for report in check_tower(model, spec.tower_depth)]
    if task.kind == 'kinematics':
        match, reports = check_kinematics(task.target)
        entries = [_entry(f"{task.id}/TEMPLATE_{match.template}", task.suite, match.match, match.to_dict())]
        return entries + [_report_entry(task, report, True) for report in reports]
    if task.kind == 'superfield':
        model = load_model(task.target, 1, spec.jet_order)
        return [_report_entry(task, report, True) for report in check_superfield(model)]
    raise ConfigError(f"Unknown task kind: {task.kind}")


def run_task(task: Task, spec: SuiteSpec) -> Tuple[List[Dict], float]:
    """Entries of one task and its wall time; engine errors become failed entries"""
    with timed("Task finished", check=task.id) as watch:
        try:
            entries = _evaluate(task, spec)
        except VerifierError as e:
            logger.error(f"Check raised | Error class: {e.error_class} | Error: {e}", check=task.id)
            entries = [_error_entry(task, e.error_class, str(e))]
        except Exception as e:
            logger.exception(f"Internal error | Error: {e}", check=task.id)
            entries = [_error_entry(task, "internal-error", f"{type(e).__name__}: {e}")]
    return entries, watch.seconds


# report

def representation_fingerprint(spec: SuiteSpec) -> str:
    """Hash of the built gamma and sigma tensors used by the run"""
    parts = [tensor_fingerprint(build_gamma6(N).fingerprint_tensors()) for N in sorted({1, spec.N})]
    parts.append(tensor_fingerprint(build_sigma4().fingerprint_tensors()))
    return combined_fingerprint(parts)


def _run_tasks(tasks: List[Task], spec: SuiteSpec) -> List[Tuple[List[Dict], float]]:
    if spec.jobs == 1 or len(tasks) == 1:
        return [run_task(task, spec) for task in tasks]
    # workers log to the console only
    os.environ[NO_LOG_FILE_ENV] = "1"
    with ProcessPoolExecutor(max_workers=spec.jobs) as executor:
        return list(executor.map(run_task, tasks, repeat(spec)))


def run_suite(spec: SuiteSpec) -> Dict:
    """Execute every check of the suite and assemble the run report"""
    spec.validate()
    tasks = [task for suite in spec.suites for task in suite_tasks(suite)]
    logger.info(f"Running suite | Suite: {spec.suite} | Tasks: {len(tasks)} | Jobs: {spec.jobs}")
    with timed("Suite tasks", check=spec.suite) as watch:
        results = _run_tasks(tasks, spec)

    entries, seconds = [], {}
    for task, (task_entries, elapsed) in zip(tasks, results):
        entries.extend(task_entries)
        seconds[task.id] = round(elapsed, 3)
    entries.sort(key=lambda e: e['id'])

    gating = [e for e in entries if not e.get('informational')]
    failed = [e['id'] for e in gating if not e['pass']]
    report = {
        'version': REPORT_VERSION,
        'config': spec.config(),
        'fingerprint': representation_fingerprint(spec),
        'entries': entries,
        'totals': {
            'checks': len(entries),
            'passed': sum(1 for e in entries if e['pass']),
            'failed': len(failed),
            'informational': len(entries) - len(gating),
        },
        'pass': not failed,
        'timing': {
            'generated_at': datetime.now(timezone.utc).isoformat(timespec='seconds'),
            'jobs': spec.jobs,
            'total_seconds': round(watch.seconds, 3),
            'task_seconds': seconds,
        },
    }
    if failed:
        logger.warning(f"Suite failed | Suite: {spec.suite} | Failed: {', '.join(failed)}")
    logger.info(f"Suite finished | Suite: {spec.suite} | Checks: {len(entries)} | Failed: {len(failed)} | "
                f"Seconds: {report['timing']['total_seconds']}")
    return report


def report_body(report: Dict) -> Dict:
    """Report without its timing section; identical configurations give identical bodies"""
    return {k: v for k, v in report.items() if k != 'timing'}
