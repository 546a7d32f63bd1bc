from functools import lru_cache

import pytest

from models.errors import CatalogError
from models.gaussian_rational import I
from models.susy.catalog import load_model
from models.susy.relations import (RELATION_CATALOG, RELATION_IDS, check_onshell_b_extra, check_pseudo_majorana,
                                   check_relation, multiple_report, relations_for)

SIX_DIMENSIONAL_FIELDS = ("6d-tensor-offshell", "6d-tensor-onshell")


@lru_cache(maxsize=None)
def _model(name, quotient):
    return load_model(name, quotient=quotient)


def _relation_params():
    for id, entry in RELATION_CATALOG.items():
        marks = [pytest.mark.slow] if entry.models[0] in SIX_DIMENSIONAL_FIELDS else []
        yield pytest.param(id, marks=marks, id=id)


@pytest.mark.parametrize("id", _relation_params())
def test_relation_holds(id):
    entry = RELATION_CATALOG[id]
    report = check_relation(_model(entry.models[0], entry.quotient), id)
    assert report.passed, report.to_dict()
    assert report.tuple_count > 0
    assert report.notes['model'] == entry.models[0]


def test_catalog_covers_every_model():
    covered = {entry.models[0] for entry in RELATION_CATALOG.values()}
    assert covered == {"6d-tensor-offshell", "6d-tensor-onshell", "6d-toy-rigid", "4d-maxwell-onshell",
                       "4d-toy-rigid"}
    assert len(RELATION_IDS) == 16


def test_relations_for_rigid4(rigid4):
    assert relations_for(rigid4) == ["F7", "QCHI_CONSIST", "PHI_FROM_XI", "LAMBDA_FROM_XI"]


@pytest.mark.slow
def test_onshell_extra_term_coefficient(onshell_raw):
    report = check_onshell_b_extra(onshell_raw)
    assert report.passed
    assert report.notes['coefficient'] == "6i"
    assert report.notes['expected'] == "6i"


def test_multiple_report_requires_the_expected_coefficient(maxwell4):
    residuals = {(0,): maxwell4.jet("A", (0,), (1,), coeff=6 * I), (1,): maxwell4.jet("A", (1,), (0,), coeff=6 * I)}
    structures = {(0,): maxwell4.jet("A", (0,), (1,)), (1,): maxwell4.jet("A", (1,), (0,))}
    assert multiple_report("B_EXTRA", residuals, structures, 6 * I).passed
    report = multiple_report("B_EXTRA", residuals, structures, 3 * I)
    assert not report.passed
    assert report.max_residual_re == 0 and report.max_residual_im == 0
    assert report.notes['coefficient'] == "6i"
    assert report.notes['expected'] == "3i"


def test_multiple_report_rejects_a_mismatched_structure(maxwell4):
    residuals = {(0,): maxwell4.jet("A", (0,), (1,), coeff=6 * I), (1,): maxwell4.jet("A", (1,), (0,), coeff=2 * I)}
    structures = {(0,): maxwell4.jet("A", (0,), (1,)), (1,): maxwell4.jet("A", (1,), (0,))}
    report = multiple_report("B_EXTRA", residuals, structures, 6 * I)
    assert not report.passed
    assert report.notes['coefficient'] == "6i"


def test_unknown_or_inapplicable_relation(rigid4, maxwell4):
    with pytest.raises(CatalogError):
        check_relation(rigid4, "NOPE")
    with pytest.raises(CatalogError):
        check_relation(maxwell4, "F7")


def test_pseudo_majorana_is_informational(offshell, maxwell4):
    report = check_pseudo_majorana(offshell)
    assert report.informational
    assert report.tuple_count == 16 + 4 * 16
    assert report.to_dict()['informational'] is True
    with pytest.raises(CatalogError):
        check_pseudo_majorana(maxwell4)
