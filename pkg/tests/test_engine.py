import pytest

from models.errors import CatalogError, ConfigError, JetOrderError, RuleError
from models.gaussian_rational import I
from models.susy.catalog import MODEL_IDS, load_model
from models.susy.charges import P, Q, Qbar, Z
from models.susy.closure import graded_bracket_on
from models.susy.expression import BOSON, FERMION, Expression, combine
from models.susy.model import act
from models.susy.quotient import QuotientReducer


def test_catalog_names():
    assert MODEL_IDS == ("6d-tensor-offshell", "6d-tensor-onshell", "6d-toy-rigid",
                         "4d-maxwell-onshell", "4d-toy-rigid")


def test_load_model_rejects_bad_options():
    with pytest.raises(CatalogError):
        load_model("5d-nothing")
    with pytest.raises(ConfigError):
        load_model("6d-tensor-onshell", N=2)
    with pytest.raises(ConfigError):
        load_model("6d-toy-rigid", N=0)
    with pytest.raises(ConfigError):
        load_model("4d-toy-rigid", jet_order=7)


def test_antisymmetric_components_are_canonical(onshell):
    assert onshell.jet("B", (1, 0)) == onshell.jet("B", (0, 1)).scale(-1)
    assert onshell.jet("B", (2, 2)).is_zero()
    # derivative indices commute
    assert onshell.jet("phi", (), (3, 1)) == onshell.jet("phi", (), (1, 3))


def test_selfdual_components_fold_onto_stored_ones(offshell):
    assert offshell.jet("H", (1, 2, 3)) == offshell.jet("H", (0, 4, 5))
    assert offshell.jet("H", (2, 1, 3)) == offshell.jet("H", (0, 4, 5)).scale(-1)
    assert len(list(offshell.generator("H").components())) == 10


def test_expressions_keep_one_parity(onshell):
    with pytest.raises(RuleError):
        onshell.jet("phi") + onshell.jet("psi", (0, 0))
    total = combine([(1, onshell.jet("phi")), (-1, onshell.jet("phi"))], BOSON)
    assert total.is_zero()
    assert total.parity == BOSON


def test_differentiation_respects_jet_order():
    model = load_model("6d-tensor-onshell", jet_order=2)
    expr = model.jet("phi", (), (0, 1))
    with pytest.raises(JetOrderError):
        expr.differentiate((2,), model.jet_order)


def test_supercharge_on_scalar(onshell):
    result = act(onshell, Q(0, 0), onshell.jet("phi"))
    assert result == onshell.jet("psi", (0, 0)).scale(-I)
    assert result.parity == FERMION


def test_momentum_is_minus_i_derivative(onshell_raw):
    result = act(onshell_raw, P(2), onshell_raw.jet("B", (0, 1), (4,)))
    assert result == onshell_raw.jet("B", (0, 1), (2, 4)).scale(-I)


def test_supercharges_on_scalar_close_on_translation(onshell):
    gamma = onshell.rep.gamma
    for alpha in range(4):
        for beta in range(4):
            result = graded_bracket_on(onshell, Q(0, alpha), Q(1, beta), onshell.jet("phi"))
            expected = combine(((-2 * I * gamma[A, alpha, beta], onshell.jet("phi", (), (A,))) for A in range(6)),
                               BOSON)
            assert result == expected


def test_maxwell_gauge_charge_annihilates_gaugino(maxwell4):
    for mu in range(4):
        for alpha in range(2):
            assert act(maxwell4, Z(mu), maxwell4.jet("psi", (alpha,))).is_zero()


def test_maxwell_bracket_on_gauge_field(maxwell4):
    sigma = maxwell4.rep.sigma
    for mu in range(4):
        for alpha in range(2):
            for ad in range(2):
                result = graded_bracket_on(maxwell4, Q(alpha), Qbar(ad), maxwell4.jet("A", (mu,)))
                expected = combine(((2 * I * sigma[nu, alpha, ad], maxwell4.composite("F", (mu, nu)))
                                    for nu in range(4)), BOSON)
                assert result == expected


def test_unknown_charges_and_generators(onshell, rigid4):
    with pytest.raises(RuleError):
        act(onshell, Qbar(0), onshell.jet("phi"))
    with pytest.raises(RuleError):
        act(onshell, Q(2, 0), onshell.jet("phi"))
    with pytest.raises(RuleError):
        onshell.jet("H", (0, 1, 2))
    with pytest.raises(RuleError):
        act(rigid4, Z(0), rigid4.jet("varphi"))


def test_quotient_reduces_derivatives_of_relations(offshell):
    box = offshell.relation("BOXPHI")[0]
    reducer = offshell.reducer(("BOXPHI",))
    assert reducer.contains(box)
    assert reducer.contains(box.differentiate((3,), offshell.jet_order))
    assert not reducer.contains(offshell.jet("phi", (), (0, 1)))


def test_quotient_rejects_mixed_sector_relations(onshell):
    mixed = onshell.jet("B", (0, 1), (2,)) + onshell.jet("B", (0, 1))
    with pytest.raises(RuleError):
        QuotientReducer([mixed], 6, 4)


def test_disabled_quotient_only_reduces_on_request(onshell_raw):
    relation = onshell_raw.relation("SELFDUAL")[0]
    assert onshell_raw.reduce(relation) == relation
    assert onshell_raw.reduce(relation, ("SELFDUAL",)).is_zero()


def test_grading_check_passes_for_every_model():
    for name in MODEL_IDS:
        load_model(name, check_grading=True)
