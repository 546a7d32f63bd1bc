import os

os.environ.setdefault("SUSY_VERIFIER_NO_LOG_FILE", "1")

import pytest

from models.clifford6 import build_gamma6
from models.sigma4 import build_sigma4
from models.susy.catalog import load_model


@pytest.fixture(scope="session")
def rep6():
    return build_gamma6(1)


@pytest.fixture(scope="session")
def rep6_n2():
    return build_gamma6(2)


@pytest.fixture(scope="session")
def rep4():
    return build_sigma4()


@pytest.fixture(scope="session")
def offshell():
    return load_model("6d-tensor-offshell")


@pytest.fixture(scope="session")
def onshell():
    return load_model("6d-tensor-onshell")


@pytest.fixture(scope="session")
def onshell_raw():
    return load_model("6d-tensor-onshell", quotient=False)


@pytest.fixture(scope="session")
def rigid6():
    return load_model("6d-toy-rigid")


@pytest.fixture(scope="session")
def maxwell4():
    return load_model("4d-maxwell-onshell")


@pytest.fixture(scope="session")
def rigid4():
    return load_model("4d-toy-rigid")
