import os

import pytest
from hypothesis import HealthCheck, settings

from kgdf.corpus import load_corpus
from kgdf.diagram import parse_gauss_code

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

LEFT_TREFOIL = "O1- U2- O3- U1- O2- U3-"


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def left_trefoil():
    return parse_gauss_code(LEFT_TREFOIL)
