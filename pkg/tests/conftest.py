import os

import pytest
from hypothesis import HealthCheck, settings

from dualcalc.parsers import load_prelude

os.environ.setdefault("MPLBACKEND", "Agg")

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.register_profile(
    "ci",
    max_examples=300,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def prelude():
    return load_prelude()


@pytest.fixture
def report_dir(tmp_path):
    return str(tmp_path / "reports")
