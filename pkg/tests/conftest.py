"""Shared fixtures: the bundled scenario and one evaluation of it."""
from __future__ import annotations

import pytest

from aamcba.engine import evaluate
from aamcba.ingest import default_scenario_path, load_scenario


@pytest.fixture(scope="session")
def default_scenario():
    return load_scenario(default_scenario_path())


@pytest.fixture(scope="session")
def default_evaluation(default_scenario):
    return evaluate(default_scenario)
