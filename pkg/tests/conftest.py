from pathlib import Path

import pytest

from supersingular.jsonio import load_curve

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_curve(name):
    return load_curve(FIXTURES / f"{name}.json").to_model()


@pytest.fixture
def curve():
    return fixture_curve


@pytest.fixture
def fixtures_dir():
    return FIXTURES
