import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from eegs.affect import WeightModel
from eegs.core import PersonalityProfile, default_emotions
from eegs.elicitation import ActionScoreTable


@pytest.fixture(scope="session")
def emotions():
    return default_emotions()


@pytest.fixture(scope="session")
def action_table():
    return ActionScoreTable.load()


@pytest.fixture(scope="session")
def default_weights():
    return WeightModel.default()


@pytest.fixture
def personality():
    return PersonalityProfile()
