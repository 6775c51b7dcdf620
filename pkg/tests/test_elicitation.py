import json

import pytest

from eegs.core import Valence
from eegs.elicitation import ActionScoreTable, DEFAULT_CONTEXT, elicit
from eegs.errors import UnscoredActionError, ValidationError


class TestDefaultTable:
    def test_greet_score(self, action_table):
        spec = elicit(action_table, DEFAULT_CONTEXT, "Greet")
        assert spec.degree == pytest.approx(0.31)
        assert spec.valence is Valence.POSITIVE

    def test_kick_score(self, action_table):
        spec = elicit(action_table, DEFAULT_CONTEXT, "Kick")
        assert spec.degree == pytest.approx(-0.74)
        assert spec.valence is Valence.NEGATIVE

    def test_unknown_action_rejected(self, action_table):
        with pytest.raises(UnscoredActionError):
            elicit(action_table, DEFAULT_CONTEXT, "UnknownDance")

    def test_lookup_is_pure(self, action_table):
        first = elicit(action_table, DEFAULT_CONTEXT, "Greet")
        second = elicit(action_table, DEFAULT_CONTEXT, "Greet")
        assert first == second


class TestContexts:
    def build(self):
        return ActionScoreTable.from_rows([
            {"context": "default", "action": "Help", "valence": "POSITIVE", "degree": 0.45},
            {"context": "rivalry", "action": "Help", "valence": "NEGATIVE", "degree": -0.3},
        ])

    def test_context_specific_score_wins(self):
        table = self.build()
        assert table.lookup("rivalry", "Help").degree == pytest.approx(-0.3)

    def test_falls_back_to_default_context(self):
        table = self.build()
        assert table.lookup("party", "Help").degree == pytest.approx(0.45)

    def test_membership_includes_fallback(self):
        table = self.build()
        assert ("party", "Help") in table
        assert ("party", "Slap") not in table


class TestLoading:
    def test_row_number_in_range_error(self, tmp_path):
        path = tmp_path / "actions.json"
        path.write_text(json.dumps({"actions": [
            {"action": "Greet", "valence": "POSITIVE", "degree": 0.31},
            {"action": "Mega", "valence": "POSITIVE", "degree": 1.4},
        ]}))
        with pytest.raises(ValidationError, match="row 2"):
            ActionScoreTable.load(str(path))

    def test_sign_contradiction_flagged(self, tmp_path):
        path = tmp_path / "actions.json"
        path.write_text(json.dumps({"actions": [
            {"action": "Kick", "valence": "POSITIVE", "degree": -0.74},
        ]}))
        with pytest.raises(ValidationError, match="row 1"):
            ActionScoreTable.load(str(path))

    def test_duplicate_rejected(self, tmp_path):
        path = tmp_path / "actions.json"
        path.write_text(json.dumps({"actions": [
            {"action": "Greet", "valence": "POSITIVE", "degree": 0.31},
            {"action": "Greet", "valence": "POSITIVE", "degree": 0.32},
        ]}))
        with pytest.raises(ValidationError, match="duplicate"):
            ActionScoreTable.load(str(path))

    def test_bad_json_reported(self, tmp_path):
        path = tmp_path / "actions.json"
        path.write_text("{not json")
        with pytest.raises(ValidationError, match="JSON"):
            ActionScoreTable.load(str(path))
