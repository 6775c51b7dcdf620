import math

import pytest
from hypothesis import given, strategies as st

from eegs.core import (ActionSpec, AffectState, EntityProfile, EmotionSpec,
                       EventRecord, MoodState, PersonalityProfile, Valence,
                       DEFAULT_EMOTION_ANGLES, default_emotions, load_emotions,
                       valence_degree)
from eegs.errors import ValidationError

# The published circumplex projections for the ten stock emotions.
EXPECTED_VALENCE_DEGREES = {
    "joy": 1.0,
    "distress": -0.8090,
    "happy_for": 0.5299,
    "sorry_for": -0.5299,
    "appreciation": 0.8988,
    "reproach": -0.8936,
    "gratitude": 0.9903,
    "anger": -0.9648,
    "liking": 0.9681,
    "disliking": -0.9681,
}


class TestValenceDegree:
    def test_zero_degrees_is_unit_positive(self):
        assert valence_degree(0.0) == 1.0

    def test_distress_angle(self):
        assert valence_degree(144.0) == pytest.approx(-0.8090, abs=1e-3)

    def test_orthogonal_angle_is_neutral(self):
        assert valence_degree(90.0) == pytest.approx(0.0, abs=1e-12)

    def test_anger_angle(self):
        assert valence_degree(164.75) == pytest.approx(-0.9648, abs=1e-3)

    @pytest.mark.parametrize("name,expected", sorted(EXPECTED_VALENCE_DEGREES.items()))
    def test_full_table(self, name, expected):
        assert abs(valence_degree(DEFAULT_EMOTION_ANGLES[name]) - expected) <= 1e-3

    def test_out_of_domain_rejected(self):
        with pytest.raises(ValueError):
            valence_degree(360.0)
        with pytest.raises(ValueError):
            valence_degree(-1.0)

    @given(st.floats(min_value=0.0, max_value=359.999))
    def test_always_in_unit_interval(self, angle):
        assert -1.0 <= valence_degree(angle) <= 1.0


class TestEmotionSpec:
    def test_valence_sign_matches_degree_sign(self, emotions):
        for spec in emotions.values():
            expected = Valence.POSITIVE if spec.valence_degree > 0 else Valence.NEGATIVE
            assert spec.valence is expected

    def test_defaults(self, emotions):
        for spec in emotions.values():
            assert spec.threshold == 0.0
            assert spec.decay_time_s == 10.0

    def test_bad_threshold_rejected(self):
        with pytest.raises(ValidationError):
            EmotionSpec("joy", 0.0, threshold=1.0)

    def test_bad_decay_rejected(self):
        with pytest.raises(ValidationError):
            EmotionSpec("joy", 0.0, decay_time_s=0.0)

    def test_packaged_file_matches_builtin_defaults(self):
        assert load_emotions() == default_emotions()

    def test_loader_reports_row_numbers(self, tmp_path):
        path = tmp_path / "emotions.json"
        path.write_text('{"emotions": [{"name": "joy", "angle_deg": 0.0},'
                        ' {"name": "bad", "angle_deg": 10.0, "threshold": 2.0}]}')
        with pytest.raises(ValidationError, match="row 2"):
            load_emotions(str(path))


class TestActionSpec:
    def test_sign_agreement_enforced(self):
        with pytest.raises(ValidationError):
            ActionSpec("Kick", Valence.POSITIVE, -0.5)
        with pytest.raises(ValidationError):
            ActionSpec("Greet", Valence.NEGATIVE, 0.5)

    def test_zero_degree_allowed_either_valence(self):
        assert ActionSpec("Shrug", Valence.POSITIVE, 0.0).degree == 0.0
        assert ActionSpec("Shrug", Valence.NEGATIVE, 0.0).degree == 0.0

    def test_degree_range_enforced(self):
        with pytest.raises(ValidationError):
            ActionSpec("Mega", Valence.POSITIVE, 1.5)


class TestEventRecord:
    def test_empty_participants_rejected(self):
        action = ActionSpec("Greet", Valence.POSITIVE, 0.31)
        with pytest.raises(ValidationError):
            EventRecord("", action, "SELF", 0.0)
        with pytest.raises(ValidationError):
            EventRecord("JOHN", action, "", 0.0)


class TestEntityProfile:
    def test_stranger_initialization(self):
        profile = EntityProfile("JOHN")
        assert profile.familiarity == 1.0
        assert profile.perception == 0.0

    def test_range_validation(self):
        with pytest.raises(ValidationError):
            EntityProfile("X", familiarity=1.5)
        with pytest.raises(ValidationError):
            EntityProfile("X", perception=-2.0)


class TestMoodState:
    def test_clamping(self):
        assert MoodState(1.7).value == 1.0
        assert MoodState(-3.0).value == -1.0
        assert MoodState(0.25).value == 0.25


class TestPersonality:
    def test_trait_range_enforced(self):
        with pytest.raises(ValidationError):
            PersonalityProfile(openness=1.2)

    def test_round_trip(self):
        p = PersonalityProfile(0.1, 0.2, 0.3, 0.4, 0.5)
        assert PersonalityProfile(**p.as_dict()) == p


class TestAffectState:
    def test_initial_state_is_silent(self, emotions):
        state = AffectState.initial(emotions, MoodState(0.0))
        assert all(i == 0.0 for i in state.intensities.values())

    def test_dict_round_trip(self, emotions):
        state = AffectState.initial(emotions, MoodState(-0.25))
        state.intensities["joy"] = 0.4
        state.last_stimulus_tick["joy"] = 7
        restored = AffectState.from_dict(state.to_dict())
        assert restored.intensities == state.intensities
        assert restored.mood == state.mood
        assert restored.last_stimulus_tick == state.last_stimulus_tick
