"""Shared domain types: events, actions, entities, emotions, affect state.

Everything here is an immutable value type, safe to share across threads.
The one piece of real math is :func:`valence_degree`, which projects an
emotion's circumplex angle onto the pleasure axis to obtain its signed
valence degree.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from typing import Any, Mapping

from .errors import ValidationError

#: Identifier of the agent itself in events, goals and standards.
SELF = "SELF"


class Valence(Enum):
    POSITIVE = "POSITIVE"
    NEGATIVE = "NEGATIVE"


def valence_degree(angle_deg: float) -> float:
    """Project a circumplex angle (degrees from the positive axis) onto [-1, 1].

    The projection is the plain cosine: 0 deg maps to +1 (maximally
    positive), 90 deg to 0, 180 deg to -1.
    """
    if not 0.0 <= angle_deg < 360.0:
        raise ValueError(f"angle must lie in [0, 360), got {angle_deg}")
    return math.cos(math.radians(angle_deg))


def clamp(value: float, lo: float, hi: float) -> float:
    return lo if value < lo else hi if value > hi else value


@dataclass(frozen=True)
class ActionSpec:
    """A named action with its first-order valence and signed degree.

    Degree 0 is allowed and treated as valence-neutral: formulas that
    branch on the sign of the degree handle it explicitly and ignore the
    declared valence.
    """

    name: str
    valence: Valence
    degree: float

    def __post_init__(self) -> None:
        if not -1.0 <= self.degree <= 1.0:
            raise ValidationError(f"action degree must lie in [-1, 1], got {self.degree}")
        if self.degree > 0 and self.valence is not Valence.POSITIVE:
            raise ValidationError(f"action {self.name!r}: positive degree with NEGATIVE valence")
        if self.degree < 0 and self.valence is not Valence.NEGATIVE:
            raise ValidationError(f"action {self.name!r}: negative degree with POSITIVE valence")


@dataclass(frozen=True)
class EventRecord:
    """Who did what to whom, when, plus free-form auxiliary info."""

    source: str
    action: ActionSpec
    target: str
    timestamp: float
    other_info: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.source:
            raise ValidationError("event source must not be empty")
        if not self.target:
            raise ValidationError("event target must not be empty")


@dataclass(frozen=True)
class EntityProfile:
    """How well the agent knows an entity and what it thinks of it.

    ``familiarity`` is a relationship distance: 1.0 is a complete
    stranger, 0.0 someone fully familiar.  New entities start as strangers
    with a neutral perception.
    """

    name: str
    familiarity: float = 1.0
    perception: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.familiarity <= 1.0:
            raise ValidationError(f"familiarity must lie in [0, 1], got {self.familiarity}")
        if not -1.0 <= self.perception <= 1.0:
            raise ValidationError(f"perception must lie in [-1, 1], got {self.perception}")


@dataclass(frozen=True)
class EmotionSpec:
    """Constant properties of one emotion type.

    ``valence_degree`` is the cosine projection of the emotion's
    circumplex angle; its sign determines the valence class.  Intensity is
    deliberately not stored here -- it is per-agent dynamic state.
    """

    name: str
    angle_deg: float
    threshold: float = 0.0
    decay_time_s: float = 10.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.threshold < 1.0:
            raise ValidationError(f"emotion {self.name!r}: threshold must lie in [0, 1)")
        if self.decay_time_s <= 0:
            raise ValidationError(f"emotion {self.name!r}: decay time must be positive")
        object.__setattr__(self, "_valence_degree", valence_degree(self.angle_deg))

    @property
    def valence_degree(self) -> float:
        return self._valence_degree

    @property
    def valence(self) -> Valence:
        return Valence.POSITIVE if self.valence_degree > 0 else Valence.NEGATIVE


#: Circumplex angles for the ten stock emotions, as shipped defaults.
DEFAULT_EMOTION_ANGLES: dict[str, float] = {
    "joy": 0.0,
    "distress": 144.0,
    "happy_for": 58.0,
    "sorry_for": 122.0,
    "appreciation": 26.0,
    "reproach": 153.33,
    "gratitude": 8.0,
    "anger": 164.75,
    "liking": 14.5,
    "disliking": 165.5,
}

EMOTION_NAMES: tuple[str, ...] = tuple(DEFAULT_EMOTION_ANGLES)


def default_emotions() -> dict[str, EmotionSpec]:
    """The ten stock emotions with default threshold 0 and 10 s decay."""
    return {name: EmotionSpec(name, angle) for name, angle in DEFAULT_EMOTION_ANGLES.items()}


def load_emotions(path: str | None = None) -> dict[str, EmotionSpec]:
    """Load emotion specs from a JSON file, or the packaged defaults.

    Expected format: ``{"emotions": [{"name", "angle_deg", "threshold",
    "decay_time_s"}, ...]}``.  Validation errors report the offending row.
    """
    if path is None:
        raw = resources.files("eegs.data").joinpath("emotions.json").read_text()
    else:
        with open(path, encoding="utf-8") as fh:
            raw = fh.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"emotion file is not valid JSON: {exc}") from exc
    specs: dict[str, EmotionSpec] = {}
    for i, row in enumerate(doc.get("emotions", []), start=1):
        try:
            spec = EmotionSpec(
                name=row["name"],
                angle_deg=float(row["angle_deg"]),
                threshold=float(row.get("threshold", 0.0)),
                decay_time_s=float(row.get("decay_time_s", 10.0)),
            )
        except (KeyError, TypeError, ValueError, ValidationError) as exc:
            raise ValidationError(f"emotion file row {i}: {exc}") from exc
        if spec.name in specs:
            raise ValidationError(f"emotion file row {i}: duplicate emotion {spec.name!r}")
        specs[spec.name] = spec
    if not specs:
        raise ValidationError("emotion file defines no emotions")
    return specs


@dataclass(frozen=True)
class PersonalityProfile:
    """Five-Factor traits, each in [0, 1].  Fixed for an agent's lifetime."""

    openness: float = 0.5
    conscientiousness: float = 0.5
    extroversion: float = 0.5
    agreeableness: float = 0.5
    neuroticism: float = 0.5

    def __post_init__(self) -> None:
        for trait, value in self.as_dict().items():
            if not 0.0 <= value <= 1.0:
                raise ValidationError(f"trait {trait} must lie in [0, 1], got {value}")

    def as_dict(self) -> dict[str, float]:
        return {
            "openness": self.openness,
            "conscientiousness": self.conscientiousness,
            "extroversion": self.extroversion,
            "agreeableness": self.agreeableness,
            "neuroticism": self.neuroticism,
        }


@dataclass(frozen=True)
class MoodState:
    """Scalar mood in [-1, 1]; out-of-range inputs are clamped."""

    value: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", clamp(float(self.value), -1.0, 1.0))


@dataclass(frozen=True)
class AppraisalVector:
    """The seven appraisal values computed for one event, post-normalization.

    ``goal_conduciveness`` keeps the per-goal values that were averaged
    into ``desirability``, in deterministic tree order.
    """

    desirability: float
    praiseworthiness: float
    appealingness: float
    deservingness: float
    familiarity: float
    unexpectedness: float
    goal_conduciveness: tuple[float, ...] = ()

    def as_dict(self) -> dict[str, Any]:
        return {
            "desirability": self.desirability,
            "praiseworthiness": self.praiseworthiness,
            "appealingness": self.appealingness,
            "deservingness": self.deservingness,
            "familiarity": self.familiarity,
            "unexpectedness": self.unexpectedness,
            "goal_conduciveness": list(self.goal_conduciveness),
        }


@dataclass
class AffectState:
    """Mutable per-agent affect: emotion intensities, mood, stimulus clocks.

    ``last_stimulus_tick`` records, per emotion, the tick of the last event
    that changed its intensity; the decay clock counts from there.
    """

    intensities: dict[str, float]
    mood: MoodState
    last_stimulus_tick: dict[str, int] = field(default_factory=dict)

    @classmethod
    def initial(cls, emotions: Mapping[str, EmotionSpec], mood: MoodState) -> "AffectState":
        return cls(intensities={name: 0.0 for name in emotions}, mood=mood)

    def to_dict(self) -> dict[str, Any]:
        return {
            "intensities": dict(self.intensities),
            "mood": self.mood.value,
            "last_stimulus_tick": dict(self.last_stimulus_tick),
        }

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "AffectState":
        return cls(
            intensities={str(k): float(v) for k, v in doc["intensities"].items()},
            mood=MoodState(float(doc["mood"])),
            last_stimulus_tick={str(k): int(v) for k, v in doc.get("last_stimulus_tick", {}).items()},
        )
