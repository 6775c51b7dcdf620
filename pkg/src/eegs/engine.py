"""The tick-driven pipeline: elicit, appraise, generate affect, regulate.

One engine owns one agent: its memory, affect state and clock.  Events
and ticks are strictly sequential; given the same configuration, starting
state and event sequence, every trace field is reproduced exactly.

Per event the engine elicits the action score, appraises against the
pre-event memory snapshot, folds the raw intensities incrementally into
the affect state (threshold, mood compensation, squash-back into range),
cycles the mood, regulates to a single emotional state, and only then
lets the event mutate memory.  Ticks advance the clock and decay every
active emotion; an emotion is extinct once its decay time has elapsed
since the last event that moved it.
"""

from __future__ import annotations

import csv
import hashlib
import json
import logging
from dataclasses import dataclass, field, replace
from typing import Any, IO, Mapping

from .affect import (DEFAULT_MOOD_BLEND, INTENSITY_NORMALIZATION,
                     MoodBlendCoefficients, WeightModel, aggregate_intensity,
                     apply_mood_compensation, apply_threshold, decay_step,
                     mood_factor, mood_initial, normalize_intensity,
                     raw_intensities, update_mood)
from .appraisal import (LogisticParams, SIGNED_NORMALIZATION,
                        UNIT_NORMALIZATION, appraise)
from .core import (AffectState, AppraisalVector, EMOTION_NAMES, EmotionSpec,
                   EventRecord, MoodState, PersonalityProfile, SELF,
                   default_emotions, load_emotions)
from .elicitation import DEFAULT_CONTEXT, ActionScoreTable, elicit
from .errors import (ConfigMismatchError, StateError, UnscoredActionError,
                     ValidationError)
from .memory import AgentMemory, MemoryUpdateRules
from .regulation import RegulationOutcome, Strategy, regulate

log = logging.getLogger(__name__)

STATE_FORMAT = "eegs-state"
STATE_VERSION = 1
TRACE_FORMAT = "eegs-trace"
TRACE_VERSION = 1

#: Where mood compensation happens relative to intensity normalization.
COMPENSATION_STAGES = ("pre_normalize", "post_normalize")


@dataclass(frozen=True)
class EngineConfig:
    """Every tunable constant of the pipeline, serializable as one document."""

    alpha: float = 0.1               # mood compensation fraction
    beta: float = 0.1                # mood update fraction
    tick_seconds: float = 1.0
    strategy: Strategy = Strategy.ETHICAL
    mood_compensation_stage: str = "pre_normalize"
    signed_normalization: LogisticParams = SIGNED_NORMALIZATION
    unit_normalization: LogisticParams = UNIT_NORMALIZATION
    intensity_normalization: LogisticParams = INTENSITY_NORMALIZATION
    memory_rules: MemoryUpdateRules = MemoryUpdateRules()
    mood_blend: MoodBlendCoefficients = DEFAULT_MOOD_BLEND
    action_table_path: str | None = None
    emotions_path: str | None = None
    weights_path: str | None = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha <= 1.0:
            raise ValidationError(f"alpha must lie in [0, 1], got {self.alpha}")
        if not 0.0 <= self.beta <= 1.0:
            raise ValidationError(f"beta must lie in [0, 1], got {self.beta}")
        if self.tick_seconds <= 0:
            raise ValidationError("tick_seconds must be positive")
        if self.mood_compensation_stage not in COMPENSATION_STAGES:
            raise ValidationError(
                f"mood_compensation_stage must be one of {COMPENSATION_STAGES}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "tick_seconds": self.tick_seconds,
            "strategy": self.strategy.value,
            "mood_compensation_stage": self.mood_compensation_stage,
            "signed_normalization": self.signed_normalization.as_dict(),
            "unit_normalization": self.unit_normalization.as_dict(),
            "intensity_normalization": self.intensity_normalization.as_dict(),
            "memory_rules": self.memory_rules.as_dict(),
            "mood_blend": self.mood_blend.as_dict(),
            "action_table_path": self.action_table_path,
            "emotions_path": self.emotions_path,
            "weights_path": self.weights_path,
        }

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "EngineConfig":
        kwargs: dict[str, Any] = {}
        for key in ("alpha", "beta", "tick_seconds", "mood_compensation_stage",
                    "action_table_path", "emotions_path", "weights_path"):
            if key in doc:
                kwargs[key] = doc[key]
        if "strategy" in doc:
            kwargs["strategy"] = Strategy(doc["strategy"])
        for key in ("signed_normalization", "unit_normalization", "intensity_normalization"):
            if key in doc:
                kwargs[key] = LogisticParams(**doc[key])
        if "memory_rules" in doc:
            kwargs["memory_rules"] = MemoryUpdateRules(**doc["memory_rules"])
        if "mood_blend" in doc:
            kwargs["mood_blend"] = MoodBlendCoefficients(**doc["mood_blend"])
        try:
            return cls(**kwargs)
        except TypeError as exc:
            raise ValidationError(f"bad engine config: {exc}") from exc

    @classmethod
    def load(cls, path: str) -> "EngineConfig":
        with open(path, encoding="utf-8") as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValidationError(f"config file is not valid JSON: {exc}") from exc
        return cls.from_dict(doc)

    def config_hash(self) -> str:
        """Hash of the dynamics constants (paths excluded: moving files is fine)."""
        doc = self.to_dict()
        for key in ("action_table_path", "emotions_path", "weights_path"):
            doc.pop(key, None)
        canonical = json.dumps(doc, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode()).hexdigest()


@dataclass(frozen=True)
class TraceEntry:
    """One pipeline record: an event, a decay tick, or a rejected event."""

    kind: str                        # "event" | "tick" | "error"
    tick: int
    mood_before: float
    mood_after: float
    intensities: Mapping[str, float]
    source: str | None = None
    action: str | None = None
    target: str | None = None
    degree: float | None = None
    appraisals: AppraisalVector | None = None
    raw_intensities: Mapping[str, float] | None = None
    outcome: RegulationOutcome | None = None
    error: str | None = None

    def to_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "kind": self.kind,
            "tick": self.tick,
            "mood_before": self.mood_before,
            "mood_after": self.mood_after,
            "intensities": dict(self.intensities),
        }
        if self.kind == "event":
            doc.update({
                "source": self.source,
                "action": self.action,
                "target": self.target,
                "degree": self.degree,
                "appraisals": self.appraisals.as_dict() if self.appraisals else None,
                "raw_intensities": dict(self.raw_intensities or {}),
                "outcome": _outcome_dict(self.outcome),
            })
        if self.kind == "error":
            doc.update({"source": self.source, "action": self.action,
                        "target": self.target, "error": self.error})
        return doc


def _outcome_dict(outcome: RegulationOutcome | None) -> dict[str, Any] | None:
    if outcome is None:
        return None
    doc: dict[str, Any] = {
        "strategy": outcome.strategy.value,
        "emotion": outcome.emotion,
        "intensity": outcome.intensity,
    }
    if outcome.contributor is not None:
        doc["contributor"] = outcome.contributor
    if outcome.diagnostics is not None:
        doc["diagnostics"] = {
            name: {
                "coefficient_of_standard": d.coefficient_of_standard,
                "quantified_emotion": d.quantified_emotion,
                "coefficient_of_ethics": d.coefficient_of_ethics,
            }
            for name, d in sorted(outcome.diagnostics.items())
        }
    return doc


class Engine:
    """Deterministic single-agent pipeline over discrete ticks."""

    def __init__(self, config: EngineConfig, personality: PersonalityProfile,
                 actions: ActionScoreTable, emotions: Mapping[str, EmotionSpec],
                 weights: WeightModel, memory: AgentMemory | None = None,
                 record_trace: bool = True) -> None:
        self.config = config
        self.personality = personality
        self.actions = actions
        self.emotions = dict(emotions)
        self.weights = weights
        self.memory = memory if memory is not None else AgentMemory(rules=config.memory_rules)
        self.clock = 0
        self.affect = AffectState.initial(self.emotions,
                                          mood_initial(personality, config.mood_blend))
        self.trace: list[TraceEntry] = []
        self.record_trace = record_trace
        self._valence_degrees = {name: spec.valence_degree
                                 for name, spec in self.emotions.items()}

    @classmethod
    def from_config(cls, config: EngineConfig, personality: PersonalityProfile,
                    memory: AgentMemory | None = None,
                    record_trace: bool = True) -> "Engine":
        actions = ActionScoreTable.load(config.action_table_path)
        emotions = load_emotions(config.emotions_path) if config.emotions_path \
            else default_emotions()
        weights = WeightModel.load(config.weights_path) if config.weights_path \
            else WeightModel.default()
        if memory is not None:
            memory.rules = config.memory_rules
        return cls(config, personality, actions, emotions, weights, memory,
                   record_trace=record_trace)

    @property
    def mood(self) -> float:
        return self.affect.mood.value

    def _record(self, entry: TraceEntry) -> TraceEntry:
        if self.record_trace:
            self.trace.append(entry)
        return entry

    # -- pipeline ---------------------------------------------------------------

    def process_event(self, source: str, action_name: str, target: str,
                      context: str = DEFAULT_CONTEXT) -> TraceEntry:
        """Run the four pipeline phases for one event at the current tick.

        Unknown actions reject the event: state is untouched and an error
        entry is returned.
        """
        mood_before = self.mood
        try:
            action = elicit(self.actions, context, action_name)
        except UnscoredActionError as exc:
            return self._record(TraceEntry(
                kind="error", tick=self.clock, mood_before=mood_before,
                mood_after=mood_before, intensities=dict(self.affect.intensities),
                source=source, action=action_name, target=target, error=str(exc)))

        event = EventRecord(source, action, target,
                            timestamp=self.clock * self.config.tick_seconds)
        degree = action.degree

        appraisals = appraise(event, self.memory, degree,
                              signed_params=self.config.signed_normalization,
                              unit_params=self.config.unit_normalization)
        raw = raw_intensities(appraisals, self.weights, self.personality, mood_before)
        published = self._fold_intensities(raw, mood_before)

        for name, intensity in published.items():
            if intensity != self.affect.intensities[name]:
                self.affect.last_stimulus_tick[name] = self.clock
        self.affect.intensities = published

        impact = appraisals.desirability
        aggregate = aggregate_intensity(published, impact, self.emotions)
        self.affect.mood = update_mood(mood_before, mood_factor(aggregate),
                                       self.config.beta)

        interactor = event.source if event.source != SELF else event.target
        outcome = regulate(self.config.strategy, published, self.emotions,
                           interactor, self.memory)

        self.memory.update_after_event(event, self._valence_degrees)

        return self._record(TraceEntry(
            kind="event", tick=self.clock, mood_before=mood_before,
            mood_after=self.mood, intensities=dict(published),
            source=source, action=action_name, target=target, degree=degree,
            appraisals=appraisals, raw_intensities=raw, outcome=outcome))

    def _fold_intensities(self, raw: Mapping[str, float],
                          mood: float) -> dict[str, float]:
        # Incremental accumulation: each event increments or decrements the
        # standing intensity, then thresholds apply.
        accumulated = {
            name: apply_threshold(self.affect.intensities[name] + raw[name],
                                  self.emotions[name])
            for name in self.emotions
        }
        squash = self._squash_intensity
        if self.config.mood_compensation_stage == "pre_normalize":
            compensated = apply_mood_compensation(accumulated, mood, self.emotions,
                                                  self.config.alpha)
            return {name: min(1.0, squash(value)) for name, value in compensated.items()}
        normalized = {name: squash(value) for name, value in accumulated.items()}
        compensated = apply_mood_compensation(normalized, mood, self.emotions,
                                              self.config.alpha)
        return {name: min(1.0, value) for name, value in compensated.items()}

    def _squash_intensity(self, value: float) -> float:
        # Runaway accumulation is squashed back; in-range values pass through,
        # so extinct emotions stay exactly 0.
        if value <= 1.0:
            return value
        return normalize_intensity(value, self.config.intensity_normalization)

    def tick(self) -> TraceEntry:
        """Advance the clock one tick and decay every active emotion."""
        self.clock += 1
        mood = self.mood
        for name, intensity in self.affect.intensities.items():
            if intensity <= 0.0:
                continue
            since = self.clock - self.affect.last_stimulus_tick.get(name, self.clock)
            elapsed = since * self.config.tick_seconds
            self.affect.intensities[name] = decay_step(
                intensity, elapsed, self.emotions[name].decay_time_s)
        return self._record(TraceEntry(
            kind="tick", tick=self.clock, mood_before=mood, mood_after=mood,
            intensities=dict(self.affect.intensities)))

    # -- persistence --------------------------------------------------------------

    def state_dict(self) -> dict[str, Any]:
        return {
            "format": STATE_FORMAT,
            "version": STATE_VERSION,
            "config_hash": self.config.config_hash(),
            "clock": self.clock,
            "personality": self.personality.as_dict(),
            "affect": self.affect.to_dict(),
            "memory": self.memory.to_dict(),
        }

    def save_state(self, path: str) -> None:
        payload = json.dumps(self.state_dict(), sort_keys=True, indent=2) + "\n"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(payload)

    def load_state(self, path: str, allow_config_mismatch: bool = False) -> None:
        """Restore clock, affect, memory and personality from a snapshot.

        A snapshot written under a different configuration hash is refused
        unless ``allow_config_mismatch`` is set, in which case a warning is
        logged and loading proceeds.
        """
        with open(path, encoding="utf-8") as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise StateError(f"state file is corrupt: {exc}") from exc
        if doc.get("format") != STATE_FORMAT:
            raise StateError("not an engine state file")
        if doc.get("version") != STATE_VERSION:
            raise StateError(f"unsupported state version {doc.get('version')!r}")
        stored_hash = doc.get("config_hash")
        if stored_hash != self.config.config_hash():
            if not allow_config_mismatch:
                raise ConfigMismatchError(
                    "snapshot was written under a different configuration; "
                    "pass allow_config_mismatch=True to load anyway")
            log.warning("loading snapshot with mismatched config hash %s", stored_hash)
        try:
            self.personality = PersonalityProfile(**doc["personality"])
            self.affect = AffectState.from_dict(doc["affect"])
            self.memory = AgentMemory.from_dict(doc["memory"])
            self.clock = int(doc["clock"])
        except (KeyError, TypeError, ValueError) as exc:
            raise StateError(f"state file is corrupt: {exc}") from exc


# -- trace serialization ------------------------------------------------------------


def trace_columns(emotion_names: tuple[str, ...] = EMOTION_NAMES) -> list[str]:
    """Stable CSV column order for trace rows."""
    return (
        ["tick", "kind", "source", "action", "target", "degree",
         "desirability", "praiseworthiness", "appealingness", "deservingness",
         "familiarity", "unexpectedness"]
        + [f"raw_{name}" for name in emotion_names]
        + [f"i_{name}" for name in emotion_names]
        + ["mood_before", "mood_after", "strategy", "selected",
           "selected_intensity", "contributor", "error"]
    )


def _fmt(value: float | None) -> str:
    return "" if value is None else repr(value)


def trace_row(entry: TraceEntry,
              emotion_names: tuple[str, ...] = EMOTION_NAMES) -> list[str]:
    a = entry.appraisals
    outcome = entry.outcome
    return (
        [str(entry.tick), entry.kind, entry.source or "", entry.action or "",
         entry.target or "", _fmt(entry.degree)]
        + [_fmt(getattr(a, name)) if a else "" for name in
           ("desirability", "praiseworthiness", "appealingness",
            "deservingness", "familiarity", "unexpectedness")]
        + [_fmt(entry.raw_intensities.get(name)) if entry.raw_intensities else ""
           for name in emotion_names]
        + [_fmt(entry.intensities.get(name)) for name in emotion_names]
        + [_fmt(entry.mood_before), _fmt(entry.mood_after),
           outcome.strategy.value if outcome else "",
           (outcome.emotion or "") if outcome else "",
           _fmt(outcome.intensity) if outcome else "",
           (outcome.contributor or "") if outcome else "",
           entry.error or ""]
    )


def write_trace_csv(entries: list[TraceEntry], fh: IO[str],
                    emotion_names: tuple[str, ...] = EMOTION_NAMES) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(trace_columns(emotion_names))
    for entry in entries:
        writer.writerow(trace_row(entry, emotion_names))


def write_trace_json(entries: list[TraceEntry], fh: IO[str]) -> None:
    doc = {"format": TRACE_FORMAT, "version": TRACE_VERSION,
           "entries": [entry.to_dict() for entry in entries]}
    json.dump(doc, fh, sort_keys=True, indent=2)
    fh.write("\n")
