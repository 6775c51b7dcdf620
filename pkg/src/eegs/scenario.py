"""Scenario files: a personality, optional starting memory, and timed events.

A scenario drives an engine from a cold start: the runner advances the
clock tick by tick and delivers each event at its offset, so decay always
happens before the events of a later tick are processed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from .core import PersonalityProfile
from .elicitation import DEFAULT_CONTEXT, ActionScoreTable
from .engine import Engine, TraceEntry
from .errors import ValidationError


@dataclass(frozen=True)
class ScenarioEvent:
    source: str
    action: str
    target: str
    tick: int


@dataclass(frozen=True)
class Scenario:
    context: str = DEFAULT_CONTEXT
    personality: PersonalityProfile = PersonalityProfile()
    memory: Mapping[str, Any] | None = None   # optional goals/standards/entities doc
    events: tuple[ScenarioEvent, ...] = ()


def parse_scenario(doc: Mapping[str, Any]) -> Scenario:
    try:
        personality = PersonalityProfile(**doc.get("personality", {}))
    except (TypeError, ValidationError) as exc:
        raise ValidationError(f"scenario personality: {exc}") from exc
    events = []
    last_tick = 0
    for i, row in enumerate(doc.get("events", []), start=1):
        try:
            event = ScenarioEvent(source=row["source"], action=row["action"],
                                  target=row["target"], tick=int(row.get("tick", 0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"scenario event {i}: {exc}") from exc
        if event.tick < last_tick:
            raise ValidationError(
                f"scenario event {i}: tick {event.tick} decreases (previous {last_tick})")
        if event.tick < 0:
            raise ValidationError(f"scenario event {i}: negative tick")
        last_tick = event.tick
        events.append(event)
    return Scenario(
        context=doc.get("context", DEFAULT_CONTEXT),
        personality=personality,
        memory=doc.get("memory"),
        events=tuple(events),
    )


def load_scenario(path: str) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"scenario file is not valid JSON: {exc}") from exc
    return parse_scenario(doc)


def validate_events(scenario: Scenario, actions: ActionScoreTable) -> None:
    """Reject the whole scenario if any event references an unscored action."""
    for i, event in enumerate(scenario.events, start=1):
        if (scenario.context, event.action) not in actions:
            raise ValidationError(
                f"scenario event {i}: action {event.action!r} has no score "
                f"in context {scenario.context!r}")


def build_engine(config, scenario: Scenario, record_trace: bool = True) -> Engine:
    """Engine for one scenario: its personality plus any starting memory."""
    from .memory import AgentMemory

    memory = AgentMemory.from_dict(scenario.memory) if scenario.memory else None
    engine = Engine.from_config(config, scenario.personality, memory=memory,
                                record_trace=record_trace)
    validate_events(scenario, engine.actions)
    return engine


def run_scenario(engine: Engine, scenario: Scenario) -> list[TraceEntry]:
    """Deliver every event at its tick offset, decaying between ticks."""
    for event in scenario.events:
        while engine.clock < event.tick:
            engine.tick()
        engine.process_event(event.source, event.action, event.target,
                             context=scenario.context)
    return engine.trace
