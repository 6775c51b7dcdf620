"""Agent memory: goal tree, standards, attitudes, and event history.

These are the three ingredients cognitive appraisal draws on, plus the
historical record behind deservingness and unexpectedness.  All queries
are read-only; mutation happens in one place (:meth:`AgentMemory.
update_after_event`), which the engine calls once per processed event,
after affect generation, so every event is appraised against pre-event
memory.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterator, Mapping

from .core import SELF, EntityProfile, EventRecord, clamp
from .errors import ValidationError

ROOT_NAME = "Root"
SELF_GOAL = "Self_goal"
OTHER_GOAL = "Other_goal"

#: Approval degree assigned when a standard is first created.
NEUTRAL_APPROVAL = 0.5
#: Approval degrees live in (0, 1]; this is the floor kept after updates.
MIN_APPROVAL = 1e-6


class Preference(Enum):
    YES = "YES"
    NO = "NO"


class GoalKind(Enum):
    ACTIVE_PURSUIT = "A"
    INTEREST = "I"
    REPLENISHMENT = "R"


@dataclass(frozen=True)
class GoalNode:
    """One node of the goal tree.

    Category nodes (the root and its two children) carry no target and are
    never scored; every deeper node is a scorable goal with a signed
    degree: how strongly the agent wants the named action/emotion to hold
    for the target.
    """

    name: str
    target: str | None = None
    degree: float = 0.0
    kind: GoalKind = GoalKind.REPLENISHMENT
    children: tuple["GoalNode", ...] = ()

    def __post_init__(self) -> None:
        if not -1.0 <= self.degree <= 1.0:
            raise ValidationError(f"goal {self.name!r}: degree must lie in [-1, 1]")


def goal(name: str, target: str | None, degree: float,
         kind: GoalKind = GoalKind.REPLENISHMENT,
         children: tuple[GoalNode, ...] = ()) -> GoalNode:
    """Convenience constructor for scorable goal nodes."""
    return GoalNode(name, target, degree, kind, children)


class GoalTree:
    """The agent's goals, rooted at (Root) with Self/Other category children."""

    def __init__(self, self_goals: tuple[GoalNode, ...] = (),
                 other_goals: tuple[GoalNode, ...] = ()) -> None:
        self.root = GoalNode(ROOT_NAME, None, 0.0, GoalKind.REPLENISHMENT, (
            GoalNode(SELF_GOAL, None, 0.0, GoalKind.REPLENISHMENT, tuple(self_goals)),
            GoalNode(OTHER_GOAL, None, 0.0, GoalKind.REPLENISHMENT, tuple(other_goals)),
        ))
        self._validate()

    def _validate(self) -> None:
        seen: set[int] = set()
        for node, _height in self.walk():
            if id(node) in seen:
                raise ValidationError(f"goal tree is not a tree: node {node.name!r} reachable twice")
            seen.add(id(node))

    def walk(self) -> Iterator[tuple[GoalNode, int]]:
        """Depth-first preorder traversal yielding (node, height-from-root)."""
        stack: list[tuple[GoalNode, int]] = [(self.root, 0)]
        while stack:
            node, height = stack.pop()
            yield node, height
            for child in reversed(node.children):
                stack.append((child, height + 1))

    def scorable(self) -> Iterator[tuple[GoalNode, int]]:
        """All non-category nodes, i.e. everything at height >= 2."""
        for node, height in self.walk():
            if height >= 2:
                yield node, height

    def to_list(self) -> list[dict[str, Any]]:
        def dump(node: GoalNode) -> dict[str, Any]:
            doc: dict[str, Any] = {
                "name": node.name,
                "target": node.target,
                "degree": node.degree,
                "kind": node.kind.value,
            }
            if node.children:
                doc["children"] = [dump(c) for c in node.children]
            return doc

        self_cat, other_cat = self.root.children
        return [
            {"category": SELF_GOAL, "goals": [dump(c) for c in self_cat.children]},
            {"category": OTHER_GOAL, "goals": [dump(c) for c in other_cat.children]},
        ]

    @classmethod
    def from_list(cls, doc: list[dict[str, Any]]) -> "GoalTree":
        def parse(row: Mapping[str, Any]) -> GoalNode:
            try:
                return GoalNode(
                    name=row["name"],
                    target=row.get("target"),
                    degree=float(row.get("degree", 0.0)),
                    kind=GoalKind(row.get("kind", "R")),
                    children=tuple(parse(c) for c in row.get("children", [])),
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise ValidationError(f"bad goal node {row!r}: {exc}") from exc

        groups = {entry.get("category"): entry.get("goals", []) for entry in doc}
        unknown = set(groups) - {SELF_GOAL, OTHER_GOAL}
        if unknown:
            raise ValidationError(f"unknown goal categories: {sorted(unknown)}")
        return cls(
            self_goals=tuple(parse(g) for g in groups.get(SELF_GOAL, [])),
            other_goals=tuple(parse(g) for g in groups.get(OTHER_GOAL, [])),
        )


@dataclass(frozen=True)
class StandardEntry:
    """A belief about whether ``source`` may direct an action/emotion at ``target``."""

    action_or_emotion: str
    source: str
    target: str
    preference: Preference
    approval_degree: float

    def __post_init__(self) -> None:
        if not 0.0 < self.approval_degree <= 1.0:
            raise ValidationError(
                f"approval degree must lie in (0, 1], got {self.approval_degree}")

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.action_or_emotion, self.source, self.target)

    @property
    def signed_approval(self) -> float:
        """+degree when preferred, -degree when disapproved."""
        sign = 1.0 if self.preference is Preference.YES else -1.0
        return sign * self.approval_degree


@dataclass(frozen=True)
class AttitudeEntry:
    entity: str
    perception: float


class EventHistory:
    """Append-only, timestamp-ordered record of all processed events.

    Per-(source, target) sums are maintained incrementally so the
    deservingness and unexpectedness queries stay O(1); a brute-force
    rescan must (and, per the tests, does) give identical answers.
    """

    def __init__(self) -> None:
        self.events: list[EventRecord] = []
        # (source, target) -> [count, degree_sum, positive_sum, negative_sum]
        self._stats: dict[tuple[str, str], list[float]] = {}

    def __len__(self) -> int:
        return len(self.events)

    def append(self, event: EventRecord) -> None:
        if self.events and event.timestamp < self.events[-1].timestamp:
            raise ValidationError(
                f"event timestamps must be non-decreasing "
                f"({event.timestamp} after {self.events[-1].timestamp})")
        self.events.append(event)
        stats = self._stats.setdefault((event.source, event.target), [0, 0.0, 0.0, 0.0])
        degree = event.action.degree
        stats[0] += 1
        stats[1] += degree
        if degree > 0:
            stats[2] += degree
        elif degree < 0:
            stats[3] += degree

    def past_impacts(self, source: str, target: str) -> tuple[float, float]:
        """(sum of positive degrees, sum of negative degrees) from source to target."""
        stats = self._stats.get((source, target))
        if stats is None:
            return (0.0, 0.0)
        return (stats[2], stats[3])

    def average_past_degree(self, source: str, target: str) -> float:
        """Mean action degree from source to target; 0 with no matching events."""
        stats = self._stats.get((source, target))
        if stats is None or stats[0] == 0:
            return 0.0
        return stats[1] / stats[0]


@dataclass(frozen=True)
class MemoryUpdateRules:
    """Constants governing how memory adapts after each event."""

    perception_rate: float = 0.2     # EMA weight pulling perception toward the event degree
    familiarity_step: float = 0.1    # fixed familiarity decrease per interaction with the source
    standard_rate: float = 0.1       # drift rate of SELF-sourced negative-emotion standards

    def as_dict(self) -> dict[str, float]:
        return {
            "perception_rate": self.perception_rate,
            "familiarity_step": self.familiarity_step,
            "standard_rate": self.standard_rate,
        }


class AgentMemory:
    """Goals, standards, attitudes and history for one agent."""

    def __init__(self, goals: GoalTree | None = None,
                 rules: MemoryUpdateRules | None = None) -> None:
        self.goals = goals if goals is not None else GoalTree()
        self.rules = rules if rules is not None else MemoryUpdateRules()
        self.standards: dict[tuple[str, str, str], StandardEntry] = {}
        self.entities: dict[str, EntityProfile] = {}
        self.history = EventHistory()

    # -- queries ------------------------------------------------------------

    def relevant_goals(self, event: EventRecord) -> list[tuple[GoalNode, int]]:
        """Scorable goals the event bears on: target match, or target-agnostic.

        Category nodes are never relevant.  Order is deterministic
        (preorder over the tree).
        """
        return [
            (node, height)
            for node, height in self.goals.scorable()
            if node.target is None or node.target == event.target
        ]

    def past_impacts(self, source: str, target: str) -> tuple[float, float]:
        return self.history.past_impacts(source, target)

    def average_past_degree(self, source: str, target: str) -> float:
        return self.history.average_past_degree(source, target)

    def profile(self, name: str) -> EntityProfile:
        """The stored profile, or a fresh stranger profile (not inserted)."""
        return self.entities.get(name) or EntityProfile(name)

    def attitudes(self) -> list[AttitudeEntry]:
        return [AttitudeEntry(p.name, p.perception) for p in
                sorted(self.entities.values(), key=lambda p: p.name)]

    def peek_standard(self, action_or_emotion: str, source: str, target: str) -> StandardEntry:
        """Like :meth:`lookup_standard` but without creating the entry.

        Appraisal uses this so that appraising is a pure read of the
        memory snapshot.
        """
        key = (action_or_emotion, source, target)
        entry = self.standards.get(key)
        if entry is None:
            entry = StandardEntry(action_or_emotion, source, target,
                                  Preference.YES, NEUTRAL_APPROVAL)
        return entry

    def lookup_standard(self, action_or_emotion: str, source: str, target: str) -> StandardEntry:
        """Fetch a standard, creating a neutral (YES, 0.5) entry if absent."""
        key = (action_or_emotion, source, target)
        entry = self.standards.get(key)
        if entry is None:
            entry = StandardEntry(action_or_emotion, source, target,
                                  Preference.YES, NEUTRAL_APPROVAL)
            self.standards[key] = entry
        return entry

    def standards_for(self, action_or_emotion: str, target: str) -> list[StandardEntry]:
        """All stored standards about expressing something at ``target``, any source."""
        return [entry for entry in sorted(self.standards.values(), key=lambda s: s.key)
                if entry.action_or_emotion == action_or_emotion and entry.target == target]

    # -- mutation -----------------------------------------------------------

    def update_after_event(self, event: EventRecord,
                           emotion_valence_degrees: Mapping[str, float]) -> None:
        """Fold one appraised event into memory.

        Appends the event to history, then:

        * both participants' perceptions move by EMA toward the event
          degree (clamped to [-1, 1]);
        * the source's familiarity distance shrinks by one fixed step
          (floored at 0);
        * the standard for the event's own action drifts toward the
          experienced degree, so repeatedly hurtful actions become
          disapproved (blameworthy) and kind ones approved;
        * SELF-sourced emotion standards toward the source are created
          neutrally on first contact, and the negative-emotion ones drift
          opposite to the experienced degree, flipping preference when the
          belief crosses zero.  Bad behaviour thus erodes the prohibition
          on negative emotions toward the source.
        """
        self.history.append(event)
        degree = event.action.degree
        rate = self.rules.perception_rate

        for name in {event.source, event.target}:
            profile = self.profile(name)
            perception = clamp((1.0 - rate) * profile.perception + rate * degree, -1.0, 1.0)
            self.entities[name] = EntityProfile(name, profile.familiarity, perception)

        source_profile = self.entities[event.source]
        familiarity = max(0.0, source_profile.familiarity - self.rules.familiarity_step)
        self.entities[event.source] = EntityProfile(event.source, familiarity,
                                                    source_profile.perception)

        self._drift_standard(
            self.lookup_standard(event.action.name, event.source, event.target),
            self.rules.standard_rate * degree)

        if event.source == SELF:
            return
        for emotion, vdeg in emotion_valence_degrees.items():
            entry = self.lookup_standard(emotion, SELF, event.source)
            if vdeg < 0:
                self._drift_standard(entry, self.rules.standard_rate * (-degree))

    def _drift_standard(self, entry: StandardEntry, delta: float) -> None:
        # Drift happens in signed-belief space (+approval for YES, -approval
        # for NO) so the preference flips exactly when the belief crosses 0.
        signed = clamp(entry.signed_approval + delta, -1.0, 1.0)
        if signed > 0:
            preference = Preference.YES
        elif signed < 0:
            preference = Preference.NO
        else:
            preference = entry.preference
        self.standards[entry.key] = StandardEntry(
            entry.action_or_emotion, entry.source, entry.target,
            preference, max(MIN_APPROVAL, abs(signed)))

    # -- persistence ----------------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        return {
            "goals": self.goals.to_list(),
            "rules": self.rules.as_dict(),
            "standards": [
                {
                    "action_or_emotion": s.action_or_emotion,
                    "source": s.source,
                    "target": s.target,
                    "preference": s.preference.value,
                    "approval_degree": s.approval_degree,
                }
                for s in sorted(self.standards.values(), key=lambda s: s.key)
            ],
            "entities": [
                {"name": p.name, "familiarity": p.familiarity, "perception": p.perception}
                for p in sorted(self.entities.values(), key=lambda p: p.name)
            ],
            "history": [
                {
                    "source": e.source,
                    "action": {
                        "name": e.action.name,
                        "valence": e.action.valence.value,
                        "degree": e.action.degree,
                    },
                    "target": e.target,
                    "timestamp": e.timestamp,
                    "other_info": dict(e.other_info),
                }
                for e in self.history.events
            ],
        }

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "AgentMemory":
        from .core import ActionSpec, Valence  # local to avoid import noise at module top

        memory = cls(
            goals=GoalTree.from_list(doc.get("goals", [])),
            rules=MemoryUpdateRules(**doc["rules"]) if "rules" in doc else None,
        )
        for i, row in enumerate(doc.get("standards", []), start=1):
            try:
                entry = StandardEntry(
                    action_or_emotion=row["action_or_emotion"],
                    source=row["source"],
                    target=row["target"],
                    preference=Preference(row["preference"]),
                    approval_degree=float(row["approval_degree"]),
                )
            except (KeyError, TypeError, ValueError, ValidationError) as exc:
                raise ValidationError(f"standards row {i}: {exc}") from exc
            if entry.key in memory.standards:
                raise ValidationError(f"standards row {i}: duplicate key {entry.key}")
            memory.standards[entry.key] = entry
        for i, row in enumerate(doc.get("entities", []), start=1):
            try:
                profile = EntityProfile(row["name"], float(row["familiarity"]),
                                        float(row["perception"]))
            except (KeyError, TypeError, ValueError, ValidationError) as exc:
                raise ValidationError(f"entities row {i}: {exc}") from exc
            memory.entities[profile.name] = profile
        for i, row in enumerate(doc.get("history", []), start=1):
            try:
                action = row["action"]
                event = EventRecord(
                    source=row["source"],
                    action=ActionSpec(action["name"], Valence(action["valence"]),
                                      float(action["degree"])),
                    target=row["target"],
                    timestamp=float(row["timestamp"]),
                    other_info=dict(row.get("other_info", {})),
                )
            except (KeyError, TypeError, ValueError, ValidationError) as exc:
                raise ValidationError(f"history row {i}: {exc}") from exc
            memory.history.append(event)
        return memory
