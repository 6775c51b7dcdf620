"""Cognitive appraisal: seven event-evaluation variables.

Every function here is pure: appraising reads an immutable view of memory
and never writes, so the seven computations can run in any order (or
concurrently) and produce the identical vector.

Values that can structurally escape their declared range (deservingness
and unexpectedness accumulate history terms) are squashed back by a
logistic curve; in-range values pass through untouched, so e.g. a
stranger's familiarity of exactly 1.0 survives into the vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import AppraisalVector, EventRecord, SELF, Valence
from .memory import AgentMemory, StandardEntry, Preference


@dataclass(frozen=True)
class LogisticParams:
    """Parameters of the squashing curve: gap / (1 + e^(-slope*(x - midpoint))) + offset."""

    range_gap: float
    slope: float
    midpoint: float
    offset: float

    def as_dict(self) -> dict[str, float]:
        return {"range_gap": self.range_gap, "slope": self.slope,
                "midpoint": self.midpoint, "offset": self.offset}


#: Squash parameters for variables declared on [0, 1].
UNIT_NORMALIZATION = LogisticParams(range_gap=1.0, slope=10.0, midpoint=0.5, offset=0.0)
#: Squash parameters for variables declared on [-1, 1].
SIGNED_NORMALIZATION = LogisticParams(range_gap=2.0, slope=5.0, midpoint=0.0, offset=-1.0)


def normalize_appraisal(value: float, params: LogisticParams) -> float:
    """Map an arbitrary real into the open range the parameters encode.

    Strictly increasing; the midpoint maps to the center of the range.
    """
    return params.range_gap / (1.0 + math.exp(-params.slope * (value - params.midpoint))) \
        + params.offset


def _squash_if_outside(value: float, lo: float, hi: float, params: LogisticParams) -> float:
    # In-range values pass through; only runaway accumulations get squashed.
    if lo <= value <= hi:
        return value
    return normalize_appraisal(value, params)


def _sign(x: float) -> int:
    return (x > 0) - (x < 0)


def goal_conduciveness(goal_degree: float, event_degree: float, height: int) -> float:
    """How much the event helps (positive) or hinders (negative) one goal.

    The deviation between the two degrees is attenuated by the goal's
    height in the tree: goals nearer the root matter more.
    """
    if height < 1:
        raise ValueError("category nodes are not scorable (height must be >= 1)")
    deviation = abs(abs(goal_degree) - abs(event_degree)) / height
    if goal_degree == 0.0 and event_degree == 0.0:
        return 1.0 - deviation
    if goal_degree == 0.0:
        return -abs(event_degree) / height
    if event_degree == 0.0:
        return -abs(goal_degree) / height
    if _sign(goal_degree) == _sign(event_degree):
        return 1.0 - deviation
    return deviation - 1.0


def conduciveness_per_goal(event: EventRecord, memory: AgentMemory,
                           event_degree: float) -> tuple[float, ...]:
    """Goal conduciveness for every goal relevant to the event, in tree order."""
    return tuple(
        goal_conduciveness(node.degree, event_degree, height)
        for node, height in memory.relevant_goals(event)
    )


def desirability(conduciveness_values: tuple[float, ...]) -> float:
    """Mean conduciveness over the relevant goals; 0 when none are relevant."""
    if not conduciveness_values:
        return 0.0
    return sum(conduciveness_values) / len(conduciveness_values)


def praiseworthiness(event_degree: float, standard: StandardEntry) -> float:
    """Signed match between the action and the agent's standard for it.

    An action congruent with the standard (preferred positive acts,
    disapproved negative acts) is praiseworthy; incongruent acts are
    blameworthy.  A zero-degree action is judged purely on preference.
    """
    approved = standard.preference is Preference.YES
    degree_x_approval = event_degree * standard.approval_degree
    if event_degree < 0:
        return -degree_x_approval if approved else degree_x_approval
    if event_degree > 0:
        return degree_x_approval if approved else -degree_x_approval
    return standard.approval_degree if approved else -standard.approval_degree


def appealingness(perception: float) -> float:
    """The stored perception of the interacting entity, verbatim."""
    return perception


def deservingness(event: EventRecord, memory: AgentMemory, event_degree: float) -> float:
    """Whether the target had this coming, given everyone's track record.

    For events aimed at the agent itself this is just the event degree.
    Otherwise the degree is biased by what the target has previously done
    to the source and to the agent: positive events are more deserved by
    entities with a good record (history added), negative events by
    entities with a bad one (history subtracted).  The result is
    unbounded; the appraise step squashes it back into [-1, 1].
    """
    if event.target == SELF:
        return event_degree
    pi_pos, pi_neg = memory.past_impacts(event.target, event.source)
    pi_self_pos, pi_self_neg = memory.past_impacts(event.target, SELF)
    record = (pi_pos + pi_neg) + (pi_self_pos + pi_self_neg)
    if event.action.valence is Valence.POSITIVE:
        return event_degree + record
    return event_degree - record


def familiarity_appraisal(familiarity: float) -> float:
    """Relationship distance of the interacting entity: 1 stranger, 0 intimate."""
    return familiarity


def unexpectedness(event_degree: float, average_degree: float) -> float:
    """Absolute deviation of the event from the source's historical average.

    Lies in [0, 2] before squashing; with no history the average defaults
    to 0, making first contact exactly |event degree| unexpected.
    """
    return abs(average_degree - event_degree)


def appraise(event: EventRecord, memory: AgentMemory, event_degree: float,
             signed_params: LogisticParams = SIGNED_NORMALIZATION,
             unit_params: LogisticParams = UNIT_NORMALIZATION) -> AppraisalVector:
    """Compute all seven appraisal values for one event.

    Pure with respect to ``memory``; the result is independent of the
    order the individual variables are evaluated in.
    """
    per_goal = conduciveness_per_goal(event, memory, event_degree)
    standard = memory.peek_standard(event.action.name, event.source, event.target)
    source = memory.profile(event.source)
    raw_desirability = desirability(per_goal)
    raw_praiseworthiness = praiseworthiness(event_degree, standard)
    raw_appealingness = appealingness(source.perception)
    raw_deservingness = deservingness(event, memory, event_degree)
    raw_familiarity = familiarity_appraisal(source.familiarity)
    raw_unexpectedness = unexpectedness(
        event_degree, memory.average_past_degree(event.source, event.target))
    return AppraisalVector(
        desirability=_squash_if_outside(raw_desirability, -1.0, 1.0, signed_params),
        praiseworthiness=_squash_if_outside(raw_praiseworthiness, -1.0, 1.0, signed_params),
        appealingness=_squash_if_outside(raw_appealingness, -1.0, 1.0, signed_params),
        deservingness=_squash_if_outside(raw_deservingness, -1.0, 1.0, signed_params),
        familiarity=_squash_if_outside(raw_familiarity, 0.0, 1.0, unit_params),
        unexpectedness=_squash_if_outside(raw_unexpectedness, 0.0, 1.0, unit_params),
        goal_conduciveness=tuple(
            _squash_if_outside(value, -1.0, 1.0, signed_params) for value in per_goal),
    )
