"""Convergence of multiple active emotions to one regulated state.

Three strategies: take the most intense emotion, blend all intensities
into one value, or reason over the agent's ethical standards and pick the
emotion whose expression toward the current interlocutor is most
sanctioned.  All selections are deterministic: ties break toward the
larger |valence degree|, then the lexicographically smaller name.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

from .core import EmotionSpec
from .memory import AgentMemory, Preference, StandardEntry

log = logging.getLogger(__name__)

#: Emotions count as active above this intensity.
ACTIVE_THRESHOLD = 0.0

BLEND_SCALE = 10.0  # intensities are stretched by 2**(BLEND_SCALE * i) before log-summing
BLEND_LABEL = "blended"


class Strategy(Enum):
    HIGHEST = "highest"
    BLENDED = "blended"
    ETHICAL = "ethical"


@dataclass(frozen=True)
class EthicsDiagnostics:
    """Per-emotion ethical bookkeeping for one selection."""

    coefficient_of_standard: float
    quantified_emotion: float
    coefficient_of_ethics: float


@dataclass(frozen=True)
class RegulationOutcome:
    strategy: Strategy
    emotion: str | None            # None when nothing was active
    intensity: float
    contributor: str | None = None  # dominant emotion behind a blended label
    diagnostics: Mapping[str, EthicsDiagnostics] | None = None

    @property
    def no_active_emotion(self) -> bool:
        return self.emotion is None


def active_emotions(intensities: Mapping[str, float]) -> dict[str, float]:
    return {name: i for name, i in intensities.items() if i > ACTIVE_THRESHOLD}


def _argmax(scores: Mapping[str, float], specs: Mapping[str, EmotionSpec]) -> str:
    best = max(scores.values())
    contenders = [name for name, score in scores.items() if score == best]
    # Ties go to the larger |valence degree|, then the smaller name.
    return min(contenders, key=lambda name: (-abs(specs[name].valence_degree), name))


def select_highest(intensities: Mapping[str, float],
                   specs: Mapping[str, EmotionSpec]) -> RegulationOutcome:
    """Pick the most intense active emotion."""
    active = active_emotions(intensities)
    if not active:
        return RegulationOutcome(Strategy.HIGHEST, None, 0.0)
    winner = _argmax(active, specs)
    return RegulationOutcome(Strategy.HIGHEST, winner, active[winner])


def blended_intensity(intensities: Sequence[float]) -> float:
    """Log-sum-exp blend of the active intensities.

    Collapses to the identity for a single emotion and never exceeds the
    maximum by more than 0.1 * log2(N).
    """
    if not intensities:
        raise ValueError("cannot blend an empty set of intensities")
    if len(intensities) == 1:
        return float(intensities[0])
    return 0.1 * math.log2(sum(2.0 ** (BLEND_SCALE * i) for i in intensities))


def select_blended(intensities: Mapping[str, float],
                   specs: Mapping[str, EmotionSpec]) -> RegulationOutcome:
    """Blend all active intensities; the label stays synthetic, with the
    dominant contributor reported alongside."""
    active = active_emotions(intensities)
    if not active:
        return RegulationOutcome(Strategy.BLENDED, None, 0.0)
    blended = blended_intensity(list(active.values()))
    return RegulationOutcome(Strategy.BLENDED, BLEND_LABEL, blended,
                             contributor=_argmax(active, specs))


def coefficient_of_standard(emotion: str, target: str,
                            standards: Sequence[StandardEntry]) -> float:
    """Mean signed approval of expressing ``emotion`` toward ``target``.

    Averages over every stored standard for that emotion and target, any
    source; no matching standards means a neutral 0.
    """
    matching = [s for s in standards
                if s.action_or_emotion == emotion and s.target == target]
    if not matching:
        return 0.0
    total = sum(s.approval_degree if s.preference is Preference.YES else -s.approval_degree
                for s in matching)
    return total / len(matching)


def quantified_emotion(spec: EmotionSpec, intensity: float) -> float:
    """Valence degree times intensity: the emotion's signed strength."""
    return spec.valence_degree * intensity


def coefficient_of_ethics(cos: float, qe: float) -> float:
    """CoS scaled by the emotion's unsigned strength.

    |QE| keeps a negative emotion from flipping a disapproving standard
    into an endorsement.
    """
    return cos * abs(qe)


def select_ethical(intensities: Mapping[str, float],
                   specs: Mapping[str, EmotionSpec],
                   target: str, memory: AgentMemory) -> RegulationOutcome:
    """Pick the active emotion whose expression is most ethically sanctioned."""
    active = active_emotions(intensities)
    if not active:
        return RegulationOutcome(Strategy.ETHICAL, None, 0.0)
    # One deterministic pass, bucketing the standards aimed at the target.
    buckets: dict[str, list[StandardEntry]] = {}
    for entry in sorted(memory.standards.values(), key=lambda s: s.key):
        if entry.target == target:
            buckets.setdefault(entry.action_or_emotion, []).append(entry)
    diagnostics: dict[str, EthicsDiagnostics] = {}
    scores: dict[str, float] = {}
    for name, intensity in active.items():
        cos = coefficient_of_standard(name, target, buckets.get(name, ()))
        qe = quantified_emotion(specs[name], intensity)
        coe = coefficient_of_ethics(cos, qe)
        diagnostics[name] = EthicsDiagnostics(cos, qe, coe)
        scores[name] = coe
    if all(d.coefficient_of_standard == 0.0 for d in diagnostics.values()):
        log.debug("no standards toward %s: ethical selection degenerates to tie-break", target)
    winner = _argmax(scores, specs)
    return RegulationOutcome(Strategy.ETHICAL, winner, active[winner],
                             diagnostics=diagnostics)


def regulate(strategy: Strategy, intensities: Mapping[str, float],
             specs: Mapping[str, EmotionSpec], target: str,
             memory: AgentMemory) -> RegulationOutcome:
    if strategy is Strategy.HIGHEST:
        return select_highest(intensities, specs)
    if strategy is Strategy.BLENDED:
        return select_blended(intensities, specs)
    return select_ethical(intensities, specs, target, memory)
