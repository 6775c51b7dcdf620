"""Appraisal-driven emotion engine with learned personality/mood weighting.

The pipeline runs four phases per event: first-order elicitation of a
signed action score, cognitive appraisal of seven evaluation variables
against the agent's goals/standards/attitudes, affect generation through
the factored appraisal-emotion weight network, and regulation of the
active emotions down to one socially defensible state.
"""

from .affect import (TrainingDataset, TrainingResult, WeightModel,
                     make_planted_dataset, sgd_train)
from .core import (ActionSpec, AffectState, AppraisalVector, EmotionSpec,
                   EntityProfile, EventRecord, MoodState, PersonalityProfile,
                   SELF, Valence, valence_degree)
from .elicitation import ActionScoreTable, elicit
from .engine import Engine, EngineConfig, TraceEntry, write_trace_csv, write_trace_json
from .errors import (ConfigMismatchError, EegsError, StateError, TopologyError,
                     TrainingDivergedError, UnscoredActionError, ValidationError)
from .memory import (AgentMemory, AttitudeEntry, EventHistory, GoalNode,
                     GoalTree, Preference, StandardEntry, goal)
from .regulation import RegulationOutcome, Strategy
from .scenario import Scenario, build_engine, load_scenario, run_scenario

__version__ = "0.1.0"

__all__ = [
    "ActionScoreTable", "ActionSpec", "AffectState", "AgentMemory",
    "AppraisalVector", "AttitudeEntry", "ConfigMismatchError", "EegsError",
    "EmotionSpec", "Engine", "EngineConfig", "EntityProfile", "EventHistory",
    "EventRecord", "GoalNode", "GoalTree", "MoodState", "PersonalityProfile",
    "Preference", "RegulationOutcome", "SELF", "Scenario", "StandardEntry",
    "StateError", "Strategy", "TopologyError", "TraceEntry", "TrainingDataset",
    "TrainingDivergedError", "TrainingResult", "UnscoredActionError",
    "Valence", "ValidationError", "WeightModel", "build_engine", "elicit",
    "goal", "load_scenario", "make_planted_dataset", "run_scenario",
    "sgd_train", "valence_degree", "write_trace_csv", "write_trace_json",
]
