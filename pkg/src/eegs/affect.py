"""Affect generation: appraisal values -> emotion intensities -> mood.

The appraisal-emotion association network carries one weight per link,
and each weight decomposes into six learned factor loadings -- one per
Five-Factor trait plus one for mood -- so the same appraisal can move
different personalities differently.  The factor loadings are fitted by
per-sample gradient descent on observed (appraisal, factors, intensity)
triples; the fitted model then drives the per-emotion intensity formulas,
several of which combine their contributions non-linearly.

Mood closes the loop: it modulates intensities (congruent emotions get a
small boost, incongruent ones a cut), and the generated intensities feed
back into mood.  Intensities decay between stimuli on a curve that stays
flat just after onset and hits zero exactly at the emotion's decay time.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from . import _accel
from .appraisal import LogisticParams, UNIT_NORMALIZATION, normalize_appraisal
from .core import (AppraisalVector, EmotionSpec, MoodState, PersonalityProfile,
                   clamp)
from .errors import TopologyError, TrainingDivergedError, ValidationError

#: Order of the weight-decomposition factors everywhere in the package.
FACTOR_NAMES: tuple[str, ...] = ("O", "C", "E", "A", "N", "M")

#: The six appraisal variables that link directly to emotions.
VARIABLE_NAMES: tuple[str, ...] = (
    "desirability", "praiseworthiness", "appealingness",
    "deservingness", "familiarity", "unexpectedness",
)

#: Which appraisal variables feed which emotion.
ASSOCIATION: dict[str, tuple[str, ...]] = {
    "joy": ("desirability",),
    "distress": ("desirability",),
    "happy_for": ("desirability", "deservingness"),
    "sorry_for": ("desirability", "deservingness"),
    "appreciation": ("praiseworthiness", "unexpectedness"),
    "reproach": ("praiseworthiness", "unexpectedness"),
    "gratitude": ("desirability", "praiseworthiness", "unexpectedness"),
    "anger": ("desirability", "praiseworthiness", "unexpectedness"),
    "liking": ("appealingness", "familiarity"),
    "disliking": ("appealingness", "familiarity"),
}

#: Default sign of each link: which direction the variable pushes the emotion.
_LINK_SIGNS: dict[tuple[str, str], float] = {
    ("joy", "desirability"): 1.0,
    ("distress", "desirability"): -1.0,
    ("happy_for", "desirability"): 1.0,
    ("happy_for", "deservingness"): 1.0,
    ("sorry_for", "desirability"): -1.0,
    ("sorry_for", "deservingness"): -1.0,
    ("appreciation", "praiseworthiness"): 1.0,
    ("appreciation", "unexpectedness"): 1.0,
    ("reproach", "praiseworthiness"): -1.0,
    ("reproach", "unexpectedness"): 1.0,
    ("gratitude", "desirability"): 1.0,
    ("gratitude", "praiseworthiness"): 1.0,
    ("gratitude", "unexpectedness"): 1.0,
    ("anger", "desirability"): -1.0,
    ("anger", "praiseworthiness"): -1.0,
    ("anger", "unexpectedness"): 1.0,
    ("liking", "appealingness"): 1.0,
    ("liking", "familiarity"): 1.0,
    ("disliking", "appealingness"): -1.0,
    ("disliking", "familiarity"): 1.0,
}

#: Intensities are squashed with the same curve as unit-range appraisals.
INTENSITY_NORMALIZATION = UNIT_NORMALIZATION

WEIGHTS_FORMAT = "eegs-weights"
WEIGHTS_VERSION = 1
DATASET_MAGIC = "# eegs-dataset v1"


def association_topology() -> tuple[tuple[str, str], ...]:
    """All (emotion, variable) links of the stock association table."""
    return tuple((emotion, variable)
                 for emotion, variables in ASSOCIATION.items()
                 for variable in variables)


def factor_vector(personality: PersonalityProfile, mood: float) -> np.ndarray:
    """The six modulating factor values in FACTOR_NAMES order."""
    return np.array([
        personality.openness, personality.conscientiousness,
        personality.extroversion, personality.agreeableness,
        personality.neuroticism, mood,
    ])


class WeightModel:
    """Factor loadings for every appraisal-emotion link.

    ``factors[j]`` holds the six loadings of link ``links[j]``; composing
    them with an agent's factor values yields that link's weight, clamped
    to [-1, 1].
    """

    def __init__(self, emotions: Sequence[str], variables: Sequence[str],
                 links: Sequence[tuple[str, str]],
                 factors: np.ndarray | None = None) -> None:
        self.emotions = tuple(emotions)
        self.variables = tuple(variables)
        self.links = tuple((e, v) for e, v in links)
        for emotion, variable in self.links:
            if emotion not in self.emotions or variable not in self.variables:
                raise ValidationError(f"link ({emotion}, {variable}) names unknown entries")
        if factors is None:
            factors = np.zeros((len(self.links), len(FACTOR_NAMES)))
        self.factors = np.asarray(factors, dtype=float)
        if self.factors.shape != (len(self.links), len(FACTOR_NAMES)):
            raise ValidationError(
                f"factor array must be ({len(self.links)}, {len(FACTOR_NAMES)}), "
                f"got {self.factors.shape}")
        self._index = {link: j for j, link in enumerate(self.links)}

    @classmethod
    def default(cls) -> "WeightModel":
        """Sign-structured uniform loadings over the stock association table.

        Every factor of a link loads 1/6 with the link's push direction, so
        a mid-range personality composes to a weight of about +-0.4.
        """
        links = association_topology()
        factors = np.array([[_LINK_SIGNS[link] / 6.0] * len(FACTOR_NAMES)
                            for link in links])
        from .core import EMOTION_NAMES
        return cls(EMOTION_NAMES, VARIABLE_NAMES, links, factors)

    @classmethod
    def zeros(cls, emotions: Sequence[str], variables: Sequence[str],
              links: Sequence[tuple[str, str]] | None = None) -> "WeightModel":
        if links is None:
            links = tuple((e, v) for e in emotions for v in variables)
        return cls(emotions, variables, links)

    def link_index(self, emotion: str, variable: str) -> int:
        try:
            return self._index[(emotion, variable)]
        except KeyError:
            raise TopologyError(f"no association link ({emotion}, {variable})") from None

    def weight(self, emotion: str, variable: str,
               personality: PersonalityProfile, mood: float) -> float:
        """Composed link weight: factor loadings dotted with the agent's
        factor values, clamped to [-1, 1]."""
        j = self.link_index(emotion, variable)
        composed = float(self.factors[j] @ factor_vector(personality, mood))
        return clamp(composed, -1.0, 1.0)

    def composed_weights(self, personality: PersonalityProfile,
                         mood: float) -> dict[tuple[str, str], float]:
        raw = (self.factors @ factor_vector(personality, mood)).tolist()
        return {link: clamp(w, -1.0, 1.0) for link, w in zip(self.links, raw)}

    def dense(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(L, K, X) tensor plus link index arrays for the kernels."""
        dense = np.zeros((len(self.emotions), len(self.variables), len(FACTOR_NAMES)))
        links_l = np.empty(len(self.links), dtype=np.int64)
        links_k = np.empty(len(self.links), dtype=np.int64)
        for j, (emotion, variable) in enumerate(self.links):
            l = self.emotions.index(emotion)
            k = self.variables.index(variable)
            dense[l, k] = self.factors[j]
            links_l[j] = l
            links_k[j] = k
        return dense, links_l, links_k

    def with_dense(self, dense: np.ndarray) -> "WeightModel":
        factors = np.array([
            dense[self.emotions.index(e), self.variables.index(v)]
            for e, v in self.links
        ])
        return WeightModel(self.emotions, self.variables, self.links, factors)

    def to_dict(self) -> dict[str, Any]:
        return {
            "format": WEIGHTS_FORMAT,
            "version": WEIGHTS_VERSION,
            "factor_order": list(FACTOR_NAMES),
            "emotions": list(self.emotions),
            "variables": list(self.variables),
            "links": [
                {"emotion": e, "variable": v, "factors": [float(x) for x in self.factors[j]]}
                for j, (e, v) in enumerate(self.links)
            ],
        }

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "WeightModel":
        if doc.get("format") != WEIGHTS_FORMAT:
            raise ValidationError("not a weight-model file")
        if doc.get("version") != WEIGHTS_VERSION:
            raise ValidationError(f"unsupported weight-model version {doc.get('version')!r}")
        if tuple(doc.get("factor_order", ())) != FACTOR_NAMES:
            raise ValidationError("weight-model factor order mismatch")
        links = []
        factors = []
        for i, row in enumerate(doc.get("links", []), start=1):
            try:
                links.append((row["emotion"], row["variable"]))
                loadings = [float(x) for x in row["factors"]]
            except (KeyError, TypeError, ValueError) as exc:
                raise ValidationError(f"weight-model link {i}: {exc}") from exc
            if len(loadings) != len(FACTOR_NAMES):
                raise ValidationError(f"weight-model link {i}: expected {len(FACTOR_NAMES)} factors")
            factors.append(loadings)
        return cls(doc.get("emotions", []), doc.get("variables", []),
                   links, np.array(factors) if factors else None)

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh, indent=2)
            fh.write("\n")

    @classmethod
    def load(cls, path: str) -> "WeightModel":
        with open(path, encoding="utf-8") as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValidationError(f"weight-model file is not valid JSON: {exc}") from exc
        return cls.from_dict(doc)


def association_weight(model: WeightModel, emotion: str, variable: str,
                       personality: PersonalityProfile, mood: float) -> float:
    """Spec'd free-function form of :meth:`WeightModel.weight`."""
    return model.weight(emotion, variable, personality, mood)


def contribution(value: float, weight: float) -> float:
    """Contribution of one appraisal variable to one emotion's intensity."""
    return value * weight


def _signed_power(base: float, exponent: float) -> float:
    # Sign-preserving power with the exponent clamped to [0, 1]; a zero
    # base short-circuits to zero (the formulas' "otherwise" branch).
    if base == 0.0:
        return 0.0
    exponent = clamp(exponent, 0.0, 1.0)
    if base > 0.0:
        return base ** exponent
    return -((-base) ** exponent)


def raw_intensities(appraisals: AppraisalVector, model: WeightModel,
                    personality: PersonalityProfile, mood: float) -> dict[str, float]:
    """Per-emotion raw intensity (emotion potential) from one appraisal vector.

    Joy and distress are single desirability contributions; happy_for and
    sorry_for add a deservingness term linearly.  Appreciation and
    reproach raise |praiseworthiness contribution| to the power
    (1 - unexpectedness contribution), so surprise amplifies sub-unit
    magnitudes while preserving sign; gratitude and anger add the
    desirability contribution to that same power form.  Liking and
    disliking raise |appealingness contribution| to the familiarity
    contribution.
    """
    values = {
        "desirability": appraisals.desirability,
        "praiseworthiness": appraisals.praiseworthiness,
        "appealingness": appraisals.appealingness,
        "deservingness": appraisals.deservingness,
        "familiarity": appraisals.familiarity,
        "unexpectedness": appraisals.unexpectedness,
    }
    weights = model.composed_weights(personality, mood)

    def contrib(emotion: str, variable: str) -> float:
        try:
            return contribution(values[variable], weights[(emotion, variable)])
        except KeyError:
            raise TopologyError(f"no association link ({emotion}, {variable})") from None

    def surprise_power(emotion: str) -> float:
        return _signed_power(contrib(emotion, "praiseworthiness"),
                             1.0 - contrib(emotion, "unexpectedness"))

    return {
        "joy": contrib("joy", "desirability"),
        "distress": contrib("distress", "desirability"),
        "happy_for": contrib("happy_for", "desirability") + contrib("happy_for", "deservingness"),
        "sorry_for": contrib("sorry_for", "desirability") + contrib("sorry_for", "deservingness"),
        "appreciation": surprise_power("appreciation"),
        "reproach": surprise_power("reproach"),
        "gratitude": contrib("gratitude", "desirability") + surprise_power("gratitude"),
        "anger": contrib("anger", "desirability") + surprise_power("anger"),
        "liking": _signed_power(contrib("liking", "appealingness"),
                                contrib("liking", "familiarity")),
        "disliking": _signed_power(contrib("disliking", "appealingness"),
                                   contrib("disliking", "familiarity")),
    }


def apply_threshold(raw: float, spec: EmotionSpec) -> float:
    """Effective intensity: the potential above the emotion's threshold, floored at 0."""
    return max(0.0, raw - spec.threshold)


@dataclass(frozen=True)
class MoodBlendCoefficients:
    """Linear blend mapping Five-Factor traits to the initial mood."""

    openness: float = 0.1
    conscientiousness: float = 0.1
    extroversion: float = 0.4
    agreeableness: float = 0.2
    neuroticism: float = 0.6
    offset: float = 0.2

    def as_dict(self) -> dict[str, float]:
        return {
            "openness": self.openness,
            "conscientiousness": self.conscientiousness,
            "extroversion": self.extroversion,
            "agreeableness": self.agreeableness,
            "neuroticism": self.neuroticism,
            "offset": self.offset,
        }


DEFAULT_MOOD_BLEND = MoodBlendCoefficients()


def mood_initial(personality: PersonalityProfile,
                 blend: MoodBlendCoefficients = DEFAULT_MOOD_BLEND) -> MoodState:
    """Initial mood from personality: extroversion lifts it, neuroticism drags it."""
    value = (blend.openness * personality.openness
             + blend.conscientiousness * personality.conscientiousness
             + blend.extroversion * personality.extroversion
             + blend.agreeableness * personality.agreeableness
             - blend.neuroticism * personality.neuroticism
             - blend.offset)
    return MoodState(clamp(value, -1.0, 1.0))


def apply_mood_compensation(intensities: Mapping[str, float], mood: float,
                            specs: Mapping[str, EmotionSpec],
                            alpha: float = 0.1) -> dict[str, float]:
    """Shift every intensity by alpha*|mood| toward mood-congruent emotions.

    Mood-congruent emotions (same valence sign as the mood) gain the
    compensation, incongruent ones lose it; results are floored at 0.
    """
    delta = abs(alpha * mood)
    mood_sign = (mood > 0) - (mood < 0)
    adjusted: dict[str, float] = {}
    for name, intensity in intensities.items():
        vdeg = specs[name].valence_degree
        congruent = ((vdeg > 0) - (vdeg < 0)) == mood_sign
        adjusted[name] = max(0.0, intensity + delta if congruent else intensity - delta)
    return adjusted


def aggregate_intensity(intensities: Mapping[str, float], impact: float,
                        specs: Mapping[str, EmotionSpec]) -> float:
    """Signed sum of the intensities congruent with the event's impact."""
    if impact > 0:
        return sum(i for name, i in intensities.items()
                   if specs[name].valence_degree > 0)
    return -sum(i for name, i in intensities.items()
                if specs[name].valence_degree < 0)


def mood_factor(aggregate: float) -> float:
    """Squash an aggregate intensity into (-1, 1), odd around zero."""
    return 2.0 / (1.0 + math.exp(-aggregate)) - 1.0


def update_mood(mood: float, factor: float, beta: float = 0.1) -> MoodState:
    """Nudge mood by beta times the factor, clamped to [-1, 1]."""
    return MoodState(clamp(mood + beta * factor, -1.0, 1.0))


def decay_step(intensity: float, t: float, decay_time: float) -> float:
    """Intensity after decaying for ``t`` of ``decay_time`` seconds.

    The factor 1 - e^(t - T) stays near 1 just after the stimulus, falls
    increasingly fast, and reaches exactly 0 at t = T; later times clamp
    to extinction.
    """
    if t < 0:
        raise ValueError("time since stimulus must be non-negative")
    if t >= decay_time:
        return 0.0
    return intensity * (1.0 - math.exp(t - decay_time))


def normalize_intensity(raw: float,
                        params: LogisticParams = INTENSITY_NORMALIZATION) -> float:
    """Squash an accumulated intensity into (0, 1) with the unit-range curve."""
    return normalize_appraisal(raw, params)


# -- training -------------------------------------------------------------------


@dataclass(frozen=True)
class TrainingSample:
    """One observation: appraisal values, factor values, target intensities."""

    appraisals: tuple[float, ...]
    factors: tuple[float, ...]
    targets: tuple[float, ...]


class TrainingDataset:
    """Column-typed sample matrix for the weight learner."""

    def __init__(self, variables: Sequence[str], emotions: Sequence[str],
                 V: np.ndarray, M: np.ndarray, E: np.ndarray) -> None:
        self.variables = tuple(variables)
        self.emotions = tuple(emotions)
        self.V = np.asarray(V, dtype=float)
        self.M = np.asarray(M, dtype=float)
        self.E = np.asarray(E, dtype=float)
        n = len(self.V)
        if n == 0:
            raise ValidationError("dataset contains no samples")
        if self.M.shape != (n, len(FACTOR_NAMES)) or self.E.shape != (n, len(self.emotions)) \
                or self.V.shape != (n, len(self.variables)):
            raise ValidationError("dataset arrays have inconsistent shapes")
        self._validate_ranges()

    def _validate_ranges(self) -> None:
        if self.V.size and (self.V.min() < -1.0 or self.V.max() > 1.0):
            raise ValidationError("appraisal values must lie in [-1, 1]")
        if self.M.size:
            ocean = self.M[:, :5]
            if ocean.min() < 0.0 or ocean.max() > 1.0:
                raise ValidationError("trait factors must lie in [0, 1]")
            if self.M[:, 5].min() < -1.0 or self.M[:, 5].max() > 1.0:
                raise ValidationError("mood factor must lie in [-1, 1]")
        if self.E.size and (self.E.min() < 0.0 or self.E.max() > 1.0):
            raise ValidationError("target intensities must lie in [0, 1]")

    def __len__(self) -> int:
        return len(self.V)

    def samples(self) -> Iterable[TrainingSample]:
        for v, m, e in zip(self.V, self.M, self.E):
            yield TrainingSample(tuple(v), tuple(m), tuple(e))

    def split(self, holdout_fraction: float, seed: int) -> tuple["TrainingDataset", "TrainingDataset"]:
        """Deterministic shuffled split into (train, holdout)."""
        if not 0.0 < holdout_fraction < 1.0:
            raise ValidationError("holdout fraction must lie in (0, 1)")
        rng = np.random.default_rng(seed)
        order = rng.permutation(len(self))
        n_holdout = max(1, int(round(holdout_fraction * len(self))))
        hold, train = order[:n_holdout], order[n_holdout:]
        make = lambda idx: TrainingDataset(self.variables, self.emotions,
                                           self.V[idx], self.M[idx], self.E[idx])
        return make(train), make(hold)

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(DATASET_MAGIC + "\n")
            writer = csv.writer(fh)
            writer.writerow([f"v:{v}" for v in self.variables]
                            + [f"m:{f}" for f in FACTOR_NAMES]
                            + [f"e:{e}" for e in self.emotions])
            for v, m, e in zip(self.V, self.M, self.E):
                writer.writerow([repr(float(x)) for x in (*v, *m, *e)])

    @classmethod
    def load(cls, path: str) -> "TrainingDataset":
        with open(path, encoding="utf-8", newline="") as fh:
            magic = fh.readline().strip()
            if magic != DATASET_MAGIC:
                raise ValidationError(
                    f"line 1: expected dataset header {DATASET_MAGIC!r}, got {magic!r}")
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise ValidationError("line 2: missing column header") from None
            variables = [c[2:] for c in header if c.startswith("v:")]
            factors = [c[2:] for c in header if c.startswith("m:")]
            emotions = [c[2:] for c in header if c.startswith("e:")]
            if tuple(factors) != FACTOR_NAMES:
                raise ValidationError(f"line 2: factor columns must be {FACTOR_NAMES}")
            if len(variables) + len(factors) + len(emotions) != len(header):
                raise ValidationError("line 2: every column must be prefixed v:, m: or e:")
            if not variables or not emotions:
                raise ValidationError("line 2: need at least one v: and one e: column")
            rows = []
            for lineno, row in enumerate(reader, start=3):
                if not row:
                    continue
                if len(row) != len(header):
                    raise ValidationError(
                        f"line {lineno}: expected {len(header)} fields, got {len(row)}")
                try:
                    rows.append([float(x) for x in row])
                except ValueError as exc:
                    raise ValidationError(f"line {lineno}: {exc}") from exc
        if not rows:
            raise ValidationError("dataset contains no samples")
        data = np.array(rows)
        k = len(variables)
        try:
            return cls(variables, emotions, data[:, :k],
                       data[:, k:k + len(FACTOR_NAMES)], data[:, k + len(FACTOR_NAMES):])
        except ValidationError as exc:
            raise ValidationError(f"dataset value check failed: {exc}") from exc


@dataclass
class TrainingResult:
    model: WeightModel
    epoch_losses: list[float]

    @property
    def final_loss(self) -> float:
        return self.epoch_losses[-1]


def sgd_train(dataset: TrainingDataset, eta0: float = 0.05,
              eta_decay: float = 1e-4, epochs: int = 40, seed: int = 0,
              links: Sequence[tuple[str, str]] | None = None,
              backend: str = "auto") -> TrainingResult:
    """Fit factor loadings by sequential per-sample squared-error descent.

    Each sample nudges every trainable loading along
    ``(target - prediction) * factor * appraisal`` with a learning rate of
    ``eta0 / (1 + eta_decay * step)``; the prediction is the plain linear
    composition (no clamping), matching the gradient.  Sample order is
    reshuffled every epoch by the seeded generator, so a fixed seed gives
    a bit-identical model.
    """
    if len(dataset) == 0:
        raise ValidationError("training dataset is empty")
    if eta0 <= 0:
        raise ValidationError("eta0 must be positive")
    model = WeightModel.zeros(dataset.emotions, dataset.variables, links)
    dense, links_l, links_k = model.dense()
    rng = np.random.default_rng(seed)
    losses: list[float] = []
    step = 0
    for epoch in range(epochs):
        order = rng.permutation(len(dataset))
        loss = _accel.sgd_epoch(dense, links_l, links_k, dataset.V, dataset.M,
                                dataset.E, order, eta0, eta_decay, step,
                                backend=backend)
        if not math.isfinite(loss):
            raise TrainingDivergedError(
                f"non-finite loss after epoch {epoch + 1} (step {step}); "
                f"reduce eta0 (was {eta0})")
        losses.append(loss)
        step += len(dataset)
    return TrainingResult(model.with_dense(dense), losses)


def predict_intensities(model: WeightModel, V: np.ndarray, M: np.ndarray,
                        backend: str = "auto") -> np.ndarray:
    """Batch linear predictions (N, L) of the learner's model form."""
    dense, links_l, links_k = model.dense()
    return _accel.predict(dense, links_l, links_k,
                          np.asarray(V, dtype=float), np.asarray(M, dtype=float),
                          backend=backend)


def rmse(model: WeightModel, dataset: TrainingDataset, backend: str = "auto") -> float:
    predictions = predict_intensities(model, dataset.V, dataset.M, backend=backend)
    return float(np.sqrt(np.mean((predictions - dataset.E) ** 2)))


def make_planted_dataset(n_samples: int, n_variables: int = 6,
                         emotions: Sequence[str] | None = None,
                         variables: Sequence[str] | None = None,
                         seed: int = 0) -> tuple[TrainingDataset, WeightModel]:
    """Synthetic dataset drawn from a random planted model.

    Inputs are kept non-negative and the planted loadings scaled so every
    target lands in [0, 1]; targets are exact model outputs, so a correct
    learner can drive held-out error toward zero.
    """
    from .core import EMOTION_NAMES

    if emotions is None:
        emotions = EMOTION_NAMES
    if variables is None:
        variables = tuple(f"var{i + 1}" for i in range(n_variables))
    if len(variables) != n_variables:
        raise ValidationError("variables length must match n_variables")
    rng = np.random.default_rng(seed)
    n_factors = len(FACTOR_NAMES)
    scale = n_variables * n_factors
    links = tuple((e, v) for e in emotions for v in variables)
    factors = rng.uniform(0.0, 1.0, size=(len(links), n_factors)) / scale
    truth = WeightModel(emotions, variables, links, factors)
    V = rng.uniform(0.0, 1.0, size=(n_samples, n_variables))
    M = rng.uniform(0.0, 1.0, size=(n_samples, n_factors))
    E = predict_intensities(truth, V, M, backend="numpy")
    return TrainingDataset(variables, emotions, V, M, E), truth
