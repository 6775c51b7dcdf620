"""First-order event scoring: (context, action) -> signed degree.

This is the non-cognitive front door of the pipeline.  The score table is
a loadable artifact, not a model: the same action may score differently
per context, and an action that is missing from the table halts the event
rather than being guessed at.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Any, Mapping

from .core import ActionSpec, Valence
from .errors import UnscoredActionError, ValidationError

DEFAULT_CONTEXT = "default"


class ActionScoreTable:
    """Immutable-after-load mapping (context, action) -> scored ActionSpec."""

    def __init__(self, scores: Mapping[tuple[str, str], ActionSpec]) -> None:
        self._scores = dict(scores)

    def __len__(self) -> int:
        return len(self._scores)

    def __contains__(self, key: tuple[str, str]) -> bool:
        return key in self._scores or (DEFAULT_CONTEXT, key[1]) in self._scores

    def lookup(self, context: str, action_name: str) -> ActionSpec:
        """The scored action for (context, action), falling back to the
        default context; unknown actions raise :class:`UnscoredActionError`."""
        spec = self._scores.get((context, action_name))
        if spec is None:
            spec = self._scores.get((DEFAULT_CONTEXT, action_name))
        if spec is None:
            raise UnscoredActionError(
                f"no score for action {action_name!r} in context {context!r}")
        return spec

    @classmethod
    def from_rows(cls, rows: list[Mapping[str, Any]]) -> "ActionScoreTable":
        scores: dict[tuple[str, str], ActionSpec] = {}
        for i, row in enumerate(rows, start=1):
            try:
                context = row.get("context", DEFAULT_CONTEXT)
                spec = ActionSpec(row["action"], Valence(row["valence"]),
                                  float(row["degree"]))
            except (KeyError, TypeError, ValueError, ValidationError) as exc:
                raise ValidationError(f"action table row {i}: {exc}") from exc
            key = (context, spec.name)
            if key in scores:
                raise ValidationError(
                    f"action table row {i}: duplicate entry for {key}")
            scores[key] = spec
        return cls(scores)

    @classmethod
    def load(cls, path: str | None = None) -> "ActionScoreTable":
        """Load from a JSON file of ``{"actions": [rows]}``, or the packaged default."""
        if path is None:
            raw = resources.files("eegs.data").joinpath("actions.json").read_text()
        else:
            with open(path, encoding="utf-8") as fh:
                raw = fh.read()
        try:
            doc = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"action table is not valid JSON: {exc}") from exc
        return cls.from_rows(doc.get("actions", []))


def elicit(table: ActionScoreTable, context: str, action_name: str) -> ActionSpec:
    """Pure lookup of the first-order reaction for an action in a context.

    The returned spec's degree is the d_e that seeds every appraisal.
    """
    return table.lookup(context, action_name)
