"""Exception types shared across the package."""


class EegsError(Exception):
    """Base class for all engine errors."""


class ValidationError(EegsError):
    """Bad input data: malformed files, out-of-range values, unknown keys.

    Maps to exit code 1 in the CLI.
    """


class UnscoredActionError(ValidationError):
    """An event referenced an action with no score in the loaded table."""


class TopologyError(EegsError):
    """A weight was requested for an appraisal-emotion link that does not exist."""


class TrainingDivergedError(EegsError):
    """Training produced a non-finite loss."""


class StateError(EegsError):
    """A state snapshot could not be loaded (corrupt file, version mismatch)."""


class ConfigMismatchError(StateError):
    """Snapshot was produced under a different configuration hash."""
