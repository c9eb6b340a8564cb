"""Exception hierarchy shared across the toolkit."""


class EduparseError(Exception):
    """Base class for all toolkit errors."""


class ConlluError(EduparseError):
    """Malformed CoNLL-U input. Carries the offending line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SerializationError(EduparseError):
    """An EDU violating its invariants cannot be written out."""


class CleansingError(EduparseError):
    """Token cleansing could not reindex heads consistently."""


class ConversionError(EduparseError):
    """A raw EDU cannot be converted to CoNLL-U."""


class IllegalTransitionError(EduparseError):
    """A transition was applied to a configuration that forbids it."""


class OracleError(EduparseError):
    """The static oracle has no gold-consistent transition left."""


class NonProjectiveError(EduparseError):
    """Skip signal: the gold tree is not projective (or not a tree)."""


class TrainingError(EduparseError):
    """Training cannot proceed (e.g. no usable EDUs)."""


class CheckpointError(EduparseError):
    """A model checkpoint file is missing, truncated, or incompatible."""
