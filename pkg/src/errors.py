"""Exception hierarchy shared by every module."""

from typing import Optional


class PQACError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateBatchError(PQACError, ValueError):
    """Raised when a batch carries no usable values (e.g. empty)."""


class DecompositionError(PQACError, ValueError):
    """Raised when a learning rule has no canonical weight/error decomposition."""


class OracleDomainError(PQACError, ValueError):
    """Raised when the raw-sigmoid JS reference is asked outside its representable region."""


class DimensionMismatchError(PQACError, ValueError):
    """Raised when vector or parameter shapes disagree."""


class DegenerateNormalizationError(PQACError, ValueError):
    """Raised when min-max normalization has fewer than two distinct scores."""


class CheckpointError(PQACError):
    """Raised when a checkpoint cannot be read or does not match its consumer."""


class ConfigError(PQACError, ValueError):
    """Invalid run configuration, located by file and line when known."""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        location = ""
        if path is not None:
            location = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(f"{location}{message}")
