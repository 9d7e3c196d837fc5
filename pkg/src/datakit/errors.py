"""Exception types shared across the toolkit."""


class DatakitError(Exception):
    """Base class for all toolkit errors."""


class ImageIOError(DatakitError):
    """Unreadable, truncated, or unsupported image file."""


class ProbeError(DatakitError):
    """Video probing failed: tool missing or container undecodable."""


class CodecError(DatakitError):
    """An encode/decode round trip failed."""


class PlanExecutionError(DatakitError):
    """A degradation step failed while executing a plan."""

    def __init__(self, step_index: int, message: str):
        super().__init__(f"step {step_index}: {message}")
        self.step_index = step_index


class ConfigError(DatakitError):
    """Malformed configuration, score file, or plan serialization."""


class InsufficientDataError(DatakitError):
    """A statistic requires frame classes that are absent from the input."""
