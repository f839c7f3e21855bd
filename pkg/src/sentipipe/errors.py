"""Exception hierarchy shared across the pipeline stages."""


class SentipipeError(Exception):
    """Base class for all errors raised by this package."""


class SchemaError(SentipipeError):
    """Input data does not provide the columns or fields a stage requires."""


class DataError(SentipipeError):
    """Input data is present but unusable (malformed rows, empty corpus, ...)."""


class ConfigurationError(SentipipeError):
    """A configuration value or combination of values is invalid."""


class TrainingError(SentipipeError):
    """Model fitting failed (divergence, non-finite loss, degenerate labels)."""
