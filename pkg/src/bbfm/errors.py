class ValidationError(ValueError):
    """Bad runtime input: wrong shape, non-finite value, missing variable."""


class ConfigurationError(ValueError):
    """Inconsistent setup: unknown term, bad universe, malformed config file."""
