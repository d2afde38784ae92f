"""Exception types shared across the package."""


class ColorkeysError(Exception):
    """Base class for errors raised by this package."""


class ConfigError(ColorkeysError):
    """A configuration value is outside its allowed range."""


class TrainingError(ColorkeysError):
    """Model training could not proceed (e.g. empty corpus)."""


class EvaluationError(ColorkeysError):
    """Model evaluation could not proceed (e.g. empty text)."""


class ModelFormatError(ColorkeysError):
    """A model file is malformed.  Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DivergenceError(ColorkeysError):
    """A simulation exceeded its click budget.  Carries partial results."""

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result
