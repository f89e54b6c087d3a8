"""Exception hierarchy shared across the toolkit.

Each class carries the process exit code the command-line front end maps it to.
"""


class WSDError(Exception):
    exit_code = 1


class CorpusError(WSDError):
    """A corpus file could not be read or holds invalid records."""


class CorpusParseError(CorpusError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CorpusValidationError(CorpusError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ConfigurationError(WSDError):
    exit_code = 2


class TrainingError(WSDError):
    pass


class EvaluationError(WSDError):
    pass


class PredictionError(WSDError):
    """The request falls outside what a model can answer (wrong or absent target)."""

    exit_code = 3
