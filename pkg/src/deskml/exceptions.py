"""Error taxonomy shared by every estimator in the package."""


class InvalidInput(ValueError):
    """Input data is not a finite, non-empty 2-D real matrix."""


class ShapeMismatch(ValueError):
    """Array lengths or feature counts disagree."""


class UnsupportedParam(ValueError):
    """Unknown hyperparameter, or an argument the estimator does not accept."""


class WrongCapability(AttributeError):
    """The estimator lacks the requested capability (e.g. predict on a transformer)."""


class NotFittedError(AttributeError):
    """The estimator is used before ``fit`` was called."""


class NotConverged(RuntimeError):
    """An iterative solver hit its iteration cap before meeting its tolerance.

    The partially converged state is kept on ``diagnostics`` so callers can
    inspect or reuse it.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class SingleClass(ValueError):
    """A classifier received labels from fewer than two classes."""


class KTooLarge(ValueError):
    """The requested neighbor or cluster count exceeds the number of samples."""


class BadK(ValueError):
    """Invalid fold count for a cross-validation iterator."""


class ClassTooSmall(ValueError):
    """A class has fewer members than the number of stratified folds."""


class UnknownAxis(ValueError):
    """A parameter-grid axis does not name a parameter of the estimator."""


class NonTransformerStep(TypeError):
    """A non-final pipeline step does not implement ``transform``."""


class BadSpec(ValueError):
    """Inconsistent dataset-generator settings."""


class ParseError(ValueError):
    """Malformed input file. ``lineno`` is 1-based."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class RaggedRow(ParseError):
    """A CSV row has a different field count than the rows before it."""


class NonAscendingIndex(ParseError):
    """Feature indices on an svmlight line are not strictly ascending."""


# warnings


class DegenerateDesign(UserWarning):
    """An exactly collinear feature was dropped from the LARS active set."""


class DuplicateCollapse(UserWarning):
    """k-means found fewer distinct points than requested clusters."""
