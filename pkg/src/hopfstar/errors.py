"""Exception types shared across the package."""


class HopfstarError(Exception):
    """Base class for all package-specific errors."""


class FieldMismatch(HopfstarError):
    """Operands live in different ground fields."""


class DivisionByZero(HopfstarError, ZeroDivisionError):
    """Exact division by the zero element."""


class SignatureMismatch(HopfstarError):
    """Domain/codomain signatures do not line up."""


class InvalidParameter(HopfstarError, ValueError):
    """A constructor argument is outside its allowed range."""


class HypothesisFailure(HopfstarError):
    """A constructor's precondition check failed.

    Carries the offending report so callers can show which axiom broke.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class StructuralInconsistency(HopfstarError):
    """A post-condition failed even though the preconditions passed.

    Always indicates an internal bug, never expected in normal use.
    """


class StructureFileError(HopfstarError, ValueError):
    """A structure file failed to parse or validate."""


class TangleSyntaxError(HopfstarError):
    """Diagram expression failed to parse."""

    def __init__(self, message, line, col, expected=()):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.expected = tuple(expected)


class UnboundGenerator(HopfstarError):
    """A diagram references a generator the environment does not bind."""


class UnknownObject(HopfstarError):
    """A diagram references a wire object the environment does not declare."""


class WireMismatch(HopfstarError):
    """Adjacent diagram layers disagree about the wires between them."""

    def __init__(self, step, expected, found):
        super().__init__(
            f"composition step {step}: wires {list(found)} arrive "
            f"where {list(expected)} are required"
        )
        self.step = step
        self.expected = tuple(expected)
        self.found = tuple(found)
