"""Exception hierarchy for coderco."""


class CodercoError(Exception):
    """Base class for all library errors."""


class ShapeMismatchError(CodercoError, ValueError):
    pass


class DimensionOverflowError(CodercoError):
    """A tensor power or assembled operator exceeds the configured index bound."""


class ContainmentError(CodercoError, ValueError):
    pass


class AxiomViolationError(CodercoError):
    """Raised when a structure fails validation; carries the failing report."""

    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


class InvalidDeformationError(AxiomViolationError):
    pass


class InternalInconsistencyError(CodercoError):
    """A result that theory guarantees to be valid failed validation."""


class ParseError(CodercoError, ValueError):
    """Malformed structure file; ``position`` is a line:column or a JSON path."""

    def __init__(self, message, position=None):
        self.position = position
        super().__init__(f"{position}: {message}" if position else message)
