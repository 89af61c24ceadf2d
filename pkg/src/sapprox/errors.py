"""Exception types shared across the package."""


class SApproxError(Exception):
    """Base class for all errors raised by this package."""


class CapacityError(SApproxError):
    """An input exceeds a hard size cap (universe size, enumeration size)."""


class DomainError(SApproxError):
    """An argument is outside the domain of the requested operation."""


class UniverseMismatchError(DomainError):
    """Two masks or objects built over different universes were combined."""


class ContractViolationError(SApproxError):
    """A precondition that callers must establish does not hold."""


class TheoremHypothesisError(SApproxError):
    """The hypotheses of the classification criterion are not met.

    Distinct from a negative verdict: the criterion simply does not apply.
    """


class InternalConsistencyError(SApproxError):
    """Two independent computation routes disagreed; indicates a bug."""


class DocumentError(SApproxError):
    """A space document failed to parse or validate."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
