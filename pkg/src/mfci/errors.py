"""Exception types shared across the library."""


class MFCIError(Exception):
    """Base class for all library errors."""


class ParseError(MFCIError):
    """Malformed polynomial / matrix / problem input."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {column})" if column is not None else ")")
        super().__init__(message + loc)


class InhomogeneousInput(MFCIError):
    """An operation that requires homogeneous input received an inhomogeneous one."""


class NotInImage(MFCIError):
    """lift() was asked for a preimage that does not exist."""


class BudgetExceeded(MFCIError):
    """An iteration / length cap was hit."""


class NonTermination(MFCIError):
    """A stabilization loop exceeded its cap; an invariant is likely violated."""


class WindowTooSmall(MFCIError):
    """A complex window does not leave the margin an operation needs."""


class NotNullhomotopic(MFCIError):
    """nullhomotopy() hit a lifting obstruction."""


class LiftObstruction(MFCIError):
    """Higher-homotopy construction hit a lifting obstruction."""


class NotAnRModule(MFCIError):
    """f_i does not annihilate H^0 of the given resolution."""


class MFEquationFailure(MFCIError):
    """A constructed pair of maps fails the matrix-factorization equations."""


class RingMismatch(MFCIError):
    """Operands live over different rings."""


class VerificationFailure(MFCIError):
    """A claimed identity failed an exact check; message pinpoints where."""


class NonRegularContext(MFCIError):
    """Operation requires a regular (relation-free) ring context."""


class RouteMismatch(MFCIError):
    """Two independent computations of the same object disagree."""


class NegativeDegreeUnsupported(MFCIError):
    """Stable Ext below the stabilization degree is only available for c = 1."""


class DecompositionFailure(MFCIError):
    """An entry of a lifted differential square is not in (f_1, ..., f_c)."""


class IdentificationFailure(MFCIError):
    """A Betti-number comparison between two routes failed."""


class UnknownFixture(MFCIError):
    """Fixture name not in the registry."""
