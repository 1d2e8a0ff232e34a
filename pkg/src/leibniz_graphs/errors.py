"""Exception hierarchy shared across the package.

Everything user-triggerable (bad input, bad parameters, failed validation)
derives from LeibnizGraphsError.  InternalInvariantViolation deliberately
does not: it signals that two independently computed answers disagreed,
which is a bug in this package, never a property of the input.
"""


class LeibnizGraphsError(Exception):
    """Base class for input and validation errors raised by this package."""


class FieldMismatchError(LeibnizGraphsError):
    """Operands belong to different fields."""


class DimensionMismatchError(LeibnizGraphsError):
    """Vector or matrix sizes are incompatible with the ambient dimension."""


class NotLeibnizError(LeibnizGraphsError):
    """The structure constants do not satisfy the Leibniz identity."""

    def __init__(self, violations):
        self.violations = list(violations)
        first = self.violations[0][:3] if self.violations else None
        super().__init__(
            f"Leibniz identity fails on {len(self.violations)} basis "
            f"triple(s), first at indices {first}"
        )


class NotMonomialError(LeibnizGraphsError):
    """A basis product has more than one nonzero coordinate."""

    def __init__(self, i, j, detail=""):
        self.pair = (i, j)
        msg = f"product of basis vectors {i} and {j} is not a monomial"
        super().__init__(msg + (f": {detail}" if detail else ""))


class ShapeViolationError(LeibnizGraphsError):
    """A monomial product breaks the kernel/complement product shape."""

    def __init__(self, i, j, detail=""):
        self.pair = (i, j)
        msg = f"product of basis vectors {i} and {j} violates the basis shape"
        super().__init__(msg + (f": {detail}" if detail else ""))


class InvalidSplitError(LeibnizGraphsError):
    """A declared kernel/complement split does not match the computed kernel."""


class UnknownVertexError(LeibnizGraphsError):
    """A vertex index is not present in the graph."""


class BadBijectionError(LeibnizGraphsError):
    """A claimed vertex bijection is not total or not injective."""


class SingularMapError(LeibnizGraphsError):
    """A linear map that must be invertible is singular."""


class UnknownExampleError(LeibnizGraphsError):
    """No builder is registered under the requested example name."""


class BadParamsError(LeibnizGraphsError):
    """Example parameters are outside the builder's admissible range."""


class FieldCharUnsupportedError(LeibnizGraphsError):
    """A structure constant of the example vanishes in the requested field."""


class DimensionTooLargeError(LeibnizGraphsError):
    """Exhaustive subset enumeration was requested above the safety bound."""


class InputDocumentError(LeibnizGraphsError):
    """A JSON document failed schema or semantic validation."""

    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class InternalInvariantViolation(Exception):
    """Two routes that must agree by theorem disagreed: a bug, not bad input."""
