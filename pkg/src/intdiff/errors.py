"""Exception types raised by the kernel.

Every domain error carries a ``kind`` string that the CLI reports verbatim
in its ``{"error": kind, "detail": ...}`` objects.
"""


class IntDiffError(Exception):
    """Base class for domain errors (CLI exit code 1)."""

    kind = "IntDiffError"

    def __init__(self, detail=""):
        super().__init__(detail)
        self.detail = detail


class NotAUnit(IntDiffError):
    kind = "NotAUnit"


class ElementOfF(IntDiffError):
    kind = "ElementOfF"


class ZeroOperator(IntDiffError):
    kind = "ZeroOperator"


class NotStabilized(IntDiffError):
    kind = "NotStabilized"


class InvalidComponent(IntDiffError):
    kind = "InvalidComponent"


class ZeroScalar(IntDiffError):
    kind = "ZeroScalar"


class NotInOnePlusF(IntDiffError):
    kind = "NotInOnePlusF"


class RelationViolated(IntDiffError):
    kind = "RelationViolated"

    def __init__(self, relation, residual):
        super().__init__(f"relation {relation} fails")
        self.relation = relation
        self.residual = residual


class TheoremViolation(IntDiffError):
    """A validated endomorphism contradicted a step of the decomposition.

    Validated inputs can never reach this; seeing it means a kernel bug.
    """

    kind = "TheoremViolation"

    def __init__(self, step, details):
        super().__init__(f"{step}: {details}")
        self.step = step
        self.details = details


class ReconstructionMismatch(IntDiffError):
    kind = "ReconstructionMismatch"


class ParseError(Exception):
    """Malformed expression text (CLI exit code 2)."""

    kind = "SyntaxError"

    def __init__(self, message, position=None):
        where = "" if position is None else f" at position {position}"
        super().__init__(message + where)
        self.message = message
        self.position = position
        self.detail = str(self)


class DialectError(ParseError):
    kind = "DialectError"
