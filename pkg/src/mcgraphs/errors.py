"""Exception hierarchy.

``PreconditionError`` covers bad input (the CLI maps it to exit code 2);
``InvariantViolation`` means a construction failed its own postcondition,
which is a bug (exit code 1).
"""


class ArtifactError(Exception):
    pass


class PreconditionError(ArtifactError, ValueError):
    pass


class InvariantViolation(ArtifactError, AssertionError):
    pass


class NotPrimePower(PreconditionError):
    pass


class UnsupportedOrder(PreconditionError):
    pass


class FieldDivisionByZero(ArtifactError, ZeroDivisionError):
    pass


class NotDivisible(PreconditionError):
    pass


class PreconditionViolated(PreconditionError):
    pass


class EpsilonTooLarge(PreconditionError):
    pass


class NoEdges(PreconditionError):
    pass


class TooLarge(PreconditionError):
    def __init__(self, required: int, cap: int):
        super().__init__(f"enumeration needs {required} colorings, cap is {cap}")
        self.required = required
        self.cap = cap


class UnsupportedR(PreconditionError):
    pass


class NotResolvable(PreconditionError):
    pass


class FormatError(PreconditionError):
    pass
