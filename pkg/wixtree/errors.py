"""Exceptions raised by wixtree.

Invalid input derives from ValueError, internal inconsistencies from
RuntimeError, so callers can keep catching the builtins.
"""


class InvalidTree(ValueError):
    """The edge list does not describe a tree."""


class Disconnected(InvalidTree):
    pass


class CycleDetected(InvalidTree):
    pass


class DuplicateEdge(InvalidTree):
    pass


class SelfLoop(InvalidTree):
    pass


class VertexOutOfRange(ValueError):
    pass


class InvalidDegreeSequence(ValueError):
    pass


class NotAPath(ValueError):
    pass


class BadParity(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


class InvalidBranchSelection(ValueError):
    pass


class InvalidMove(ValueError):
    pass


class TooLarge(ValueError):
    """The requested enumeration exceeds the configured cap."""


class WienerOverflow(OverflowError):
    pass


class TheoremViolation(RuntimeError):
    """An exhaustive scan found a tree beating one of the constructors."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class DualWienerMismatch(RuntimeError):
    pass
