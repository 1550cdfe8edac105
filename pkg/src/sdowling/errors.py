"""Exception hierarchy shared by all modules."""


class SDowlingError(Exception):
    """Base class for all errors raised by this package."""


class InputFormatError(SDowlingError):
    """Malformed input data (JSON schema, table shapes, index ranges)."""


class NonAssociative(SDowlingError):
    def __init__(self, i, j, k):
        self.triple = (i, j, k)
        super().__init__(f"multiplication is not associative at triple ({i}, {j}, {k})")


class NoIdentity(SDowlingError):
    def __init__(self):
        super().__init__("index 0 is not a two-sided identity")


class NoInverse(SDowlingError):
    def __init__(self, i):
        self.element = i
        super().__init__(f"element {i} has no two-sided inverse")


class IndexOutOfRange(SDowlingError):
    pass


class SizeLimitExceeded(SDowlingError):
    pass


class AlreadyBounded(SDowlingError):
    pass


class NonInvariantT(SDowlingError):
    pass


class NotComparable(SDowlingError):
    pass


class NotGraded(SDowlingError):
    pass


class NotACover(SDowlingError):
    pass


class NotBounded(SDowlingError):
    pass


class DegenerateCase(SDowlingError):
    pass


class NotDecreasing(SDowlingError):
    pass


class UnsupportedCase(SDowlingError):
    pass


class MalformedTree(SDowlingError):
    pass


class InvalidSpec(SDowlingError):
    pass


class EmptyPosetWarning(UserWarning):
    """The proper part is empty (only happens for n=1, trivial group, no colors)."""
