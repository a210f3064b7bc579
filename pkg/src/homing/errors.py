"""Exception types shared across the package."""


class HomingError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(HomingError, ValueError):
    """A text form (permutation, code, word, partition) is malformed."""


class InvalidMoveError(HomingError):
    """A placement or displacement was attempted on an ineligible value."""


class CapacityError(HomingError):
    """An exhaustive operation was requested beyond its configured cap."""


class CodeShapeError(HomingError):
    """A firing requires a code of the block form ``+^i 0^k -^j`` with k >= 1."""


class WordError(HomingError, ValueError):
    """A firing word or set partition violates its validity conditions."""


class CycleError(HomingError):
    """The placement digraph revisited an in-progress state (never expected)."""
