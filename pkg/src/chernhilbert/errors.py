"""Exception hierarchy shared by every module."""


class ChernHilbertError(ValueError):
    """Base class for all library errors."""


class DimensionMismatch(ChernHilbertError):
    pass


class NotAUnit(ChernHilbertError):
    pass


class NotNormalized(ChernHilbertError):
    """Constant term of a series is not 1 where a logarithm is requested."""


class NotNilpotent(ChernHilbertError):
    """Constant term of a series is not 0 where an exponential is requested."""


class IndexOutOfRange(ChernHilbertError, IndexError):
    pass


class DegreeTooHigh(ChernHilbertError):
    pass


class NotInHilbertLattice(ChernHilbertError):
    """Polynomial is not an integer combination of the S_l Hilbert polynomials."""


class NotRepresentable(ChernHilbertError):
    """(Chern polynomial, rank) pair lies outside the image of zeta."""


class InvalidBettiTable(ChernHilbertError):
    pass


class PolySyntaxError(ChernHilbertError):
    """Malformed polynomial expression; ``offset`` is a byte offset into the source."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class WrongVariable(ChernHilbertError):
    def __init__(self, found: str, expected: str, offset: int):
        super().__init__(f"unexpected variable {found!r} at byte {offset} (expected {expected!r})")
        self.found = found
        self.expected = expected
        self.offset = offset
