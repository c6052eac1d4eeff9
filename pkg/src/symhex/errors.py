"""Error types shared across the package."""


class SymhexError(Exception):
    """Base class for everything raised deliberately by this package."""


class DimensionMismatch(SymhexError):
    pass


class LengthMismatch(SymhexError):
    pass


class OddLength(SymhexError):
    pass


class RingMismatch(SymhexError):
    pass


class IdealMismatch(SymhexError):
    pass


class KOutOfRange(SymhexError):
    pass


class BudgetExceeded(SymhexError):
    pass


class ParseError(SymhexError):
    pass


class VerificationFailed(SymhexError):
    pass
