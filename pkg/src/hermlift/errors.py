"""Exception types raised across the package.

All of them derive from :class:`ValueError` so callers that only care about
"bad input" can catch one thing.
"""


class HermliftError(ValueError):
    pass


class InvalidParameterError(HermliftError):
    pass


class InvalidModulusError(HermliftError):
    pass


class TangentLineError(HermliftError):
    """The line meets the curve in a single point (gamma == 0)."""


class InvalidPointError(HermliftError):
    pass


class InvalidMonomialError(HermliftError):
    pass


class DuplicateNodeError(HermliftError):
    pass


class WrongLineError(HermliftError):
    pass


class InsufficientDataError(HermliftError):
    pass


class InvalidLayoutError(HermliftError):
    pass
