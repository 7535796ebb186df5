"""Exception types raised across the package."""


class IsotemporalError(ValueError):
    """Base class for all validation errors raised by this package."""


# network validation
class DuplicateTime(IsotemporalError):
    pass


class UnknownVertex(IsotemporalError):
    pass


class SelfLoop(IsotemporalError):
    pass


class DuplicateEdge(IsotemporalError):
    pass


class SizeMismatch(IsotemporalError):
    pass


class TooLarge(IsotemporalError):
    pass


class NotACycle(IsotemporalError):
    pass


# plus-minus forms
class InvalidForm(IsotemporalError):
    pass


class TooShort(InvalidForm):
    pass


class NoPlus(InvalidForm):
    pass


class AlternationViolated(InvalidForm):
    pass


class InvalidSymbol(InvalidForm):
    pass


class InvalidFootprint(IsotemporalError):
    pass


# counting / enumeration
class OddInput(IsotemporalError):
    pass


class CapExceeded(IsotemporalError):
    pass


class InexactDivision(ArithmeticError):
    """A closed formula produced a non-integer where an integer is required."""
