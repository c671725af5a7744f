"""Exception types raised across the package."""


class DiscDispError(ValueError):
    """Base class for all validation errors in this package."""


class SumNotOne(DiscDispError):
    pass


class FewerThanTwoAtoms(DiscDispError):
    pass


class NonPositiveProb(DiscDispError):
    pass


class DuplicateValue(DiscDispError):
    pass


class BadParam(DiscDispError):
    pass


class BadProbability(DiscDispError):
    pass


class IndexOutOfRange(DiscDispError, IndexError):
    pass


class ConditionOneViolated(DiscDispError):
    """The jump-height condition fails, so the nearest-neighbour
    characterization of the interval relations does not apply."""


class NotLattice(DiscDispError):
    pass


class ParseError(DiscDispError):
    """Malformed input file; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
