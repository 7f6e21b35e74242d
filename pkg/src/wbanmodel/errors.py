"""Exception types raised by the model."""


class WbanError(Exception):
    """Base class for every error the toolkit raises on bad input."""


class ParseError(WbanError):
    pass


class ValidationError(WbanError):
    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class DomainError(WbanError, ValueError):
    pass


class DimensionError(WbanError, ValueError):
    pass


class SingularProjection(WbanError, ArithmeticError):
    pass


class RateOutOfRange(WbanError, ValueError):
    pass


class MissingComputeProfile(WbanError, LookupError):
    pass
