"""Exception taxonomy shared across the package."""


class EntpowerError(ValueError):
    """Base class for all domain errors raised by this package."""


class NotHermitian(EntpowerError):
    pass


class NotPSD(EntpowerError):
    pass


class AngleOutOfRange(EntpowerError):
    pass


class GammaOutOfRange(EntpowerError):
    pass


class ParamOutOfRange(EntpowerError):
    pass


class PurityOutOfRange(EntpowerError):
    pass


class SamplingExhausted(EntpowerError):
    pass


class EmptyPool(EntpowerError):
    pass


class DomainError(EntpowerError):
    pass
