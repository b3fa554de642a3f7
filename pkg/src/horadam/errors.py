"""Exception hierarchy shared by the whole package."""


class HoradamError(Exception):
    """Base class for every error raised by this package."""


class DiscriminantMismatch(HoradamError):
    pass


class ZeroDivisorInverse(HoradamError, ZeroDivisionError):
    """Inverse requested for an element of zero field norm in Q[sqrt(D)]."""


class NotRational(HoradamError, ValueError):
    pass


class ScalarRingMismatch(HoradamError, TypeError):
    pass


class NonInvertible(HoradamError, ZeroDivisionError):
    pass


class DomainError(HoradamError, ValueError):
    """An argument lies outside the set where a closed form is defined.

    Subclasses name the specific obstruction so reports can say why a
    check was skipped.
    """


class RepeatedRoot(DomainError):
    pass


class ZeroQ(DomainError):
    pass


class SumPole(DomainError):
    pass


class UnknownPreset(HoradamError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ParamParseError(HoradamError, ValueError):
    pass


class InvalidRange(HoradamError, ValueError):
    pass
