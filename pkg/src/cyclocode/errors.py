"""Exception types raised across the package."""


class CycloCodeError(ValueError):
    """Base class for every validation or verification failure."""


class NonPrime(CycloCodeError):
    pass


class DegreeTooLarge(CycloCodeError):
    pass


class TooLarge(CycloCodeError):
    pass


class ZeroInput(CycloCodeError):
    pass


class GcdE2Violation(CycloCodeError):
    pass


class GcdE1E2Violation(CycloCodeError):
    pass


class EvenCharacteristic(CycloCodeError):
    pass


class OrderNotDividing(CycloCodeError):
    pass


class NotOneModFour(CycloCodeError):
    pass


class NonIntegralResult(CycloCodeError):
    pass


class ZeroCode(CycloCodeError):
    pass


class MomentMismatch(CycloCodeError):
    pass


class UnsupportedD(CycloCodeError):
    pass


class ParityViolation(CycloCodeError):
    pass


class KDivisibleBy3(CycloCodeError):
    pass


class KEven(CycloCodeError):
    pass


class NoCorollaryApplies(CycloCodeError):
    pass


class UnknownTable(CycloCodeError):
    pass


class HypothesisUnmet(CycloCodeError):
    pass


class Mismatch(CycloCodeError):
    """Predicted and enumerated distributions differ.

    ``diff`` holds the first differing ``(weight, predicted, enumerated)``.
    """

    def __init__(self, message, diff=None):
        super().__init__(message)
        self.diff = diff
