"""Exception hierarchy for hypderiv."""


class HypDerivError(Exception):
    """Base class for all hypderiv errors."""


class PolePochhammer(HypDerivError):
    """Negative-order Pochhammer symbol hit a zero factor (pole)."""


class SingularLowerParameter(HypDerivError):
    """A lower parameter makes the series coefficients singular."""

    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"singular lower parameter at index {index}")


class PoleCoefficient(HypDerivError):
    """A series coefficient has a vanishing Pochhammer denominator."""


class NoConvergence(HypDerivError):
    """Series failed to converge within the term budget."""


class DomainError(HypDerivError):
    """Argument outside the natural convergence domain of the series."""


class DivisionByZeroJet(HypDerivError):
    """Jet division by a jet whose leading coefficient is zero."""


class BasePointAtBranchPoint(HypDerivError):
    """Jet power with base point at the branch point (leading coefficient 0)."""


class OrderTooLow(HypDerivError):
    """Requested a derivative beyond the truncation order of a jet."""


class BranchPointEvaluation(HypDerivError):
    """Expression evaluated at a branch point of one of its factors."""


class SingularCoefficient(HypDerivError):
    """An identity prefactor contains an undefined Pochhammer ratio."""


class NotApplicable(HypDerivError):
    """A rewrite was applied to an expression outside its domain."""
