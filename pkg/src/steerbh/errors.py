"""Exception types raised by steerbh."""


class SteerBHError(Exception):
    """Base class for all steerbh errors."""


class InvalidArgumentError(SteerBHError, ValueError):
    pass


class SingularBlockError(SteerBHError, ArithmeticError):
    """The steering party's covariance block cannot be inverted."""


class NumericalDegeneracyError(SteerBHError, ArithmeticError):
    pass


class TransitionNotFoundError(SteerBHError, RuntimeError):
    """No sign change of the steering indicator inside the search bracket."""
