class ModelParamsError(Exception):
    """
    Base class for rejected physical parameters.

    Attributes:
        message (str): Explanation of the error.
    """


class NonPositiveOmegaError(ModelParamsError):
    """
    Exception raised when the oscillator frequency is zero or negative.
    """


class NegativeCouplingError(ModelParamsError):
    """
    Exception raised when the qubit-oscillator coupling g is negative.
    """


class NonFiniteInputError(ModelParamsError):
    """
    Exception raised when a parameter, or one of the ratios g/omega, delta/omega,
    epsilon/omega, is NaN or infinite.
    """


class InsufficientLevelsError(Exception):
    """
    Exception raised when a spectrum table holds fewer entries than requested.
    """
