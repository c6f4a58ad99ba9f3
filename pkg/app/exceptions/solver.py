class SolverError(Exception):
    """
    Base class for errors raised by the spectral engines. The command line maps
    every subclass to exit code 3.

    Attributes:
        message (str): Explanation of the error.
    """


class DegenerateNormError(SolverError):
    """
    Exception raised when epsilon = delta = 0, which makes y = sqrt(eps^2 + delta^2 eta^2)
    vanish and the renormalized bias undefined.
    """


class TruncationTooSmallError(SolverError):
    """
    Exception raised when a Fock truncation cannot hold the requested states.
    """


class IndexOrderError(SolverError):
    """
    Exception raised when a matrix element D_mn is requested with n < m.
    """


class ResonantDenominatorError(SolverError):
    """
    Exception raised when a second-order denominator of the perturbative
    spectrum vanishes for an included term.
    """


class EigensolverFailureError(SolverError):
    """
    Exception raised when the dense symmetric eigensolver does not converge.
    """


class NoConvergenceError(SolverError):
    """
    Exception raised when doubling the Fock truncation does not stabilize the
    requested levels before the truncation limit.
    """


class IncompleteBasisError(SolverError):
    """
    Exception raised when the analytic eigenbasis used for dynamics misses too
    much of the initial state. Raising the number of modes is the usual fix.
    """
