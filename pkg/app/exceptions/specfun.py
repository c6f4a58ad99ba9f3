class NegativeDegreeError(Exception):
    """
    Exception raised when a Laguerre polynomial is requested with a negative
    degree or a negative associated order.
    """


class NegativeIndexError(Exception):
    """
    Exception raised when a displaced Fock overlap is requested for a negative
    Fock index.
    """
