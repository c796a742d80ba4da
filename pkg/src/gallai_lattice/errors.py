"""Exception hierarchy shared by every module."""


class LatticeError(Exception):
    """Base class for all errors raised by gallai_lattice."""


class InvalidInput(LatticeError, ValueError):
    """Malformed input data (vertex lists, grid files, JSON artifacts)."""


class InvalidParameters(LatticeError, ValueError):
    """Parameters outside an operation's documented preconditions."""


class OutOfBounds(LatticeError, IndexError):
    """A point was looked up outside the window that holds its color."""


class BudgetExceeded(LatticeError):
    """An enumeration was asked to run past its configured budget."""
