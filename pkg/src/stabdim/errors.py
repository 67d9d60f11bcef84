"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """An edge-list or graph6 input could not be decoded."""


class ConstraintError(ValueError):
    """An input violates an operation's preconditions.

    Covers disconnected inputs handed to connectivity-only operations and
    size caps on the enumeration and statevector routines.
    """


class ConsistencyError(RuntimeError):
    """Two computation routes that must agree disagreed.

    This always signals an implementation bug, never bad input.
    """
