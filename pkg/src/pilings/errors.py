"""Exception hierarchy shared by every module of the package."""


class PilingError(Exception):
    """Base class for all errors raised by :mod:`pilings`."""


class ParseError(PilingError, ValueError):
    def __init__(self, message, token=None, offset=None):
        if token is not None:
            message = f"{message}: {token!r} at byte offset {offset}"
        super().__init__(message)
        self.token = token
        self.offset = offset


class UnknownVertex(PilingError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class AdjacencyViolation(PilingError, ValueError):
    """A vertex permutation that maps some edge to a non-edge."""


class NotLengthPreserving(PilingError, ValueError):
    pass


class NotInversionAut(PilingError, ValueError):
    pass


class GraphMismatch(PilingError, ValueError):
    pass


class GroupMismatch(PilingError, ValueError):
    pass


class LengthMismatch(PilingError, ValueError):
    pass


class NoSuchTile(PilingError, ValueError):
    pass


class BlockedTile(PilingError, ValueError):
    pass


class NotCyclicallyReduced(PilingError, ValueError):
    pass


class NotNonSplit(PilingError, ValueError):
    pass


class ResourceExhausted(PilingError, RuntimeError):
    """A search hit its node budget before finishing."""

    def __init__(self, message, explored=None):
        super().__init__(message)
        self.explored = explored


class BudgetExceeded(ResourceExhausted):
    pass


class BoundExceeded(PilingError, ValueError):
    """Input too large for one of the brute-force oracles."""
