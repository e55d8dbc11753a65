class DiscGroupsError(Exception):
    """Base class for errors raised by this package."""


class InvalidInput(DiscGroupsError, ValueError):
    pass


class SizeLimitExceeded(InvalidInput):
    pass


class UnsupportedInput(DiscGroupsError, ValueError):
    pass


class ConsistencyError(DiscGroupsError, AssertionError):
    """An internal identity that must always hold did not."""
