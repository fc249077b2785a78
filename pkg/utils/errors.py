class CrepantIndexError(Exception):
    """Base class for errors raised by this application"""


class InvalidArgumentError(CrepantIndexError, ValueError):
    """A value violates the precondition of a domain type or operation"""


class BasketFormatError(CrepantIndexError):
    """A basket document failed to parse or validate"""
