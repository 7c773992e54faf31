class CondColorError(Exception):
    """Base class for all package errors."""


class InvalidParameter(CondColorError, ValueError):
    """A builder or solver argument lies outside its domain."""


class InvalidInput(CondColorError, ValueError):
    """A coloring or file does not match the graph it is paired with."""


class UnsupportedCase(CondColorError):
    """No closed-form construction exists for the requested regime; use the solver."""


class ExcludedCase(UnsupportedCase):
    """The regime is explicitly excluded by the theorem being transcribed."""
