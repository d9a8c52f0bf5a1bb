"""Exception hierarchy shared by every module."""


class SupercharError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class ParityError(SupercharError):
    """A coordinate has the wrong parity for the supergroup family."""


class DominanceError(SupercharError):
    """A weight or diagram is not dominant, or not in the required form."""


class EnumerationCapError(SupercharError):
    """Weyl-group enumeration would exceed the configured cap."""


class InexactDivisionError(SupercharError):
    """A Laurent division that must be exact left a remainder."""


class UnsupportedConfiguration(SupercharError):
    """A diagram/functor configuration is outside the implemented tables."""


class DiagramSyntaxError(SupercharError):
    """Malformed diagram or weight text."""

    def __init__(self, message, text=None, pos=None):
        if text is not None and pos is not None:
            message = f"{message} at column {pos}:\n  {text}\n  {' ' * pos}^"
        super().__init__(message)
        self.text = text
        self.pos = pos
