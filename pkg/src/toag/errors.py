class ToagError(Exception):
    """Base class for errors raised by this package."""


class DomainError(ToagError, ValueError):
    """An operation was applied outside the domain where it is defined."""


class MixedInstanceError(ToagError, TypeError):
    """Elements of different group instances were combined."""


class TableFormatError(ToagError, ValueError):
    """A finite table could not be loaded.

    ``axiom`` names the violated axiom (when the table parsed but is not a
    TOAG) and ``witness`` is a tuple of indices exhibiting the violation.
    """

    def __init__(self, message, axiom=None, witness=None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness
