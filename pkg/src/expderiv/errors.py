"""Shared exception types."""


class DomainError(ValueError):
    """An argument is outside the domain an operation is defined on.

    Raised for things like negative orders, multiplicity vectors that do
    not sum to the requested order, or missing derivative values.  Kept
    distinct from plain ValueError so the command-line front end can map
    it to its own exit code.
    """
