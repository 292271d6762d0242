"""Exception types shared by every module of the package."""


class DomainError(ValueError):
    """An argument lies outside the open interval on which a formula is valid."""


class AccuracyError(ArithmeticError):
    """A requested truncation accuracy cannot be met within the term budget."""
