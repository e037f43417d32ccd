"""Exception hierarchy shared by the whole package."""


class AlgebraError(Exception):
    """Base class for everything this package raises on purpose."""


class MismatchError(AlgebraError):
    """Operands live in different rings/fields or have incompatible shapes."""


class ParseError(AlgebraError):
    """A JSON document or element encoding does not match the wire format."""


class DomainError(AlgebraError):
    """Input is well-formed but violates a semantic precondition."""
