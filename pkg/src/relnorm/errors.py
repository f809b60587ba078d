"""Exception types shared across the package."""


class NormalizationError(Exception):
    """Base class for every error raised by this package."""


class InvalidName(NormalizationError):
    """Attribute or relation name is empty, malformed, or too long."""


class DuplicateAttribute(NormalizationError):
    """An attribute name was declared twice within one relation."""


class EntryOrderViolation(NormalizationError):
    """An append would break the key / determiner / plain entry order."""


class CapacityExceeded(NormalizationError):
    """The relation already holds the maximum number of attributes."""


class UnknownAttribute(NormalizationError):
    """A name does not resolve against the relation or declared universe."""


class DeterminerSlotsExhausted(NormalizationError):
    """A dependent attribute already carries the maximum number of determiners."""


class LhsTooLarge(NormalizationError):
    """A dependency's left-hand side exceeds the configured attribute limit."""


class InvalidFd(NormalizationError):
    """A functional dependency is structurally malformed."""


class NoKeyDeclared(NormalizationError):
    """The relation declares no primary-key attribute."""


class ComponentCollision(NormalizationError):
    """First-normal-form rewriting would produce a duplicate attribute name."""


class AttributeOutsideUniverse(NormalizationError):
    """A table mentions an attribute outside the declared universe."""


class DanglingForeignKey(NormalizationError):
    """A foreign key references a table that is not part of the script."""


class CyclicReference(NormalizationError):
    """Foreign keys among the given tables form a cycle."""


class EmptyCorpus(NormalizationError):
    """The benchmark was invoked with no relations."""


class UnknownAttributeInFd(NormalizationError):
    """A schema file dependency mentions an undeclared attribute."""


class SchemaSyntaxError(NormalizationError):
    """A schema file line does not match the grammar."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
