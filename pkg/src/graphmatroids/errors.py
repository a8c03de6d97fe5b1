"""Exception types shared by every module.

The CLI maps these onto exit codes: usage problems exit 2, resource limits 3.
"""


class GraphMatroidError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgumentError(GraphMatroidError, ValueError):
    """An argument violates a documented precondition on its shape or value."""


class PreconditionError(GraphMatroidError, ValueError):
    """An operation was called on an object it is not defined for.

    Raised for example when a bounded-family routine meets an unbounded family,
    or a routine that needs an exact profile gets only bounds.
    """


class ResourceLimitError(GraphMatroidError, RuntimeError):
    """A configured search cap would be exceeded."""


class FamilyAxiomError(GraphMatroidError, RuntimeError):
    """An oracle was observed to violate a graph matroid family axiom."""


class SpecSyntaxError(InvalidArgumentError):
    """A family spec string could not be parsed.

    ``position`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")
