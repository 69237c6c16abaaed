"""Exception types raised by the schema engine."""


class SchemaError(Exception):
    """Base class for schema document problems."""


class SchemaSyntaxError(SchemaError):
    """The schema document is not well-formed (position-annotated)."""


class SchemaSemanticError(SchemaError):
    """The schema document violates a model invariant."""


class CompiledHierarchyError(Exception):
    """A compiled clustering artifact is malformed or stale."""
