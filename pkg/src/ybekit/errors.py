"""Exceptions shared across the package."""


class ShapeError(ValueError):
    """Operands have incompatible dimensions or block partitions."""


class SingularMatrixError(ValueError):
    """Inversion was attempted on a singular matrix."""


class ParseError(ValueError):
    """A matrix CSV or solution JSON document is malformed."""
