"""Exception types shared across the package."""


class SmithThomError(Exception):
    """Base class for all errors raised by this package."""


class StructureError(SmithThomError, ValueError):
    """Malformed combinatorial input (bad facets, non-involutive maps, ...)."""


class PreconditionError(SmithThomError, ValueError):
    """A formula was queried outside the hypotheses under which it holds."""


class InconsistencyError(SmithThomError, ArithmeticError):
    """Two routes that must agree did not, or a half-integer appeared."""
