"""Exception hierarchy.

Every failure a caller can act on has its own class so the CLI can map it to
an exit code and tests can assert on it precisely.
"""

__all__ = [
    "LinkGeomError",
    "InvalidInput",
    "DimensionMismatch",
    "ArityError",
    "ShapeMismatch",
    "DegenerateInput",
    "SingularSystem",
    "NotTransversal",
    "ParallelPlanes",
    "DegenerateFace",
    "ApexNotExtreme",
    "ApexInHyperplane",
    "PerturbExhausted",
    "SearchExhausted",
    "BudgetExceeded",
]


class LinkGeomError(Exception):
    """Base class for all library errors."""


class InvalidInput(LinkGeomError, ValueError):
    """Malformed data: bad file contents, arity or dimension mismatch."""


class DimensionMismatch(InvalidInput):
    pass


class ArityError(InvalidInput):
    pass


class ShapeMismatch(InvalidInput):
    pass


class DegenerateInput(LinkGeomError):
    """Input violates a general-position requirement of the operation."""


class SingularSystem(DegenerateInput):
    """Affine hulls of two simplices are not transversal."""

    def __init__(self, msg, pair=None):
        super().__init__(msg)
        self.pair = pair


class NotTransversal(DegenerateInput):
    """Two cells touch at a boundary point instead of crossing cleanly."""

    def __init__(self, msg, pair=None):
        super().__init__(msg)
        self.pair = pair


class ParallelPlanes(DegenerateInput):
    """Planes of two triangles are parallel; such triangles are unlinked."""

    def __init__(self, msg, verdict=None):
        super().__init__(msg)
        self.verdict = verdict


class DegenerateFace(DegenerateInput):
    pass


class ApexNotExtreme(DegenerateInput):
    pass


class ApexInHyperplane(InvalidInput):
    pass


class PerturbExhausted(LinkGeomError):
    pass


class SearchExhausted(LinkGeomError):
    def __init__(self, msg, best=None):
        super().__init__(msg)
        self.best = best


class BudgetExceeded(LinkGeomError):
    pass
