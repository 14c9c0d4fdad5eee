"""Exception types shared across the package."""


class OdecoError(Exception):
    """Base class for all package errors."""


class NotARotation(OdecoError):
    """Matrix passed as a rotation is not orthogonal with determinant +1."""


class NonInvertibleSecondOrderPart(OdecoError):
    """Second-order part is numerically singular; negative powers undefined."""


class DegenerateFrame(OdecoError):
    """A recovered frame has a non-positive eigenvalue."""


class RankDeficientBatch(OdecoError):
    """Random-batch constraint construction found an unexpected nullspace dimension."""


class ConstraintInfeasible(OdecoError):
    """Intersection of affine constraints is empty at a vertex."""


class ParseError(OdecoError):
    """Mesh or feature file could not be parsed."""


class NonManifoldMesh(OdecoError):
    """Mesh has edges shared by more than two triangles or inconsistent orientation."""


class DegenerateTriangle(OdecoError):
    """Mesh contains triangles with (near) zero area."""


class NaNEnergy(OdecoError):
    """Objective or gradient evaluated to NaN/Inf during the solve."""


class LineSearchFailure(OdecoError):
    """Backtracking line search could not find a decreasing step."""


class AmbiguousMatching(OdecoError):
    """Two quarter-turn matchings tie within tolerance on an edge."""
