"""Exception types shared across the package."""


class HexpercError(Exception):
    """Base class for all package-specific errors."""


class EmptyDiscretization(HexpercError):
    """No hexagonal face fits inside the requested domain at this mesh size."""


class InvalidDomain(HexpercError):
    """The discretized face set is not simply connected, or the boundary
    walk did not close into a single cycle."""


class MarkCollision(HexpercError):
    """Two boundary marks snapped to the same lattice vertex."""


class OutsideDomain(HexpercError):
    """An edge rotation left the discretized domain."""


class BoundaryEdge(HexpercError):
    """The dual edge is undefined because one of the two flanking faces is
    missing."""


class TooLarge(HexpercError):
    """Exhaustive enumeration was requested for a domain above the
    configured face-count bound."""


class NotConverged(HexpercError):
    """An iterative or series computation failed to reach the requested
    tolerance."""


class UnsupportedDomain(HexpercError):
    """The closed-form reference map is only available for disc domains."""


class OverlappingTraces(HexpercError):
    """Boundary traces passed to the region index share a face, so the
    region count is ill-defined."""


class ContourLeavesDomain(HexpercError):
    """A requested contour visits vertices outside the discretized domain
    interior."""


class SolverDiverged(HexpercError):
    """The iterative Dirichlet solver failed to reach its tolerance."""


class DegeneratePoints(HexpercError):
    """Cross-ratio points are not pairwise distinct."""


class DomainError(HexpercError):
    """A formula argument lies outside its documented domain."""
