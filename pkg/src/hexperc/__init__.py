"""Critical site percolation on honeycomb faces.

Monte-Carlo and exact-enumeration machinery for boundary-cluster
observables on discretized Jordan domains, plus the conformal reference
maps and limiting formulas they converge to.
"""

from .hexlattice import (
    DiscSpec,
    DiscreteDomain,
    DomainSpec,
    Marks,
    OrientedEdge,
    PolygonSpec,
    discretize,
)

__all__ = [
    "DiscSpec",
    "DiscreteDomain",
    "DomainSpec",
    "Marks",
    "OrientedEdge",
    "PolygonSpec",
    "discretize",
]

__version__ = "0.1.0"
