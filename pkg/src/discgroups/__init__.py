"""Presentations of fundamental groups of discriminant complements.

The package builds the finite presentations attached to degree ``d``
hypersurfaces in projective ``n``-space and checks their computable
consequences (abelianizations, finite orders, smoothing quotients,
degree identities, critical value geometry).
"""

from .errors import DiscGroupsError, InvalidInput, SizeLimitExceeded, UnsupportedInput
from .lattice import (
    IntersectionGraph,
    Params,
    build_graph,
    enumerate_indices,
    find_single_edge_triple,
    pairing,
)
from .words import Relation, Word
from .presentation import (
    Presentation,
    bundle_expansion,
    delta,
    present,
    present_zariski,
    relabel,
)

__all__ = [
    "DiscGroupsError",
    "InvalidInput",
    "SizeLimitExceeded",
    "UnsupportedInput",
    "IntersectionGraph",
    "Params",
    "build_graph",
    "enumerate_indices",
    "find_single_edge_triple",
    "pairing",
    "Relation",
    "Word",
    "Presentation",
    "bundle_expansion",
    "delta",
    "present",
    "present_zariski",
    "relabel",
]

__version__ = "0.1.0"
