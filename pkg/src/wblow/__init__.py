"""Weighted centers, invariants and principalization over Q.

The package computes, with exact rational arithmetic, the canonical
weighted center of an ideal in a polynomial ring at a marked point, the
lexicographic invariant attached to it, the charts of the associated
weighted blowup, and iterated blowup trees that principalize the ideal
or resolve a hypersurface at the studied rational points.
"""

from .arith import (
    INF,
    ParseError,
    Polynomial,
    VariableMismatchError,
    format_polynomial,
    parse_polynomial,
)
from .blowup import (
    Chart,
    InexactDivisionError,
    all_charts,
    canonical_blowup,
    strict_transform_hypersurface,
    weighted_transform,
)
from .canonical import (
    CanonicalResult,
    ProfileSizeError,
    canonical_center,
    mord,
)
from .center import (
    FrameEntry,
    TransportedCenter,
    TriangularizationError,
    WeightedCenter,
    center_equal,
    format_rational,
    frame_from_parameters,
    graph_normalize,
)
from .contact import ContactChoice, find_maximal_contact, restrict_to_contact
from .driver import (
    BlowupTree,
    Node,
    RunConfig,
    embedded_resolve,
    principalize,
)
from .ideals import (
    IdealOrderError,
    LocalIdeal,
    autoreduce,
    coefficient_ideal,
    derivative_ideal,
    derivative_tower,
    divide_remainder,
    ord_via_derivations,
)
from .kernel import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "INF",
    "ParseError",
    "Polynomial",
    "VariableMismatchError",
    "format_polynomial",
    "parse_polynomial",
    "Chart",
    "InexactDivisionError",
    "all_charts",
    "canonical_blowup",
    "strict_transform_hypersurface",
    "weighted_transform",
    "CanonicalResult",
    "ProfileSizeError",
    "canonical_center",
    "mord",
    "FrameEntry",
    "TransportedCenter",
    "TriangularizationError",
    "WeightedCenter",
    "center_equal",
    "format_rational",
    "frame_from_parameters",
    "graph_normalize",
    "ContactChoice",
    "find_maximal_contact",
    "restrict_to_contact",
    "BlowupTree",
    "Node",
    "RunConfig",
    "embedded_resolve",
    "principalize",
    "IdealOrderError",
    "LocalIdeal",
    "autoreduce",
    "coefficient_ideal",
    "derivative_ideal",
    "derivative_tower",
    "divide_remainder",
    "ord_via_derivations",
    "KERNEL_BACKEND",
    "__version__",
]
