"""Edge coloring of split graphs organised by stretch index."""

from .coloring import (
    EdgeColoring,
    Violation,
    color_complete_graph,
    color_universal_even,
    extend_to_pendants,
    fallback_delta_plus_one,
    missing_colors,
    verify_proper,
)
from .errors import (
    DisconnectedGraphError,
    FilterUnsatisfiableError,
    LemmaViolation,
    NotSplitError,
    OutOfFamilyError,
    PreconditionError,
    SizeLimitError,
    SplitChromaError,
    SwapBoundExceeded,
)
from .extender import (
    ColorTrail,
    ExtensionState,
    SwapEntry,
    assign_initial,
    build_color_trail,
    color_sigma3_split,
    color_swap,
    extend_sigma3,
    resolve_conflicts,
)
from .graph import (
    Graph,
    PendantKernel,
    SplitPartition,
    is_neighborhood_overfull,
    is_overfull,
    is_subgraph_overfull_universal,
    recognize_split,
    remove_pendants,
)
from .oracle import GenParams, chromatic_index_bruteforce, random_split_graph
from .pipeline import Classification, ColoringResult, classify, color_graph
from .saturation import (
    Anchor,
    SaturationRecord,
    build_saturated,
    induce_H,
    missing_color_violations,
    plantholt_color,
    select_anchor,
)
from .stretch import StretchClass, stretch_index_oracle, stretch_index_split

__version__ = "0.1.0"
