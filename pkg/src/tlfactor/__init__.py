"""Temperley-Lieb diagram algebra of type A.

Diagrams as non-crossing perfect matchings with the delta-loop relation,
heaps of fully commutative Coxeter words, and the reconstruction of a
reduced factorization into simple diagrams from a bare diagram.
"""

from .diagrams import (
    DeltaPoly,
    Diagram,
    Endpoint,
    TLElement,
    diagram_from_word,
    element_product,
    identity_diagram,
    multiply,
    simple_diagram,
    validate,
)
from .enumeration import FCCatalog, catalan, enumerate_diagrams, enumerate_fc, random_diagram
from .errors import (
    BudgetExceeded,
    ClassTooLarge,
    CrossingChords,
    InconsistentCrossingOrder,
    IndexOutOfRange,
    InvariantViolation,
    NoBraidAtPosition,
    NotPerfectMatching,
    NotReduced,
    OutOfRange,
    ParseError,
    PositionNotCommutable,
    RankMismatch,
    SearchBudgetExceeded,
    TLError,
)
from .factorize import (
    ColumnProfile,
    Incidence,
    RegionGraph,
    SeparatorProfile,
    column_profiles,
    factor,
    factor_multiplicities,
    horizontal_adjacency,
    region_graph,
    separator_profiles,
)
from .heaps import (
    Heap,
    heap_dump,
    heap_equals,
    heap_from_word,
    heap_is_fc_reduced,
    render_heap,
    word_from_heap,
)
from .words import (
    Word,
    apply_braid,
    apply_commutation,
    commutation_class,
    is_fc,
    is_reduced_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ClassTooLarge",
    "ColumnProfile",
    "CrossingChords",
    "DeltaPoly",
    "Diagram",
    "Endpoint",
    "FCCatalog",
    "Heap",
    "InconsistentCrossingOrder",
    "IndexOutOfRange",
    "Incidence",
    "InvariantViolation",
    "NoBraidAtPosition",
    "NotPerfectMatching",
    "NotReduced",
    "OutOfRange",
    "ParseError",
    "PositionNotCommutable",
    "RankMismatch",
    "RegionGraph",
    "SearchBudgetExceeded",
    "SeparatorProfile",
    "TLElement",
    "TLError",
    "Word",
    "apply_braid",
    "apply_commutation",
    "catalan",
    "column_profiles",
    "commutation_class",
    "diagram_from_word",
    "element_product",
    "enumerate_diagrams",
    "enumerate_fc",
    "factor",
    "factor_multiplicities",
    "heap_dump",
    "heap_equals",
    "heap_from_word",
    "heap_is_fc_reduced",
    "horizontal_adjacency",
    "identity_diagram",
    "is_fc",
    "is_reduced_oracle",
    "multiply",
    "random_diagram",
    "region_graph",
    "render_heap",
    "separator_profiles",
    "simple_diagram",
    "validate",
    "word_from_heap",
]
