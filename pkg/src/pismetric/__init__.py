"""Prime ideal sum graphs of finite commutative rings and their metric dimension."""

from .errors import (
    DisconnectedGraph,
    DisconnectedRing,
    EmptyGraph,
    GraphFormatError,
    NotChainRing,
    NotCovered,
    PismetricError,
    RingSyntaxError,
    TooLarge,
)
from .formulas import Construction, FormulaResult, construct_resolving, formula_metric_dim
from .metric import (
    ResolvingReport,
    TwinPartition,
    info_lower_bound,
    is_resolving,
    metric_dimension_bruteforce,
    metric_dimension_exact,
    twin_lower_bound,
    twin_partition,
)
from .pisgraph import (
    PisGraph,
    all_pairs_distances,
    build,
    diameter,
    export_dot,
    export_json,
    import_graph_json,
    is_connected,
)
from .rings import (
    IdealVec,
    RingSpec,
    enumerate_ideals,
    ideal_sum,
    in_jacobson,
    is_prime,
    parse_ring_spec,
)

__version__ = "0.1.0"

__all__ = [
    "PismetricError", "RingSyntaxError", "NotChainRing", "DisconnectedRing",
    "EmptyGraph", "DisconnectedGraph", "GraphFormatError", "NotCovered", "TooLarge",
    "RingSpec", "IdealVec", "parse_ring_spec", "enumerate_ideals", "ideal_sum",
    "is_prime", "in_jacobson",
    "PisGraph", "build", "all_pairs_distances", "diameter", "is_connected",
    "export_dot", "export_json", "import_graph_json",
    "TwinPartition", "ResolvingReport", "twin_partition", "twin_lower_bound",
    "info_lower_bound", "is_resolving", "metric_dimension_exact",
    "metric_dimension_bruteforce",
    "FormulaResult", "Construction", "formula_metric_dim", "construct_resolving",
    "__version__",
]
