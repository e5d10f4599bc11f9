"""Inclusion-minimal cograph completion.

Two incremental engines over a shared cotree representation:

- complete_graph: O(n + m') overall, and at every insertion step it adds
  the fewest possible edges among all inclusion-minimal choices for that
  step;
- complete_graph_fast: O(n + m log^2 n) overall via a dynamic forest and
  order-maintenance lists, picking an arbitrary valid step completion.

Both outputs are inclusion-minimal: no proper subset of the returned fill
edges also yields a cograph.
"""

from .cotree import Cotree, deserialize, from_nested
from .errors import (
    CofillError,
    ContractViolation,
    CotreeParseError,
    FillGuardExceeded,
    GraphFormatError,
    InvalidParametersError,
    RetryBudgetError,
    UnknownVertexError,
)
from .forest import DynamicForest, available_backends, default_backend
from .graphs import (
    Graph,
    generate_gnm,
    generate_random_regular,
    parse_edge_list,
    serialize_edge_list,
)
from .linear import Completion, StepResult, complete_graph, complete_step
from .ordermaint import OrderList
from .polylog import FastState, complete_graph_fast, complete_step_fast

__version__ = "0.1.0"

__all__ = [
    "CofillError",
    "Completion",
    "ContractViolation",
    "Cotree",
    "CotreeParseError",
    "DynamicForest",
    "FastState",
    "FillGuardExceeded",
    "Graph",
    "GraphFormatError",
    "InvalidParametersError",
    "OrderList",
    "RetryBudgetError",
    "StepResult",
    "UnknownVertexError",
    "available_backends",
    "complete_graph",
    "complete_graph_fast",
    "complete_step",
    "complete_step_fast",
    "default_backend",
    "deserialize",
    "from_nested",
    "generate_gnm",
    "generate_random_regular",
    "parse_edge_list",
    "serialize_edge_list",
]
