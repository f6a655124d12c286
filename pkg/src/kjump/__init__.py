"""Independent set reconfiguration under the k-Jump rule: exact oracle,
TJ-to-k-Jump compiler, polynomial 2-Jump decision on split graphs, and the
E3-SAT reduction to shortest reconfiguration on chordal graphs."""

from .graph import (
    Graph,
    GraphError,
    NotSplitError,
    SplitDecomposition,
    build_graph,
    diameter,
    dist,
    find_peo,
    is_independent,
    recognize_split,
    verify_peo,
)
from .engine import (
    Move,
    MoveSequence,
    ResourceExhausted,
    decide,
    exists_within,
    k_adjacent,
    lower_bound_moves,
    shortest,
    successors,
    validate_sequence,
)
from .simulate import simulate_move, simulate_sequence
from .split2 import decide2
from .reduction import (
    CnfFormula,
    ReductionInstance,
    assignment_to_sequence,
    build_instance,
    instance_stats,
    parse_e3cnf,
    peo_order,
    sequence_to_assignment,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
