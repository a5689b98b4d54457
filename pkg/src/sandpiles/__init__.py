"""Exact computations for sandpile groups on grid graphs.

The package computes recurrent configurations, symmetric recurrents,
identity elements, and element orders for sandpile grid graphs, and
cross-verifies the counts against domino-tiling numbers and
Chebyshev/trigonometric product formulas.  All authoritative arithmetic
is exact (Python integers and fractions); floating point appears only in
the closed-form product evaluations, guarded by a rounding check.
"""

from .errors import SizeCapError, PrecisionError, SymmetryError
from .linalg import det_int, solve_exact, denominator_lcm
from .graphs import (
    SandpileGraph,
    MatchGraph,
    grid_sandpile,
    d_family,
    p_graph,
    board_graph,
    reduced_laplacian,
)
from .engine import (
    stabilize,
    is_recurrent,
    stable_add,
    identity_config,
    enumerate_recurrents,
    config_order,
    burning_config,
    max_stable,
)
from .symmetry import (
    GroupAction,
    klein_action,
    orbits,
    symmetrized_laplacian,
    count_symmetric_recurrents,
    enumerate_symmetric_recurrents,
    fold,
    unfold,
)
from .formulas import (
    chebyshev_t,
    chebyshev_u,
    block_tridiag_det,
    closed_form_count,
    lu_wu_count,
    characteristic_recurrence,
)
from .tilings import (
    count_matchings,
    enumerate_matchings,
    enumerate_spanning_trees,
    spanning_tree_weight_sum,
    a_seq,
    pn_embed,
    distance_config,
    diagonal_config,
)

__all__ = [name for name in dir() if not name.startswith("_")]
