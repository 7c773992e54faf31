"""Conditional graph coloring: family builders, closed-form colorings, a checker and an exact solver."""
from .coloring import (
    Coloring,
    CondParams,
    NeighborhoodDeficit,
    ProperViolation,
    SurjectivityGap,
    Verdict,
    compact,
    distinct_colors_used,
    verify_conditional,
    verify_proper,
)
from .constructions import (
    ClaimedColoring,
    cycle_square_chromatic,
    cycle_square_coloring,
    grid2n_coloring,
    strong_grid_coloring,
    web_dynamic_coloring,
)
from .errors import CondColorError, ExcludedCase, InvalidInput, InvalidParameter, UnsupportedCase
from .graph import (
    FamilySpec,
    Graph,
    cartesian_product,
    complete,
    cycle,
    cycle_square,
    degree,
    grid2n,
    max_degree,
    neighbors,
    path,
    power,
    strong_grid,
    strong_product,
    web,
    wheel,
)
from .solver import (
    BoundReport,
    SolveResult,
    chi_r_exact,
    chi_r_oracle,
    chromatic_number,
    lai_lower_bound,
    lemma1_scan,
)

__version__ = "0.1.0"
