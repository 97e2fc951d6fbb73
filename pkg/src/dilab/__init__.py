"""Growth rates of weighted graphs and digraphs, and the minimum-dilatation
computations built on them: clique polynomials, curve complexes, the
based-fold transition calculus, and constrained growth-rate minimization."""

from .exppoly import (
    ExpPoly,
    IntPoly,
    NoPositiveRootError,
    largest_positive_root,
    reciprocal,
    smallest_positive_root,
)
from .wgraph import (
    Clique,
    GraphTooLargeError,
    WeightedGraph,
    clique_polynomial,
    enumerate_cliques,
    growth_rate,
    vertex_sum,
)
from .digraph import (
    Curve,
    Digraph,
    char_poly,
    curve_complex,
    enumerate_curves,
    is_primitive,
    spectral_radius,
    strongly_connected,
    verify_mcmullen,
)
from .foldcalc import (
    FILAMENT,
    PETAL,
    Fold,
    FoldScriptError,
    FoldState,
    apply_fold,
    check_parity,
    close_with_isomorphism,
    elementary_fold_matrix,
    fold_matrix,
    new_state,
    run_script,
)
from .casework import (
    CaseSpec,
    Constraint,
    GraphFamily,
    Group,
    MinimizeResult,
    Reduction,
    accounting_constraints,
    builtin_cases,
    get_builtin,
    in_underline_N,
    instantiate,
    integer_search_deltan,
    lower_bound,
    minimize_case,
    objective,
    underline_delta,
    underline_delta_poly,
)

__version__ = "0.1.0"
