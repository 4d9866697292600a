"""Exact diameters of generalized Petersen graphs GPG(n,s) and circulants C_n(1,s).

The package computes shortest-path distances in C_n(1,s) by closed form,
derives the circulant diameter from them, decides the +1/+2 gap to the GPG
diameter, and dispatches per-case diameter formulas, everything backed by
an independent BFS oracle that the test suite runs exhaustively.
"""

from .bfs_oracle import (
    DiameterWitness,
    DistanceVector,
    GraphError,
    bfs_distances,
    circulant_diameter_by_bfs,
    gpg_diameter_by_bfs,
    graph_diameter,
    restricted_bfs,
    source_eccentricity,
)
from .circulant_distance import (
    CriticalSet,
    FamilyEntry,
    FamilyLengths,
    PathDescriptor,
    RealizedPath,
    circulant_diameter,
    critical_vertices,
    d_c,
    d_c_all,
    d_c_pair,
    decompose,
    family_lengths,
    realize,
    wrap_limit,
)
from .core_graphs import (
    INNER,
    OUTER,
    SPOKE,
    AdjacencyGraph,
    CirculantParams,
    DerivedCase,
    GpgParams,
    build_circulant,
    build_gpg,
    contract_spokes,
    derive_case,
    expand_to_gpg,
    normalize_s,
)
from .epsilon_classifier import (
    Basis,
    ConjectureReport,
    EpsilonVerdict,
    VertexEvidence,
    classify_epsilon,
    conjecture_scan,
    epsilon_by_key2,
    epsilon_exact,
    epsilon_small,
    inner_only_reachable,
    key3_sufficient,
    outer_only_reachable,
    predicted_epsilon_one,
)
from .gpg_closed_form import (
    CaseKind,
    CaseTag,
    DiameterResult,
    PValues,
    classify_case,
    diameter_even_even,
    diameter_even_odd,
    diameter_gamma0,
    diameter_lambda_le_gamma,
    diameter_odd_even,
    diameter_odd_odd,
    diameter_special_4p,
    gpg_diameter,
    p_values,
    upper_bound_circulant,
    upper_bound_gpg,
)

__version__ = "0.1.0"
