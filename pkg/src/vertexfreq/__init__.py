"""Vertex-frequency analysis on finite undirected graphs.

Graph Fourier transform, convolution, modulation, and translation built on
a fixed Laplacian eigenbasis; complete invertibility analysis of the
translation operators; Fiedler-vector sign partitions and zero-set
geometry, including the barren graph family with its closed-form spectrum.
"""

from .graphs import (
    Graph,
    add_edges,
    ball,
    connected_components,
    contract_edge,
    dirichlet_energy,
    disjoint_union,
    distance,
    graph_sum,
    induced_subgraph,
    is_bipartite,
    is_connected,
    laplacian_apply,
    set_distance,
    subdivide_edge,
)
from .generators import (
    BarrenLayout,
    barren,
    complete,
    complete_bipartite,
    cycle,
    duplicated_middle_path,
    generalized_ladder,
    grid,
    path,
    random_tree,
    star,
)
from .spectral import (
    BarrenSpectrum,
    EigenBasis,
    barren_closed_spectrum,
    barren_cubic_roots,
    dft_basis,
    eigendecompose,
    is_hadamard_basis,
    multiplicity,
    sylvester_hadamard_basis,
)
from .operators import (
    FailureWitness,
    NonInvertibleSymbolError,
    NotInvertibleError,
    TranslationAnalysis,
    TranslationNormBounds,
    apply_multiplier,
    convolve,
    default_zero_tol,
    gft,
    igft,
    invert_multiplier,
    modulate,
    semigroup_table,
    translate,
    translation_analysis,
    translation_composition_check,
    translation_inverse,
    translation_matrix,
    translation_norm_report,
    translation_symbol,
)
from .fiedler import (
    BarrenVerification,
    CharacteristicReport,
    HarnessReport,
    LiftResult,
    VertexPartition,
    constant_ball_scan,
    default_partition_tol,
    extend_subgraph_eigenvector,
    fiedler,
    lift_common_eigenvector,
    partition,
    partition_distance_check,
    planar_family_harness,
    sign_connectivity_check,
    verify_barren,
    zero_ball_scan,
)
from .estimators import FiedlerPartition, GraphFourierTransform, GraphTranslation

__version__ = "0.1.0"
