"""Hyperbolic surface geometry from length/twist coordinates.

Exact upper half-plane and torus oracles, right-angled hexagon and pants
trigonometry, collar decompositions, extremal-length estimators with a
max-over-components combiner, finite-family distance estimates with a
sup-metric product model, and geodesic-instability diagnostics.
"""

from .collar import (
    MARGULIS_2D,
    CollarDecomposition,
    CollarParams,
    DEFAULT_PARAMS,
    ThickComponent,
    ThinAnnulus,
    collar_decomposition,
    partial_decomposition,
)
from .distance import (
    CurveFamily,
    DiscrepancyReport,
    ProductPoint,
    annulus_ratio_check,
    default_curve_family,
    kerckhoff_distance_estimate,
    pi_map,
    pi_map_inverse,
    product_distance,
    product_region_discrepancy,
    torus_family_estimate,
)
from .errors import (
    DegenerateHexagonError,
    NoCollarError,
    NoCrossingsError,
    NotCrossingError,
    NumericDomainError,
    ParseError,
    ProjectionUndefinedError,
    TeichlenError,
    TwistSpreadWarning,
    TwistUndefinedError,
    ValidationError,
)
from .extremal import (
    ArcMultiplicities,
    ComponentLength,
    EstimateResult,
    arc_multiplicities,
    lambda_annulus,
    lambda_surface_estimate,
    lambda_thick,
)
from .halfplane import (
    HGeodesic,
    INFTY,
    MobiusMap,
    TorusLattice,
    UHPoint,
    geodesic_point,
    hyp_distance,
    k_ratio_sup,
    project_ideal_to_axis,
    torus_extremal_length,
    twist_min,
    twist_prime,
)
from .instability import (
    BetweennessWitness,
    GrowthRateFit,
    MetricSpaceHandle,
    TransferReport,
    distortion_transfer_check,
    euclidean_instability_exact,
    euclidean_space,
    growth_rate_estimate,
    hyp_product_space,
    instability_lower_bound,
    is_delta_between,
    segment_distance,
    sup_product_space,
)
from .pants import (
    FlatAnnulus,
    OrthoLengths,
    PantsCuffs,
    annulus_arc_crossings,
    collar_modulus,
    flat_annulus_twist,
    hexagon_side,
    pants_orthogeodesics,
)
from .spaces import pi_image_space
from .surface import (
    CurveSystem,
    End,
    FNPoint,
    Marking,
    Pants,
    PantsDecomposition,
    SurfaceSpec,
    build_marking,
    core_curve,
    curve_dehn_twist,
    empty_curve,
    estimated_twist,
    fn_dehn_twist,
    intersection_number,
)

__version__ = "0.1.0"
