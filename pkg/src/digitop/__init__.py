"""Digital topology at desk scale: images, continuity, subdivisions, and
approximate fixed point decisions."""

from .errors import (
    Budget,
    BudgetExceededError,
    DEFAULT_BUDGET,
    FormatError,
    SizeGuardError,
)
from .grid import (
    CU,
    Adjacency,
    DigitalImage,
    Point,
    Power,
    StructureCertificates,
    adjacent,
    box,
    closed_neighbors,
    components,
    cube,
    eccentricity,
    image,
    interval,
    is_connected,
    neighbors,
    parse_adjacency,
    reflexive_adjacent,
    sets_adjacent,
    shortest_path_lengths,
    structure_certificates,
    validate_adjacency,
)
from .maps import (
    ContinuityReport,
    PointMap,
    antipodal_map,
    clamp_map,
    compose,
    constant_map,
    enumerate_continuous_maps,
    identity_map,
    inverse,
    is_continuous,
    is_isomorphism,
    is_retraction,
    make_standard_map,
    projection_map,
    search_continuous_maps,
    shift_fold_map,
)
from .subdivision import (
    InducerCertificate,
    InducerReport,
    MultiMap,
    SubdividedImage,
    TriState,
    collapse,
    compose_multimap_then_map,
    compose_multimaps,
    constant_full_multimap,
    enumerate_continuous_multimaps,
    find_inducer,
    induce_multimap,
    is_multivalued_retraction,
    singleton_multimap,
    subdivide,
)
from .afpp import (
    AfppVerdict,
    BoxTheoremReport,
    Certificate,
    MultiCounterexample,
    MultimapProperties,
    PreservationReport,
    Status,
    UniversalityReport,
    approx_fixed_points,
    approx_fixed_points_multi,
    decide_afpp_m,
    decide_afpp_s,
    fixed_points,
    fixed_points_multi,
    multimap_properties,
    preservation_checks,
    universality_check,
    verify_box_theorems,
)

__version__ = "0.1.0"
