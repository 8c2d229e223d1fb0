"""Exact rational Betti numbers of Chow varieties of low-degree cycles."""

from .chow import (
    ContradictionReport,
    Degree2Strata,
    RankInconsistency,
    RankRelationTable,
    UnknownCase,
    chow_known_series,
    chow_known_space,
    d1_multiplication_factor,
    degree2_rank_relation,
    detect_contradiction,
    hypothetical_stable_deltas,
    strata_series,
)
from .descriptor import ChowDescriptor
from .series import (
    PartitionTable,
    PoincareSeries,
    add,
    em_series,
    even_em_product,
    gaussian_binomial,
    macdonald_sp,
    make_series,
    mul,
    partition_count,
    partition_table,
    projective_series,
    substitute_power,
    sym_square,
)
from .spaces import (
    BU,
    Bundle,
    EilenbergMacLane,
    EvenEMProduct,
    Grassmannian,
    HypothesisViolation,
    Point,
    Product,
    Projective,
    SpaceExpr,
    Sphere,
    SymProd,
    bundle_series,
    euler_char,
    eval_space,
    parse_space,
)
from .stability import (
    IsoRanges,
    LowHomotopy,
    OutOfRange,
    RangeViolation,
    StabilityCertificate,
    Step,
    StepKind,
    certify_stability,
    codim_bound,
    iso_ranges,
    low_homotopy,
    verify_certificate,
)

__version__ = "0.1.0"
