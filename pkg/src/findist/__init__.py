"""Exact distance, rigid-motion, and incidence experiments over small finite fields.

The package is organized bottom-up: field arithmetic, plane geometry with the
quadratic distance, the rigid motion group, its even Clifford model, the
projective embedding of motions, exact counting statistics, the segment-class
to point-plane reduction, and an experiment harness with a CLI front end.
"""

from .field import FieldElement, FieldSpec, find_irreducible
from .geometry import (
    Circle,
    Line,
    Point,
    PointSet,
    Segment,
    all_lines,
    all_points,
    bisector,
    distance,
    equidistant_line,
    reflect,
)
from .motions import (
    RigidMotion,
    Rotation,
    all_motions,
    axial_to_motion,
    enumerate_rotations,
    iter_r_tau,
    motion_between_segments,
    r_tau_set,
    rotation_about,
    so2_order,
    transporter_set,
)
from .clifford import (
    CliffordElement,
    EvenCliffordElement,
    QuadraticFormSpec,
    blade,
    even_element,
    even_units,
    rho_star,
    sandwich,
)
from .kinematic import (
    ProjMap,
    ProjPlane,
    ProjPoint,
    all_proj_points,
    exceptional_set,
    kappa,
    kappa_inv,
    phi_left,
    phi_right,
    r_tau_plane,
    transporter_image,
    transporter_line,
)
from .counting import (
    bisector_stats,
    distance_stats,
    isosceles_count,
    max_collinear_cocircular,
    prune_curve,
    prune_heavy,
    segment_classes,
    verify_identities,
)
from .incidence import (
    IncidenceInstance,
    ReductionWitness,
    axial_pair_count,
    claim_reduction,
    count_incidences,
    epsilon_term,
    max_collinear,
    rudnev_ratio,
)
from .generators import GENERATOR_KINDS, UnsupportedGeneratorError, generate
from .harness import (
    ExperimentConfig,
    Report,
    Thresholds,
    make_config,
    run,
    standard_corpus,
    standard_corpus_sets,
)

__version__ = "0.1.0"

__all__ = [
    "FieldElement",
    "FieldSpec",
    "find_irreducible",
    "Circle",
    "Line",
    "Point",
    "PointSet",
    "Segment",
    "all_lines",
    "all_points",
    "bisector",
    "distance",
    "equidistant_line",
    "reflect",
    "RigidMotion",
    "Rotation",
    "all_motions",
    "axial_to_motion",
    "enumerate_rotations",
    "iter_r_tau",
    "motion_between_segments",
    "r_tau_set",
    "rotation_about",
    "so2_order",
    "transporter_set",
    "CliffordElement",
    "EvenCliffordElement",
    "QuadraticFormSpec",
    "blade",
    "even_element",
    "even_units",
    "rho_star",
    "sandwich",
    "ProjMap",
    "ProjPlane",
    "ProjPoint",
    "all_proj_points",
    "exceptional_set",
    "kappa",
    "kappa_inv",
    "phi_left",
    "phi_right",
    "r_tau_plane",
    "transporter_image",
    "transporter_line",
    "bisector_stats",
    "distance_stats",
    "isosceles_count",
    "max_collinear_cocircular",
    "prune_curve",
    "prune_heavy",
    "segment_classes",
    "verify_identities",
    "IncidenceInstance",
    "ReductionWitness",
    "axial_pair_count",
    "claim_reduction",
    "count_incidences",
    "epsilon_term",
    "max_collinear",
    "rudnev_ratio",
    "GENERATOR_KINDS",
    "UnsupportedGeneratorError",
    "generate",
    "ExperimentConfig",
    "Report",
    "Thresholds",
    "make_config",
    "run",
    "standard_corpus",
    "standard_corpus_sets",
]
