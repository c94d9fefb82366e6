"""Exact multigraded Betti tables of symmetric monomial ideals.

One finite computation at the stabilization level determines the complete
table shape, projective dimension and regularity of the whole family of
ideals, one per number of variables.  Everything is computed exactly, over
the rationals or a prime field.
"""

__version__ = "0.1.0"

from .betti import (
    BettiRecord,
    BettiSet,
    betti_at_degree,
    betti_set,
    graded_table,
    pd_and_reg,
    upper_koszul_complex,
)
from .cli import (
    IdealFileError,
    betti_set_from_payload,
    betti_set_payload,
    main,
    parse_ideal_file,
    parse_ideal_text,
    segment_set_from_payload,
    segment_set_payload,
)
from .homology import (
    ComplexTooLargeError,
    FieldSpec,
    SimplicialComplex,
    boundary_matrices,
    boundary_squares_to_zero,
    euler_characteristic_check,
    faces_by_dim,
    rank_over_field,
    reduced_homology_dims,
    vertex_cap,
)
from .ideals import (
    Multidegree,
    Partition,
    SymmetricIdeal,
    ZeroIdealError,
    candidate_degrees,
    contains_monomial,
    dominates,
    minimal_generators,
    orbit_size,
    restrict_to_n,
)
from .stability import (
    AsymptoticProfile,
    CheckReport,
    CompactDegree,
    CompactRecord,
    SegmentSet,
    SizeCapError,
    asymptotics,
    check_positive_lift,
    check_shift_equivalence,
    compose_betti,
    extrapolate_full_support,
    length_two_closed_form,
    rank_stability_report,
    segments,
)
from .taylor import (
    GeneratorCapError,
    expand_generators,
    scarf_degrees,
    strand_boundary_matrices,
    taylor_strand_tor,
)

__all__ = [
    "AsymptoticProfile",
    "BettiRecord",
    "BettiSet",
    "CheckReport",
    "CompactDegree",
    "CompactRecord",
    "ComplexTooLargeError",
    "FieldSpec",
    "GeneratorCapError",
    "IdealFileError",
    "Multidegree",
    "Partition",
    "SegmentSet",
    "SimplicialComplex",
    "SizeCapError",
    "SymmetricIdeal",
    "ZeroIdealError",
    "asymptotics",
    "betti_at_degree",
    "betti_set",
    "betti_set_from_payload",
    "betti_set_payload",
    "boundary_matrices",
    "boundary_squares_to_zero",
    "candidate_degrees",
    "check_positive_lift",
    "check_shift_equivalence",
    "compose_betti",
    "contains_monomial",
    "dominates",
    "euler_characteristic_check",
    "expand_generators",
    "extrapolate_full_support",
    "faces_by_dim",
    "graded_table",
    "length_two_closed_form",
    "main",
    "minimal_generators",
    "orbit_size",
    "parse_ideal_file",
    "parse_ideal_text",
    "pd_and_reg",
    "rank_over_field",
    "rank_stability_report",
    "reduced_homology_dims",
    "restrict_to_n",
    "scarf_degrees",
    "segment_set_from_payload",
    "segment_set_payload",
    "segments",
    "strand_boundary_matrices",
    "taylor_strand_tor",
    "upper_koszul_complex",
    "vertex_cap",
]
