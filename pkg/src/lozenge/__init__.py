"""Periodic lozenge tilings of the triangular lattice and their flip dynamics."""

from .cuttypes import CutType, is_valid_type, simplex_projection, valid_types
from .errors import (
    BadExponentSum,
    BoundExceeded,
    DeterminantNotOne,
    InfiniteIndex,
    InvalidCut,
    InvalidTiling,
    InvalidType,
    LozengeError,
    NonPositiveType,
    NotFaithful,
    NotFlippable,
    NotInLattice,
    ParseError,
    SchemaError,
    SingularMatrix,
    TypeMismatch,
)
from .formats import decode_tiling, encode_tiling
from .grouprep import (
    DiagonalGenerator,
    GroupEmbedding,
    admits_cut_group_form,
    admits_cut_matrix_form,
    has_trivial_character,
    is_klein_four,
    parse_group,
)
from .lattice import (
    ENTRY_BOUND,
    MAX_INDEX,
    PeriodicityMatrix,
    Point,
    QuotientIndex,
    canonicalize,
    in_lattice,
    kernel_lattice,
    quotient_index,
    reduce,
)
from .mutation import FlipSequence, flip_class, flip_connect
from .oracle import (
    DEFAULT_MAX_N,
    Report,
    all_canonical_matrices,
    enumerate_all_tilings,
    exists_three_letter_tiling,
    verify_classification,
    verify_mutation_theorem,
    verify_type_theorem,
)
from .render import render_ascii, render_simplex_svg, render_svg
from .tiling import (
    DIRECTIONS,
    LETTERS,
    Cut,
    HeightFunction,
    Tiling,
    air_tiling,
    canonical_tiling,
    flip,
    from_cut,
    height_at,
    height_function,
    is_acyclic,
    is_higher_preprojective,
    lattice_height,
    sources_and_sinks,
    to_cut,
    type_of,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BadExponentSum",
    "BoundExceeded",
    "Cut",
    "CutType",
    "DEFAULT_MAX_N",
    "DIRECTIONS",
    "DeterminantNotOne",
    "DiagonalGenerator",
    "ENTRY_BOUND",
    "FlipSequence",
    "GroupEmbedding",
    "HeightFunction",
    "InfiniteIndex",
    "InvalidCut",
    "InvalidTiling",
    "InvalidType",
    "LETTERS",
    "LozengeError",
    "MAX_INDEX",
    "NonPositiveType",
    "NotFaithful",
    "NotFlippable",
    "NotInLattice",
    "ParseError",
    "PeriodicityMatrix",
    "Point",
    "QuotientIndex",
    "Report",
    "SchemaError",
    "SingularMatrix",
    "Tiling",
    "TypeMismatch",
    "admits_cut_group_form",
    "admits_cut_matrix_form",
    "air_tiling",
    "all_canonical_matrices",
    "canonical_tiling",
    "canonicalize",
    "decode_tiling",
    "encode_tiling",
    "enumerate_all_tilings",
    "exists_three_letter_tiling",
    "flip",
    "flip_class",
    "flip_connect",
    "from_cut",
    "has_trivial_character",
    "height_at",
    "height_function",
    "in_lattice",
    "is_acyclic",
    "is_higher_preprojective",
    "is_klein_four",
    "is_valid_type",
    "kernel_lattice",
    "lattice_height",
    "parse_group",
    "quotient_index",
    "reduce",
    "render_ascii",
    "render_simplex_svg",
    "render_svg",
    "simplex_projection",
    "sources_and_sinks",
    "to_cut",
    "type_of",
    "validate",
    "valid_types",
    "verify_classification",
    "verify_mutation_theorem",
    "verify_type_theorem",
]
