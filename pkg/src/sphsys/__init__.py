"""Exact combinatorics of spherical systems of semisimple groups."""

from .catalog import (
    CatalogEntry,
    catalog_entries,
    catalog_table,
    classify_tail_shape,
    compatible_roots,
    is_compatible,
)
from .enumeration import EnumerationQuery, enumerate_systems, probe_distinguished_not_star
from .quotient import (
    CenterData,
    QuotientReport,
    center_data,
    defect,
    distinguished_subsets,
    higher_defect_quotients,
    higher_defect_witnesses,
    hilbert_basis,
    is_distinguished,
    is_reductive,
    is_star_distinguished,
    minimal_subsets,
    quotient,
    weight_monoid,
)
from .rootsystem import RootSystem, format_root, parse_root_expr, support
from .structure import (
    ReductionNode,
    Tail,
    detect_tails,
    is_cuspidal,
    is_decomposition,
    is_primitive,
    projective_colors,
    reduction_step,
    reduction_tree,
)
from .system import (
    AColor,
    Color,
    ColorTable,
    SphericalSystem,
    build_colors,
    is_valid,
    localize_sigma,
    localize_simple,
    validate,
)
from .textio import ParseError, format_system, format_systems, parse_system, parse_systems

__version__ = "0.1.0"

__all__ = [
    "AColor",
    "CatalogEntry",
    "CenterData",
    "Color",
    "ColorTable",
    "EnumerationQuery",
    "ParseError",
    "QuotientReport",
    "ReductionNode",
    "RootSystem",
    "SphericalSystem",
    "Tail",
    "build_colors",
    "catalog_entries",
    "catalog_table",
    "center_data",
    "classify_tail_shape",
    "compatible_roots",
    "defect",
    "detect_tails",
    "distinguished_subsets",
    "enumerate_systems",
    "format_root",
    "format_system",
    "format_systems",
    "higher_defect_quotients",
    "higher_defect_witnesses",
    "hilbert_basis",
    "is_compatible",
    "is_cuspidal",
    "is_decomposition",
    "is_distinguished",
    "is_primitive",
    "is_reductive",
    "is_star_distinguished",
    "is_valid",
    "localize_sigma",
    "localize_simple",
    "minimal_subsets",
    "parse_root_expr",
    "parse_system",
    "parse_systems",
    "probe_distinguished_not_star",
    "projective_colors",
    "quotient",
    "reduction_step",
    "reduction_tree",
    "support",
    "validate",
    "weight_monoid",
]
