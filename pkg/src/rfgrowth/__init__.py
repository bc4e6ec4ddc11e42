"""Detection growth in groups at desk scale.

How large a finite quotient does it take to see that a given element of
an infinite group is not the identity?  This package measures that
question exactly, for word balls in free groups, a genus-2 surface
group, the integers, and lamplighter groups, against a complete catalog
of finite groups of small order.  Exact companions: truncated
power-series expansions certifying lower-central-series depth,
Gaussian-integer congruence levels with enumerated 2-group kernels, and
arithmetic-progression kernels producing hard-to-detect lamplighter
elements.
"""

from .catalog import Catalog, catalog_build, ensure_catalog
from .detect import (
    ANY,
    NILPOTENT,
    SOLVABLE,
    DetectionResult,
    Detector,
    PropertyClass,
    detect,
    detection_floor_verify,
    normal_subgroup_count,
)
from .errors import BudgetError, KernelBoundError
from .families import (
    FreeFamily,
    GroupFamily,
    IntegerLineFamily,
    LamplighterFamily,
    Length,
    SurfaceFamily,
    get_family,
)
from .gaussian import (
    CIRCLE,
    STABILIZER_GENERATORS,
    GaussInt,
    GaussMat2,
    HermitianCircle,
    ResidueMat2,
    circle_preserved,
    entry_growth_probe,
    fuchsian_reduction_check,
    g_level,
    h_map,
    kernel_2group_check,
    nil_detect_upper,
)
from .groups import FiniteGroupTable, closure, cyclic_table, direct_product
from .growth import (
    GrowthRecord,
    GrowthTable,
    growth_F,
    growth_table,
    inequality3_check,
    integer_line_reference,
    loglog_fit,
    minimal_nondivisor,
    table_export,
    table_parse,
    word_growth,
)
from .magnus import DepthReport, depth_doubling_check, doubling_word, expand, lcs_depth
from .reproduce import CLAIM_IDS, run_claim
from .words import Alphabet, Word, commutator, parse_word, parse_word_expr
from .wreath import (
    WreathElement,
    build_ap_matrix,
    kernel_mod_p,
    small_integer_kernel,
    wreath_word_length,
)

__version__ = "0.1.0"

__all__ = [
    "ANY",
    "Alphabet",
    "BudgetError",
    "CIRCLE",
    "CLAIM_IDS",
    "Catalog",
    "DepthReport",
    "DetectionResult",
    "Detector",
    "FiniteGroupTable",
    "FreeFamily",
    "GaussInt",
    "GaussMat2",
    "GroupFamily",
    "GrowthRecord",
    "GrowthTable",
    "HermitianCircle",
    "IntegerLineFamily",
    "KernelBoundError",
    "LamplighterFamily",
    "Length",
    "NILPOTENT",
    "PropertyClass",
    "ResidueMat2",
    "SOLVABLE",
    "STABILIZER_GENERATORS",
    "SurfaceFamily",
    "Word",
    "WreathElement",
    "build_ap_matrix",
    "catalog_build",
    "circle_preserved",
    "closure",
    "commutator",
    "cyclic_table",
    "depth_doubling_check",
    "detect",
    "detection_floor_verify",
    "direct_product",
    "doubling_word",
    "ensure_catalog",
    "entry_growth_probe",
    "expand",
    "fuchsian_reduction_check",
    "g_level",
    "get_family",
    "growth_F",
    "growth_table",
    "h_map",
    "inequality3_check",
    "integer_line_reference",
    "kernel_2group_check",
    "kernel_mod_p",
    "lcs_depth",
    "loglog_fit",
    "minimal_nondivisor",
    "nil_detect_upper",
    "normal_subgroup_count",
    "parse_word",
    "parse_word_expr",
    "run_claim",
    "small_integer_kernel",
    "table_export",
    "table_parse",
    "word_growth",
    "wreath_word_length",
]
