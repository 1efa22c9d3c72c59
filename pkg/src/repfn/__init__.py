"""Exact representation-function computation for doubling-closed partitions.

The package revolves around sets A of nonnegative integers determined by
a balanced prefix on [0, 2N-1] plus the doubling rule 2m in A iff m in A,
2m+1 in A iff m not in A (for m >= N); such sets share a representation
function with their complement from 2N-1 on.  It provides exact r2 and
cross-pair profiles, explicit extremal constructions, checkers for the
catalogued identities and bounds, exhaustive small-N scans, and a CLI.
"""

from .digits import digit_sum, enumerate_A0, enumerate_B0, in_A0, in_B0
from .sets import (
    A0_SET,
    B0_SET,
    Likeness,
    SarkozySet,
    SetSpec,
    format_spec,
    make_set,
    parse_spec,
)
from .profiles import (
    CrossProfile,
    Method,
    RepProfile,
    cross_profile,
    r2_bitparallel,
    r2_naive,
    r2_profile,
    symmetric_cross,
)
from .constructions import cor3_set, thm1_set, thm2_set, thm3_set
from .verify import (
    BoundReport,
    TheoremId,
    check_dombi,
    check_lemma1,
    check_lower_bounds,
    check_theorem_a,
    check_thm1_upper,
    check_thm2_zero,
    check_thm3_zero,
    empirical_density,
    ratio_sequence,
)
from .search import SearchRecord, enumerate_balanced_prefixes, iter_scan, scan

__version__ = "0.1.0"

__all__ = [
    "digit_sum",
    "in_A0",
    "in_B0",
    "enumerate_A0",
    "enumerate_B0",
    "SarkozySet",
    "SetSpec",
    "Likeness",
    "A0_SET",
    "B0_SET",
    "make_set",
    "parse_spec",
    "format_spec",
    "Method",
    "RepProfile",
    "CrossProfile",
    "r2_naive",
    "r2_bitparallel",
    "r2_profile",
    "cross_profile",
    "symmetric_cross",
    "thm1_set",
    "thm2_set",
    "thm3_set",
    "cor3_set",
    "TheoremId",
    "BoundReport",
    "check_theorem_a",
    "check_dombi",
    "check_lemma1",
    "check_thm1_upper",
    "check_thm2_zero",
    "check_thm3_zero",
    "check_lower_bounds",
    "empirical_density",
    "ratio_sequence",
    "SearchRecord",
    "enumerate_balanced_prefixes",
    "iter_scan",
    "scan",
    "__version__",
]
