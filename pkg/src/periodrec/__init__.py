"""Approximate periods of strings under edit distance."""

from ._kernels import BACKEND
from .corpus import GenSpec, gen_periodic, generate, inject_edits
from .kangaroo import ApmOutcome, last_row_thresholded, rotation_distances
from .lcp_index import (
    CompositeText,
    InvalidInputError,
    LcpIndex,
    build_index,
    lcp_suffixes,
    lcp_text_vs_periodic,
)
from .oracle import brute_apr, ed_to_prefix, edit_distance
from .recovery import (
    PeriodReport,
    RecoveryParams,
    RotationClass,
    canonical_rotation,
    candidate_rotation_classes,
    primitive,
    recover,
    tau,
)
from .wraparound import definition_check, full_table, min_distance_any_rotation

__version__ = "0.1.0"
