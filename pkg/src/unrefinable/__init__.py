"""Unrefinable partitions through numerical sets, Young diagrams and hook lengths."""

from .partitions import (
    DistinctPartition,
    PartClassFilter,
    enumerate_distinct,
    is_proper,
    make_partition,
    missing_parts,
    triangular_decompose,
)
from .numset import NumericalSet, from_partition, is_semigroup, small_elements
from .young import YoungDiagram, conjugate, hook_grid, is_self_conjugate, kn_inverse, kn_transform
from .criteria import is_unrefinable_definitional, is_unrefinable_geometric, verdicts_agree
from .maximal import enumerate_unrefinable, exceptional, lambda_t_bound, maximal_unrefinable
from .bijection import BijectionCase, backward, classify, forward, verify_bijection

__version__ = "0.1.0"
