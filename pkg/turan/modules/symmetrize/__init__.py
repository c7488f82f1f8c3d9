"""
对称化 (Cleaning + Merging)、性质审计、5-划分评分与最小度剥离
"""

from .structures import (
    AuditReport,
    MergeEvent,
    PartitionScore,
    PeelLog,
    PointedPartitionedHypergraph,
    SymmetrizationLog,
)
from .process import cleaning, default_threshold, merging, rebuild_blowup, symmetrize, uncovered_pairs
from .audit import audit_properties
from .scoring import best_destination, edge_goodness, find_bad_vertices, local_search_partition, non_good_degrees
from .peeling import peel_min_degree

from .service import SymmetrizeService

__all__ = [
    "SymmetrizeService",
    "AuditReport",
    "MergeEvent",
    "PartitionScore",
    "PeelLog",
    "PointedPartitionedHypergraph",
    "SymmetrizationLog",
    "cleaning",
    "default_threshold",
    "merging",
    "rebuild_blowup",
    "symmetrize",
    "uncovered_pairs",
    "audit_properties",
    "best_destination",
    "edge_goodness",
    "find_bad_vertices",
    "local_search_partition",
    "non_good_degrees",
    "peel_min_degree",
]
