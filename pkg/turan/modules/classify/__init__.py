"""
极大相交 3-图普查与分类校验
"""

from .census import (
    CSV_COLUMNS,
    CensusRecord,
    CensusService,
    catalog_labels,
    census_frame,
    complement_choice_scan,
    enumerate_maximal_intersecting,
    intersection_graph,
    maximal_intersecting_families,
    pair_coverage_profile,
    profile_histogram,
    subset_scan,
    write_census_csv,
)
from .verification import (
    census_checks,
    oracle_check,
    verify_pair_cover_classification,
    verify_theorem_main3int,
)

__all__ = [
    "CSV_COLUMNS",
    "CensusRecord",
    "CensusService",
    "catalog_labels",
    "census_frame",
    "complement_choice_scan",
    "enumerate_maximal_intersecting",
    "intersection_graph",
    "maximal_intersecting_families",
    "pair_coverage_profile",
    "profile_histogram",
    "subset_scan",
    "write_census_csv",
    "census_checks",
    "oracle_check",
    "verify_pair_cover_classification",
    "verify_theorem_main3int",
]
