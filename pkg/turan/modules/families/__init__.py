"""
具名集族与极值构造
"""

from .catalog import (
    CATALOG,
    F4,
    F7_LINES,
    K3,
    PT,
    R5,
    FamilyCatalogEntry,
    build_named,
    catalog_table,
    check_flags,
    get_entry,
)
from .constructions import (
    build_k333,
    build_star_sr,
    build_turan_t53,
    complete,
    complete_lagrangian,
    delta53_count,
    star_limit,
    star_limit_vs_complete,
    star_size,
    t53_count,
    t53_block_census,
    t53_edge_blocks,
    t53_fit_constant,
    turan_t53_partition,
    turan_t53_parts,
)

from .service import FamilyService

__all__ = [
    "FamilyService",
    "CATALOG",
    "F4",
    "F7_LINES",
    "K3",
    "PT",
    "R5",
    "FamilyCatalogEntry",
    "build_named",
    "catalog_table",
    "check_flags",
    "get_entry",
    "build_k333",
    "build_star_sr",
    "build_turan_t53",
    "complete",
    "complete_lagrangian",
    "delta53_count",
    "star_limit",
    "star_limit_vs_complete",
    "star_size",
    "t53_count",
    "t53_block_census",
    "t53_edge_blocks",
    "t53_fit_constant",
    "turan_t53_partition",
    "turan_t53_parts",
]
