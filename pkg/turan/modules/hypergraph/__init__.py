"""
超图核心模块
一致超图 / 集族表示、结构判定、构造、规范型与同态检测
"""

from .structures import Hypergraph, SetFamily, Partition, Family, as_family
from .io import parse, serialize, to_json, parse_json, read_hypergraph, write_hypergraph
from .operations import (
    restrict,
    generate,
    blow_up,
    link_family,
    covers_pairs,
    is_intersecting,
    is_maximal_intersecting,
    relabel,
    delete_vertices,
    pair_degrees,
    minimum_degree,
    contains_complete,
)
from .canonical import canonical_form, canonical_id, is_isomorphic, automorphism_orbits
from .homomorphism import (
    k_rr_pattern,
    find_homomorphism,
    find_embedding,
    is_subfamily_up_to_isomorphism,
    contains_k333_hom,
    k333_witness,
)
from .density import blowup_density, is_dense, density_report

__all__ = [
    "Hypergraph",
    "SetFamily",
    "Partition",
    "Family",
    "as_family",
    "parse",
    "serialize",
    "to_json",
    "parse_json",
    "read_hypergraph",
    "write_hypergraph",
    "restrict",
    "generate",
    "blow_up",
    "link_family",
    "covers_pairs",
    "is_intersecting",
    "is_maximal_intersecting",
    "relabel",
    "delete_vertices",
    "pair_degrees",
    "minimum_degree",
    "contains_complete",
    "canonical_form",
    "canonical_id",
    "is_isomorphic",
    "automorphism_orbits",
    "k_rr_pattern",
    "find_homomorphism",
    "find_embedding",
    "is_subfamily_up_to_isomorphism",
    "contains_k333_hom",
    "k333_witness",
    "blowup_density",
    "is_dense",
    "density_report",
]
