"""
目录查询 (HTTP / CLI 共用)
"""

from typing import Any, Dict, List, Optional

from ...core.cache import cached
from ...core.config import settings
from ..hypergraph.io import serialize
from ..hypergraph.operations import covers_pairs, is_intersecting
from ..hypergraph.structures import Hypergraph
from .catalog import catalog_table, get_entry


class FamilyService:
    @staticmethod
    def list_families() -> List[Dict[str, Any]]:
        return catalog_table().to_dict(orient="records")

    @staticmethod
    @cached("families", ttl=settings.CACHE_TTL["families"])
    def describe(name: str, n: Optional[int] = None) -> Dict[str, Any]:
        entry = get_entry(name)
        family = entry.build(n)
        expected = entry.expected_lambda(n)
        payload: Dict[str, Any] = {
            "name": entry.name,
            "description": entry.description,
            "param": entry.param,
            "value": n if n is not None else entry.default_param,
            "vertices": family.n,
            "members": [list(m) for m in family.members],
            "intersecting": is_intersecting(family),
            "covers_pairs": covers_pairs(family),
            "expected": None if expected is None else str(expected),
            "expected_kind": entry.expected_kind,
            "bound_ref": entry.bound_ref,
            "source": entry.source,
        }
        if isinstance(family, Hypergraph):
            payload["r"] = family.r
            payload["text"] = serialize(family, comment=entry.name)
        return payload
