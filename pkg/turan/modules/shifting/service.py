"""
命名族的 shift 查询
"""

from typing import Any, Dict, List, Optional

from ..families.catalog import get_entry
from .shift import ShiftTrace, shift


class ShiftService:
    @staticmethod
    def run(name: str, n: Optional[int] = None, policy: str = "deterministic") -> Dict[str, Any]:
        family = get_entry(name).build(n)
        outcome = shift(family, policy)
        traces: List[ShiftTrace] = outcome if isinstance(outcome, list) else [outcome]
        return {
            "name": name,
            "n": family.n,
            "policy": policy,
            "traces": [t.to_dict() for t in traces],
            "types": sorted({t.to_dict()["type"] for t in traces}),
        }
