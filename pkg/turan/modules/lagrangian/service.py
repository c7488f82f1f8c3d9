"""
命名族的 λ 查询 (HTTP / CLI 共用)
"""

from typing import Any, Dict, Optional

from ...core.cache import cached
from ...core.config import settings
from ..families.catalog import get_entry
from .exact import theorem_gap
from .optimizer import LagrangianOptions, default_options, maximize


def evaluate_named(name: str, n: Optional[int] = None, options: Optional[LagrangianOptions] = None) -> Dict[str, Any]:
    """
    数值求解并与目录中的闭式比较

    Returns:
        LagrangianResult.to_dict() 加上 name / n / gap / expected；
        闭式为精确值时附带 matches_expected
    """
    entry = get_entry(name)
    family = entry.build(n)
    result = maximize(family, options or default_options(family))
    expected = entry.expected_lambda(n)
    payload = result.to_dict()
    payload.update(
        {
            "name": entry.name,
            "n": family.n,
            "gap": theorem_gap(result.value),
            "expected": None if expected is None else str(expected),
            "expected_value": None if expected is None else float(expected),
            "expected_kind": entry.expected_kind,
        }
    )
    if expected is not None and entry.expected_kind == "exact":
        payload["matches_expected"] = bool(abs(result.value - float(expected)) <= entry.tolerance)
    elif expected is not None and entry.expected_kind == "bound":
        payload["matches_expected"] = bool(result.value <= float(expected) + entry.tolerance)
    return payload


class LagrangianService:
    @staticmethod
    @cached("lagrangian", ttl=settings.CACHE_TTL["lagrangian"])
    def evaluate(name: str, n: Optional[int] = None, seed: int = settings.DEFAULT_SEED) -> Dict[str, Any]:
        family = get_entry(name).build(n)
        return evaluate_named(name, n, default_options(family, seed=seed))
