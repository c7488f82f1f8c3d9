"""
对称化 API
"""

from typing import Any, Dict

from fastapi import APIRouter, Query

from ..core.config import settings
from ..core.decorators import safe_endpoint
from ..modules.symmetrize import SymmetrizeService

router = APIRouter(tags=["对称化"])


@router.get("/turan/{n}", summary="在 T₅³(n) 上运行对称化")
@safe_endpoint
def get_turan_symmetrization(
    n: int,
    alpha: float = Query(settings.SYMMETRIZE_ALPHA, gt=0, lt=0.24),
    audit: bool = True,
    random_order: bool = False,
    seed: int = settings.DEFAULT_SEED,
) -> Dict[str, Any]:
    """T₅³(n) 是不动点：返回轨迹、最终状态与 P1–P5 审计结果"""
    if n > settings.SYMMETRIZE_HTTP_MAX_N:
        raise ValueError(f"n must be ≤ {settings.SYMMETRIZE_HTTP_MAX_N} over HTTP, got {n}")
    return SymmetrizeService.turan_run(n, alpha=alpha, audit=audit, random_order=random_order, seed=seed)
