"""
Lagrangian API
"""

from typing import Any, Dict, Optional

from fastapi import APIRouter

from ..core.config import settings
from ..core.decorators import safe_endpoint
from ..modules.lagrangian import LagrangianService

router = APIRouter(tags=["Lagrangian"])


@router.get("/{name}", summary="计算命名族的 Lagrangian")
@safe_endpoint
def get_lagrangian(name: str, n: Optional[int] = None, seed: int = settings.DEFAULT_SEED) -> Dict[str, Any]:
    """数值最大值、argmax、KKT 残差与认证标志；有闭式的族同时给出期望值"""
    return LagrangianService.evaluate(name, n, seed)
