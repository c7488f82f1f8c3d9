"""
极大相交族普查 API
"""

from typing import Any, Dict

from fastapi import APIRouter

from ..core.config import settings
from ..core.decorators import safe_endpoint
from ..modules.classify import CensusService

router = APIRouter(tags=["普查"])


@router.get("/{n}", summary="[n] 上全部极大相交 3-族 (同构去重)")
@safe_endpoint
def get_census(n: int, seed: int = settings.DEFAULT_SEED) -> Dict[str, Any]:
    """n 仅限 5..7；结果较慢，Redis 可用时缓存"""
    return CensusService.census_rows(n, seed)
