"""
族目录 API
"""

from typing import Any, Dict, Optional

from fastapi import APIRouter

from ..core.decorators import safe_endpoint
from ..modules.families import FamilyService

router = APIRouter(tags=["族目录"])


@router.get("", summary="列出目录中的全部族")
@safe_endpoint
def list_families() -> Dict[str, Any]:
    return FamilyService.list_families()


@router.get("/{name}", summary="获取单个族的构造与标志")
@safe_endpoint
def get_family(name: str, n: Optional[int] = None) -> Dict[str, Any]:
    """
    Args:
        n: 参数化族的参数 (k333 为 r)，缺省用目录默认值
    """
    return FamilyService.describe(name, n)
