"""
Shift API
"""

from typing import Any, Dict, Optional

from fastapi import APIRouter

from ..core.decorators import safe_endpoint
from ..modules.shifting import ShiftService

router = APIRouter(tags=["Shift"])


@router.get("/{name}", summary="对命名相交族执行 shift")
@safe_endpoint
def get_shift(name: str, n: Optional[int] = None, policy: str = "deterministic") -> Dict[str, Any]:
    """
    Args:
        policy: "deterministic" 或 "all"
    """
    return ShiftService.run(name, n, policy)
