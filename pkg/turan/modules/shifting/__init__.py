"""
Shift 模块
相交族的 shift 运算及其结构性质检查
"""

from .shift import (
    ShiftTrace,
    apply_move,
    is_antichain,
    legal_moves,
    shift,
    shift_all,
    shift_deterministic,
    shift_type,
    verify_gen_shift,
    verify_unique_intersection,
)

from .service import ShiftService

__all__ = [
    "ShiftService",
    "ShiftTrace",
    "apply_move",
    "is_antichain",
    "legal_moves",
    "shift",
    "shift_all",
    "shift_deterministic",
    "shift_type",
    "verify_gen_shift",
    "verify_unique_intersection",
]
