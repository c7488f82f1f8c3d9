"""
工具函数：随机数入口、JSON 转换、计时
"""

import time
from contextlib import contextmanager
from fractions import Fraction
from typing import Any, Iterator, Optional

import numpy as np


def make_rng(seed: Optional[int]) -> np.random.Generator:
    """统一的随机数生成器入口 (所有随机性都经过 seed)"""
    return np.random.default_rng(seed)


def to_jsonable(value: Any) -> Any:
    """把 numpy / Fraction / set 等转换为 JSON 友好的结构"""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, Fraction):
        return str(value)
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    return value


@contextmanager
def stopwatch() -> Iterator[dict]:
    """计时上下文，结束后 elapsed 写入返回的字典"""
    box = {"elapsed": 0.0}
    started = time.perf_counter()
    try:
        yield box
    finally:
        box["elapsed"] = time.perf_counter() - started
