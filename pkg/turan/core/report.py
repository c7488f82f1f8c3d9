"""
校验报告统一输出工具
"""

import hashlib
import json
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd

from .utils import to_jsonable


def build_check(
    name: str,
    passed: bool,
    *,
    expected: Any = None,
    found: Any = None,
    detail: Optional[str] = None,
    **extra: Any,
) -> Dict[str, Any]:
    """构建单项检查结构。"""
    payload: Dict[str, Any] = {"name": name, "passed": bool(passed)}
    if expected is not None:
        payload["expected"] = to_jsonable(expected)
    if found is not None:
        payload["found"] = to_jsonable(found)
    if detail:
        payload["detail"] = detail
    payload.update({k: to_jsonable(v) for k, v in extra.items()})
    return payload


def build_suite(name: str, checks: Iterable[Dict[str, Any]], **extra: Any) -> Dict[str, Any]:
    """汇总一组检查。"""
    items = list(checks)
    failed = [c for c in items if not c["passed"]]
    payload: Dict[str, Any] = {
        "suite": name,
        "passed": not failed,
        "total": len(items),
        "failed": len(failed),
        "checks": items,
    }
    payload.update({k: to_jsonable(v) for k, v in extra.items()})
    return payload


def first_failure(suites: Iterable[Dict[str, Any]]) -> Optional[Dict[str, Any]]:
    """第一个失败的检查 (含所属 suite 名)。"""
    for suite in suites:
        for check in suite["checks"]:
            if not check["passed"]:
                return {"suite": suite["suite"], **check}
    return None


def dumps_canonical(payload: Any, indent: Optional[int] = None) -> str:
    """确定性 JSON 编码：键排序，浮点按 repr，相同输入逐字节相同。"""
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=indent, ensure_ascii=False,
                      separators=(",", ":") if indent is None else (",", ": "))


def result_digest(payload: Any) -> str:
    """结果摘要 (sha256)。"""
    return hashlib.sha256(dumps_canonical(payload).encode("utf-8")).hexdigest()


def render_table(rows: List[Dict[str, Any]], columns: Optional[List[str]] = None) -> str:
    """人类可读表格。"""
    if not rows:
        return "(empty)"
    frame = pd.DataFrame(rows)
    if columns:
        frame = frame[[c for c in columns if c in frame.columns]]
    return frame.to_string(index=False)


def suites_table(suites: Iterable[Dict[str, Any]]) -> str:
    """verify-all 汇总表。"""
    rows = [
        {"suite": s["suite"], "passed": "PASS" if s["passed"] else "FAIL", "checks": s["total"], "failed": s["failed"]}
        for s in suites
    ]
    return render_table(rows)
