#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
导出族目录
把目录中每个超图 (取默认参数) 以文本格式写入指定目录，文件名为 <name>.txt；
集族条目 (如 F4 / R5) 没有超图文件形式，跳过。

用法: python scripts/export_catalog.py [输出目录] [--json]
"""

import os
import sys

# 将项目根目录添加到 sys.path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from turan.core.logger import logger
from turan.modules.families import CATALOG
from turan.modules.hypergraph import Hypergraph, write_hypergraph


def export(target: str, suffix: str = ".txt") -> int:
    os.makedirs(target, exist_ok=True)
    written = 0
    for name, entry in CATALOG.items():
        family = entry.build()
        if not isinstance(family, Hypergraph):
            logger.debug(f"跳过集族 {name}")
            continue
        write_hypergraph(os.path.join(target, f"{name}{suffix}"), family, comment=entry.description)
        written += 1
    logger.info(f"✅ 已导出 {written} 个超图到 {target}")
    return written


if __name__ == "__main__":
    args = [a for a in sys.argv[1:] if not a.startswith("--")]
    export(args[0] if args else "catalog", ".json" if "--json" in sys.argv else ".txt")
