#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
普查缓存预热脚本
把 n = 5..7 的极大相交族普查结果写入 Redis，HTTP 服务的 /classify/{n} 随后直接命中缓存。
Redis 不可用时只计算不写入。
"""

import os
import sys

# 将项目根目录添加到 sys.path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from turan.core.cache import cache, warmup_cache
from turan.core.config import settings
from turan.core.logger import logger
from turan.modules.classify import CensusService


def main() -> int:
    if not cache.connected:
        logger.warning("Redis 未连接，预热结果不会被保存")
    failed = 0
    for n in range(settings.CENSUS_MIN_N, settings.CENSUS_MAX_N + 1):
        logger.info(f"🔄 正在计算 n={n} 的普查...")
        if warmup_cache(CensusService.census_rows, n, settings.DEFAULT_SEED):
            logger.info(f"✅ n={n} 已写入缓存")
        else:
            failed += 1
    return 1 if failed and cache.connected else 0


if __name__ == "__main__":
    sys.exit(main())
