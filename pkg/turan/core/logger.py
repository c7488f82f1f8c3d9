"""
统一日志配置
使用 loguru 提供结构化日志，输出到 stderr (stdout 留给命令结果)
"""

import sys
from loguru import logger

from .config import settings

LOG_FORMAT = "<level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"


def set_level(level: str) -> None:
    """重新安装控制台 handler (CLI --verbose / --quiet 使用)"""
    logger.remove()
    logger.add(sys.stderr, format=LOG_FORMAT, level=level.upper(), colorize=True)


# 移除默认 handler，添加控制台 handler (带颜色)
set_level(settings.LOG_LEVEL)

# 导出 logger 实例供其他模块使用
__all__ = ["logger", "set_level"]
