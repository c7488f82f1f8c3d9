"""
X-Turan 核心模块
提供配置、日志、缓存、异常与报告等基础功能
"""

from .cache import cache
from .config import settings
from .logger import logger

__all__ = ["cache", "settings", "logger"]
