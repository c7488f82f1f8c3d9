"""
X-Turan
超图 Lagrangian 与 Turán 型问题的计算工具
"""

from .core.config import settings

__version__ = settings.VERSION
