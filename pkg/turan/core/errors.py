"""
异常定义
全部继承 ValueError，调用方可以按标准库习惯统一捕获
"""

from typing import Any, Optional


class HypergraphFormatError(ValueError):
    """超图文件格式错误 (携带行号)"""

    def __init__(self, line: int, message: str):
        self.line = line
        self.reason = message
        super().__init__(f"line {line}: {message}")


class HypergraphMemberError(HypergraphFormatError):
    """JSON 镜像中的某条边不合法 (携带该边在 edges 中的下标)"""

    def __init__(self, index: int, message: str):
        self.line = None
        self.index = index
        self.reason = message
        ValueError.__init__(self, f"edges[{index}]: {message}")


class GuardExceededError(ValueError):
    """超出规模保护阈值"""


class PreconditionError(ValueError):
    """前置条件不满足"""


class VerificationError(ValueError):
    """校验失败，record 为失败现场"""

    def __init__(self, check: str, message: str, record: Optional[Any] = None):
        self.check = check
        self.record = record
        super().__init__(f"[{check}] {message}")
