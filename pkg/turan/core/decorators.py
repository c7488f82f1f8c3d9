"""
边界层的异常处理
safe_endpoint: HTTP 路由 → {status: ok|error} 信封
safe_command:  CLI 子命令 → 退出码
"""

from functools import wraps
from typing import Any, Callable, Dict

from .cache import wrap_response
from .errors import VerificationError
from .logger import logger
from .utils import to_jsonable

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def safe_endpoint(func: Callable) -> Callable:
    """
    路由只负责调用 Service；结果转换为 JSON 友好结构后放进 data，
    输入错误 (ValueError 及其子类) 和意外异常都返回 status="error"。

    Usage:
        @router.get("/{name}")
        @safe_endpoint
        def get_family(name: str):
            return FamilyService.describe(name)
    """
    @wraps(func)
    def wrapper(*args, **kwargs) -> Dict[str, Any]:
        try:
            return wrap_response(status="ok", data=to_jsonable(func(*args, **kwargs)))
        except ValueError as e:
            logger.warning(f"请求参数错误 [{func.__name__}]: {e}")
            return wrap_response(status="error", message=str(e))
        except Exception as e:
            logger.exception(f"API 错误 [{func.__name__}]: {e}")
            return wrap_response(status="error", message=f"{type(e).__name__}: {e}")
    return wrapper


def safe_command(func: Callable[..., int]) -> Callable[..., int]:
    """校验失败 → 1，输入/用法错误 → 2，其他异常 → 1 (带 traceback)"""
    @wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except VerificationError as e:
            logger.error(f"校验失败: {e}")
            if e.record is not None:
                logger.error(f"失败记录: {e.record}")
            return EXIT_FAIL
        except ValueError as e:
            logger.error(f"输入错误: {e}")
            return EXIT_USAGE
        except Exception as e:
            logger.exception(f"命令执行异常 [{func.__name__}]: {e}")
            return EXIT_FAIL
    return wrapper
