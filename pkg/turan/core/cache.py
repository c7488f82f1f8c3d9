"""
结果缓存 (Redis)

普查、命名族的 λ 等计算是确定性的：相同参数 + 相同版本号得到相同结果，
因此缓存只影响耗时。未配置 REDIS_URL 或连接失败时退化为直接计算。
"""

import hashlib
import json
import re
import threading
import time
from dataclasses import dataclass, field
from datetime import datetime
from functools import wraps
from typing import Any, Callable, Dict, Optional

import redis
from redis import ConnectionPool

from .config import settings
from .logger import logger
from .utils import to_jsonable


@dataclass
class CacheCounters:
    """本进程内的命中统计 (Redis 的 keyspace 统计包含其他客户端)；预热线程与请求并发更新"""

    hits: int = 0
    misses: int = 0
    writes: int = 0
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def record(self, kind: str) -> None:
        with self._lock:
            setattr(self, kind, getattr(self, kind) + 1)

    def snapshot(self) -> Dict[str, int]:
        with self._lock:
            return {"hits": self.hits, "misses": self.misses, "writes": self.writes}

    @property
    def hit_rate(self) -> str:
        counts = self.snapshot()
        total = counts["hits"] + counts["misses"]
        return f"{round(counts['hits'] / total * 100, 2) if total else 0}%"


class ResultCache:
    _instance: Optional["ResultCache"] = None
    _lock = threading.Lock()

    def __init__(self, redis_url: Optional[str] = None):
        self.redis_url = redis_url or settings.REDIS_URL
        self.counters = CacheCounters()
        self._client: Optional[redis.Redis] = None
        self._tried = False

    @classmethod
    def get_instance(cls) -> "ResultCache":
        with cls._lock:
            if cls._instance is None:
                cls._instance = cls()
        return cls._instance

    def _connect(self) -> None:
        self._tried = True
        if not self.redis_url:
            logger.debug("REDIS_URL 未配置，结果不缓存")
            return
        try:
            pool = ConnectionPool.from_url(
                self.redis_url,
                max_connections=10,
                decode_responses=True,
                socket_connect_timeout=3,
                socket_timeout=30,
            )
            client = redis.Redis(connection_pool=pool)
            client.ping()
            self._client = client
        except (redis.RedisError, ValueError) as e:
            logger.warning(f"Redis 不可用 ({e})，结果不缓存")

    @property
    def client(self) -> Optional[redis.Redis]:
        if not self._tried:
            with self._lock:
                if not self._tried:
                    self._connect()
        return self._client

    @property
    def connected(self) -> bool:
        return self.client is not None

    @property
    def host(self) -> Optional[str]:
        """host:port，不含密码"""
        if not self.connected:
            return None
        match = re.search(r"@([^/]+)", self.redis_url) or re.search(r"redis://([^/]+)", self.redis_url)
        return match.group(1) if match else None

    def get(self, key: str) -> Optional[Any]:
        if not self.connected:
            return None
        try:
            raw = self.client.get(key)
        except redis.RedisError as e:
            logger.error(f"缓存读取失败 [{key}]: {e}")
            return None
        if raw is None:
            self.counters.record("misses")
            return None
        self.counters.record("hits")
        return json.loads(raw)

    def set(self, key: str, value: Any, ttl: int) -> bool:
        if not self.connected:
            return False
        try:
            self.client.setex(key, ttl, json.dumps(to_jsonable(value), ensure_ascii=False, sort_keys=True))
        except (redis.RedisError, TypeError, ValueError) as e:
            logger.error(f"缓存写入失败 [{key}]: {e}")
            return False
        self.counters.record("writes")
        return True

    def keys(self, pattern: str):
        return list(self.client.scan_iter(match=pattern, count=1000)) if self.connected else []

    def delete_pattern(self, pattern: str) -> int:
        try:
            found = self.keys(pattern)
            return self.client.delete(*found) if found else 0
        except redis.RedisError as e:
            logger.error(f"批量删除失败 [{pattern}]: {e}")
            return 0

    def get_stats(self) -> Dict[str, Any]:
        if not self.connected:
            return {"connected": False, "keys_count": 0, "hit_rate": self.counters.hit_rate}
        try:
            keys_count = len(self.keys(f"{settings.CACHE_PREFIX}:{settings.VERSION}:*"))
        except redis.RedisError as e:
            return {"connected": False, "error": str(e)}
        return {
            "connected": True,
            "version": settings.VERSION,
            "keys_count": keys_count,
            "hit_rate": self.counters.hit_rate,
            **self.counters.snapshot(),
        }


cache = ResultCache.get_instance()


def make_cache_key(prefix: str, *args, **kwargs) -> str:
    """前缀 + 工具版本 + 参数摘要；升级版本后旧结果自动失效"""
    params = json.dumps({"args": to_jsonable(args), "kwargs": to_jsonable(kwargs)}, sort_keys=True, default=str)
    digest = hashlib.sha256(params.encode()).hexdigest()[:16]
    return f"{settings.CACHE_PREFIX}:{settings.VERSION}:{prefix}:{digest}"


def wrap_response(
    status: str,
    data: Optional[Any] = None,
    message: Optional[str] = None,
    cached_at: Optional[float] = None,
    ttl: Optional[int] = None,
) -> Dict[str, Any]:
    """HTTP 响应信封：{status, data | message, cached_at?, ttl?}"""
    response: Dict[str, Any] = {"status": status}
    if data is not None:
        response["data"] = data
    if message:
        response["message"] = message
    if cached_at:
        response["cached_at"] = datetime.fromtimestamp(cached_at).isoformat()
    if ttl is not None:
        response["ttl"] = ttl
    return response


def cached(key_prefix: str, ttl: int = 3600):
    """
    结果缓存装饰器。被装饰函数返回 JSON 友好的数据；
    关键字参数 _refresh=True 跳过读取并重新写入。

    Usage:
        @staticmethod
        @cached("census", ttl=settings.CACHE_TTL["census"])
        def census_rows(n, seed): ...
    """

    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args, **kwargs):
            refresh = kwargs.pop("_refresh", False)
            key = make_cache_key(key_prefix, *args, **kwargs)
            if not refresh:
                hit = cache.get(key)
                if isinstance(hit, dict) and "data" in hit:
                    logger.debug(f"缓存命中: {key_prefix}")
                    return hit["data"]
            started = time.time()
            result = func(*args, **kwargs)
            if result is not None and cache.set(key, {"stored_at": time.time(), "data": result}, ttl):
                logger.info(f"缓存写入: {key_prefix} (计算 {time.time() - started:.1f}s)")
            return result

        wrapper._original = func  # type: ignore[attr-defined]
        return wrapper

    return decorator


def warmup_cache(func: Callable, *args, **kwargs) -> bool:
    """强制重算并写入；Redis 未连接时返回 False"""
    if not hasattr(func, "_original"):
        return False
    try:
        func(*args, _refresh=True, **kwargs)
    except Exception as e:
        logger.error(f"缓存预热失败 [{func.__name__}]: {e}")
        return False
    return cache.connected
