"""
HTTP 服务入口

只读接口：族目录、命名族的 λ、[n] 上的普查、shift、T₅³(n) 对称化。
本地运行: python server.py 或 uvicorn server:app --reload
"""

import threading
from contextlib import asynccontextmanager

import uvicorn
from fastapi import FastAPI
from starlette.middleware.cors import CORSMiddleware

from turan.api import classify, families, lagrangian, shift, symmetrize
from turan.core.cache import cache, warmup_cache
from turan.core.config import settings
from turan.core.logger import logger
from turan.modules.classify import CensusService

ROUTERS = (
    (families.router, "/families", "Families"),
    (lagrangian.router, "/lagrangian", "Lagrangian"),
    (classify.router, "/classify", "Census"),
    (shift.router, "/shift", "Shift"),
    (symmetrize.router, "/symmetrize", "Symmetrization"),
)


def initial_warmup() -> None:
    """普查是最慢的路由，启动后在后台把 n = 5..7 算好写入缓存"""
    for n in range(settings.CENSUS_MIN_N, settings.CENSUS_MAX_N + 1):
        if warmup_cache(CensusService.census_rows, n, settings.DEFAULT_SEED):
            logger.info(f"普查缓存已预热: n={n}")


@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info(f"🚀 X-Turan {settings.VERSION} 启动")
    if cache.connected:
        logger.info(f"✅ Redis: {cache.host}")
        threading.Thread(target=initial_warmup, name="census-warmup", daemon=True).start()
    else:
        logger.warning("Redis 未连接，每次请求都会重新计算")
    yield
    logger.info("🛑 X-Turan 关闭")


app = FastAPI(
    title="X-Turan API",
    description="超图 Lagrangian 与 Turán 密度工具：族目录、数值/精确 Lagrangian、相交族普查、shift、对称化",
    version=settings.VERSION,
    lifespan=lifespan,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=[],
    allow_credentials=False,
    allow_methods=["GET", "DELETE"],
    allow_headers=[],
)

for router, prefix, tag in ROUTERS:
    app.include_router(router, prefix=prefix, tags=[tag])


# -----------------------------------------------------------------------------
# 系统
# -----------------------------------------------------------------------------
@app.get("/api/health", tags=["系统"], summary="服务健康检查")
def health_check():
    stats = cache.get_stats()
    return {
        "status": "ok",
        "service": "X-Turan",
        "version": settings.VERSION,
        "cache": {
            "connected": cache.connected,
            "host": cache.host,
            "keys_count": stats.get("keys_count", 0),
            "hit_rate": stats.get("hit_rate", "0%"),
        },
    }


@app.get("/api/cache/stats", tags=["系统"], summary="缓存统计")
def get_cache_stats():
    return cache.get_stats()


@app.delete("/api/cache/clear", tags=["系统"], summary="清除全部缓存")
def clear_cache():
    return {"status": "ok", "deleted_keys": cache.delete_pattern(f"{settings.CACHE_PREFIX}:*")}


@app.delete("/api/cache/clear/{pattern}", tags=["系统"], summary="按前缀清除缓存")
def clear_cache_pattern(pattern: str):
    """pattern 为缓存前缀，例如 census / lagrangian / families"""
    deleted = cache.delete_pattern(f"{settings.CACHE_PREFIX}:*:{pattern}:*")
    return {"status": "ok", "pattern": pattern, "deleted_keys": deleted}


if __name__ == "__main__":
    uvicorn.run("server:app", host="0.0.0.0", port=8080, reload=True)
