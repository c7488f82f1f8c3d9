"""
配置管理模块
"""

import os
from fractions import Fraction
from typing import Dict, Optional
from dotenv import load_dotenv

# 加载环境变量 (优先加载 .env.local, 然后 .env)
# 这样在本地开发时可以自动读取配置，无需在命令行 export
load_dotenv(".env.local")
load_dotenv(".env")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    return int(raw) if raw not in (None, "") else default


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    return float(raw) if raw not in (None, "") else default


class Settings:
    """应用配置"""

    # 版本号 (单一来源)
    VERSION = "1.0.0"

    # 报告 JSON 结构版本
    REPORT_SCHEMA = "1"

    # Base Directory
    BASE_DIR = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

    # Redis 配置 (可选，未配置或连接失败时以无缓存模式运行)
    REDIS_URL: Optional[str] = os.getenv("REDIS_URL") or None
    CACHE_PREFIX = "xturan"

    # 缓存过期时间 (秒)
    CACHE_TTL: Dict[str, int] = {
        "census": 86400 * 30,   # 普查结果只依赖 (n, seed, restarts)
        "lagrangian": 86400,
        "families": 86400,
    }

    # === Lagrangian 优化器 ===
    LAGRANGIAN_RESTARTS = _env_int("LAGRANGIAN_RESTARTS", 200)
    LAGRANGIAN_MAX_ITER = _env_int("LAGRANGIAN_MAX_ITER", 100_000)
    ARMIJO_C = _env_float("ARMIJO_C", 1e-4)
    ARMIJO_SHRINK = _env_float("ARMIJO_SHRINK", 0.5)
    SUPPORT_THRESHOLD = _env_float("SUPPORT_THRESHOLD", 1e-9)
    CERTIFY_TOL = _env_float("CERTIFY_TOL", 1e-10)
    SIMPLEX_TOL = _env_float("SIMPLEX_TOL", 1e-12)
    EXHAUSTIVE_MAX_N = _env_int("EXHAUSTIVE_MAX_N", 7)
    # 穷举支撑集模式下每个支撑集内部的随机起点数
    EXHAUSTIVE_INNER_RESTARTS = _env_int("EXHAUSTIVE_INNER_RESTARTS", 4)

    # === 规模保护 ===
    HOMOMORPHISM_MAX_VERTICES = _env_int("HOMOMORPHISM_MAX_VERTICES", 16)
    DENSE_MAX_EDGES = _env_int("DENSE_MAX_EDGES", 12)
    SHIFT_EXPLORE_MAX_SETS = _env_int("SHIFT_EXPLORE_MAX_SETS", 12)
    CENSUS_MIN_N = 5
    CENSUS_MAX_N = 7
    CENSUS_OPT_IN_N = 8

    # === 定理常数 ===
    K53_LAMBDA = Fraction(2, 25)
    THEOREM_GAP = 1e-3
    THEOREM_TOL = 1e-8

    # === 对称化 ===
    SYMMETRIZE_ALPHA = _env_float("SYMMETRIZE_ALPHA", 0.02)
    BAD_VERTEX_THRESHOLD = _env_float("BAD_VERTEX_THRESHOLD", 1e-3)
    # HTTP 同步计算的规模上限
    SYMMETRIZE_HTTP_MAX_N = _env_int("SYMMETRIZE_HTTP_MAX_N", 40)

    # === 运行 ===
    DEFAULT_SEED = _env_int("TURAN_SEED", 0)
    DEFAULT_JOBS = _env_int("TURAN_JOBS", 1)

    def lagrangian_options(self, **overrides):
        """默认优化参数 (LagrangianOptions)，可按关键字覆盖"""
        from ..modules.lagrangian.optimizer import LagrangianOptions

        base = LagrangianOptions(
            restarts=self.LAGRANGIAN_RESTARTS,
            max_iter=self.LAGRANGIAN_MAX_ITER,
            seed=self.DEFAULT_SEED,
            armijo_c=self.ARMIJO_C,
            shrink=self.ARMIJO_SHRINK,
            support_threshold=self.SUPPORT_THRESHOLD,
            certify_tol=self.CERTIFY_TOL,
            inner_restarts=self.EXHAUSTIVE_INNER_RESTARTS,
        )
        return base.replace(**overrides) if overrides else base


settings = Settings()
