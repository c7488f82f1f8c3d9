import os
import sys

import pytest

# 将项目根目录添加到 sys.path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from turan.modules.families import build_named, build_turan_t53  # noqa: E402
from turan.modules.hypergraph import Hypergraph  # noqa: E402


@pytest.fixture
def k53() -> Hypergraph:
    return build_named("K5_3")


@pytest.fixture
def fano() -> Hypergraph:
    return build_named("F7")


@pytest.fixture
def ff6() -> Hypergraph:
    return build_named("FF6")


@pytest.fixture
def t53_10() -> Hypergraph:
    return build_turan_t53(10)


@pytest.fixture
def small_options():
    """单元测试用的小规模优化参数"""
    from turan.core.config import settings

    return settings.lagrangian_options(restarts=16, seed=0)
