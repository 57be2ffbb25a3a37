"""
测试公共设置：关闭日志文件输出，提供常用的代数构造器
"""

import os
import sys
from pathlib import Path

os.environ["SWALG_LOG_DIR"] = ""

# 添加包路径
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

import pytest

from swalg.grassmann import IdealSpec
from swalg.quotient import build_algebra

DEFAULT_SEED = 20240101
EXTRA_SEEDS = [1, 7, 42, 1234, 99991]


@pytest.fixture(scope="session")
def algebra():
    """algebra(n, k=4) -> W_{n,k}（进程内缓存）"""

    def _build(n: int, k: int = 4):
        return build_algebra(IdealSpec(n=n, k=k))

    return _build


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    path = tmp_path / "cache"
    monkeypatch.setenv("SWALG_CACHE_DIR", str(path))
    return path
