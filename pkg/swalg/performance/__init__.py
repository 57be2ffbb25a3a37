"""
performance：缓存与并行执行
"""

from .cache import ENGINE_VERSION, BasisCache, LRUCache
from .parallel import run_parallel

__all__ = ["BasisCache", "ENGINE_VERSION", "LRUCache", "run_parallel"]
