"""
config：运行配置（YAML/JSON + 环境变量 + 命令行覆盖）
"""

from .schema import CACHE_DIR_ENV, DEFAULT_SEED, ConfigError, RunConfig

__all__ = ["CACHE_DIR_ENV", "ConfigError", "DEFAULT_SEED", "RunConfig"]
