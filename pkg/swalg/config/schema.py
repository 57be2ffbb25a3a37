"""
运行配置 Schema（Pydantic 模型）

优先级：命令行参数 > 配置文件 > 环境变量 > 默认值
"""

import json
import os
from pathlib import Path
from typing import Any, Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

CACHE_DIR_ENV = "SWALG_CACHE_DIR"
DEFAULT_CACHE_DIR = ".swalg_cache"
DEFAULT_SEED = 20240101


class ConfigError(Exception):
    """配置文件缺失、格式错误或取值非法"""


def _default_cache_dir() -> Path:
    return Path(os.environ.get(CACHE_DIR_ENV) or DEFAULT_CACHE_DIR)


class RunConfig(BaseModel):
    """一次运行的全部可调参数"""

    model_config = ConfigDict(extra='forbid', frozen=True)

    cache_dir: Path = Field(default_factory=_default_cache_dir, description="Gröbner 基缓存目录")
    cache_enabled: bool = Field(True, description="是否读写磁盘缓存")
    threads: int = Field(1, ge=1, description="工作进程数")
    memory_budget_mb: int = Field(2048, gt=0, description="zcl 搜索的内存预算（MB）")
    zcl_max_steps: int = Field(5_000_000, gt=0, description="zcl 搜索的张量乘法步数上限")
    output: Literal['text', 'json'] = Field('text', description="输出格式")
    verbosity: Literal['quiet', 'normal', 'verbose'] = 'normal'
    seed: int = Field(DEFAULT_SEED, description="随机验证的种子")
    identity_t_min: Optional[int] = Field(
        None, ge=1, description="恒等式验证的最小 t；缺省时各恒等式从 3 开始，(d) 从 2 开始"
    )
    identity_t_max: int = Field(10, ge=1, description="恒等式验证的最大 t")

    @model_validator(mode='after')
    def check_t_range(self) -> 'RunConfig':
        if self.identity_t_min is not None and self.identity_t_min > self.identity_t_max:
            raise ValueError(
                f"identity_t_min ({self.identity_t_min}) 不能大于 identity_t_max ({self.identity_t_max})"
            )
        return self

    @classmethod
    def _from_data(cls, data: Any, source: Path) -> 'RunConfig':
        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ConfigError(f"配置文件顶层必须是映射: {source}")
        try:
            return cls(**data)
        except ValidationError as e:
            raise ConfigError(f"配置文件 {source} 无效:\n{e}") from e

    @classmethod
    def from_yaml(cls, yaml_path: str) -> 'RunConfig':
        """从 YAML 文件加载配置"""
        path = Path(yaml_path)
        if not path.exists():
            raise ConfigError(f"配置文件不存在: {yaml_path}")
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigError(f"YAML 解析失败: {yaml_path}: {e}") from e
        return cls._from_data(data, path)

    @classmethod
    def from_json(cls, json_path: str) -> 'RunConfig':
        """从 JSON 文件加载配置"""
        path = Path(json_path)
        if not path.exists():
            raise ConfigError(f"配置文件不存在: {json_path}")
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"JSON 解析失败: {json_path}: {e}") from e
        return cls._from_data(data, path)

    @classmethod
    def load(cls, config_path: Optional[str] = None) -> 'RunConfig':
        """按后缀识别文件类型；None 时返回默认配置"""
        if config_path is None:
            return cls()
        suffix = Path(config_path).suffix.lower()
        if suffix in ('.yaml', '.yml'):
            return cls.from_yaml(config_path)
        if suffix == '.json':
            return cls.from_json(config_path)
        raise ConfigError(f"不支持的配置文件格式: {suffix}")

    def merged(self, **overrides: Any) -> 'RunConfig':
        """用非 None 的覆盖值生成新配置（命令行参数优先）"""
        data = self.model_dump()
        data.update({key: value for key, value in overrides.items() if value is not None})
        try:
            return type(self)(**data)
        except ValidationError as e:
            raise ConfigError(f"参数无效:\n{e}") from e

    def ensure_cache_dir(self) -> Path:
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        return self.cache_dir

    def save_yaml(self, output_path: str):
        """保存为 YAML 文件"""
        data = self.model_dump(mode='json')
        with open(output_path, 'w', encoding='utf-8') as f:
            yaml.safe_dump(data, f, allow_unicode=True, default_flow_style=False, sort_keys=False)
