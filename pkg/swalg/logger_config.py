"""
# 在其他文件中的使用示例：
---
########################### 日志设置 ################################
from swalg.logger_config import get_module_logger
logger = get_module_logger()
#####################################################################
---

日志目录由环境变量 SWALG_LOG_DIR 控制（默认 logs），设为空字符串则只输出到控制台。
"""
import inspect
import logging
import os
import threading
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Dict, Optional

LOG_DIR_ENV = "SWALG_LOG_DIR"

_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s'


class LoggerManager:
    """日志管理器：统一配置和管理所有模块的日志"""

    def __init__(self, log_dir: Optional[str] = "logs", default_level=logging.INFO,
                 console_level=logging.WARNING, max_bytes=5 * 1024 * 1024, backup_count=5):
        """
        Args:
            log_dir: 日志文件目录；None 表示不写文件
            default_level: 默认文件日志级别
            console_level: 控制台日志级别
            max_bytes: 单个日志文件最大字节数
            backup_count: 保留的备份文件数量
        """
        self.log_dir = Path(log_dir) if log_dir else None
        self.default_level = default_level
        self.console_level = console_level
        self.max_bytes = max_bytes
        self.backup_count = backup_count
        self.loggers: Dict[str, logging.Logger] = {}
        self._lock = threading.Lock()

    def get_logger(self, module_name: str, level: Optional[int] = None) -> logging.Logger:
        """为指定模块获取专用 logger（文件名即模块名）"""
        with self._lock:
            if module_name in self.loggers:
                return self.loggers[module_name]

            logger = logging.getLogger(module_name)
            logger.setLevel(min(level or self.default_level, self.console_level))
            logger.propagate = False

            if not logger.handlers:
                formatter = logging.Formatter(_FORMAT, datefmt='%Y-%m-%d %H:%M:%S')

                if self.log_dir is not None:
                    # 首次请求时才创建目录
                    self.log_dir.mkdir(parents=True, exist_ok=True)
                    file_handler = RotatingFileHandler(
                        self.log_dir / f"{module_name}.log",
                        maxBytes=self.max_bytes,
                        backupCount=self.backup_count,
                        encoding='utf-8',
                    )
                    file_handler.setLevel(level or self.default_level)
                    file_handler.setFormatter(formatter)
                    logger.addHandler(file_handler)

                console_handler = logging.StreamHandler()
                console_handler.setLevel(self.console_level)
                console_handler.setFormatter(formatter)
                logger.addHandler(console_handler)

            self.loggers[module_name] = logger
            return logger

    def set_console_level(self, level: int):
        """设置控制台输出级别"""
        self.console_level = level
        for logger in self.loggers.values():
            logger.setLevel(min(self.default_level, level))
            for handler in logger.handlers:
                if isinstance(handler, logging.StreamHandler) and not isinstance(handler, logging.FileHandler):
                    handler.setLevel(level)


log_manager = LoggerManager(log_dir=os.environ.get(LOG_DIR_ENV, "logs"))


def get_module_logger(module_name: Optional[str] = None) -> logging.Logger:
    """
    便捷函数：获取模块 logger
    如果不指定 module_name，则使用调用者的模块名
    """
    if module_name is None:
        frame = inspect.currentframe().f_back
        module_name = frame.f_globals.get('__name__', 'unknown')
        if module_name == '__main__':
            module_name = 'main'

    return log_manager.get_logger(module_name)
