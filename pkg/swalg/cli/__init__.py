"""
cli：命令行前端与汇总报告
"""

from .cli import SwalgCLI, main

__all__ = ["SwalgCLI", "main"]
