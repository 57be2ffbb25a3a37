"""
swalg 命令行入口点

支持通过 python -m swalg.cli 调用
"""

import sys
from .cli import main

if __name__ == '__main__':
    sys.exit(main())
