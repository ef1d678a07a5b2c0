#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
numsemi 命令行启动脚本
用法示例:
    python numsemi_cli.py analyze 660,550,352,50,201
    python numsemi_cli.py minimize 660,550,352,902,50,201 --json
"""

from numsemi.cli import main

if __name__ == "__main__":
    main()
