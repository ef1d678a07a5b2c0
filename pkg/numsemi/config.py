#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
numsemi 配置文件
包含各类计算上限、日志与命令行输出的配置信息
"""

import os


def _env_int(name: str, default: int) -> int:
    """读取整数型环境变量，非法值时回退到默认值"""
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


# 计算上限配置
LIMITS_CONFIG = {
    # 动态规划成员表的最大长度（布尔数组元素个数）
    'DP_TABLE_CAP': _env_int('NUMSEMI_DP_TABLE_CAP', 50_000_000),
    # Apéry 集闭式展开的最大元素数
    'APERY_SIZE_CAP': _env_int('NUMSEMI_APERY_SIZE_CAP', 10**6),
    # 间隙恒等式中嵌套求和盒子的最大格点数
    'IDENTITY_BOX_CAP': _env_int('NUMSEMI_IDENTITY_BOX_CAP', 10**6),
    # 命令行打印 Apéry 集时的最大元素数
    'APERY_PRINT_CAP': 10**4,
    # 望远镜排列搜索允许的最大项数（k! 增长）
    'PERMUTATION_SEARCH_MAX_TERMS': 8,
    # 随机抽样构造请求的最大整体重试次数
    'SAMPLE_ATTEMPTS': 1000,
}

# 日志配置
LOGGING_CONFIG = {
    'level': os.environ.get('NUMSEMI_LOG_LEVEL', 'WARNING'),
    'format': '%(log_color)s%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    'file_format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    'file': os.environ.get('NUMSEMI_LOG_FILE'),
    'colors': {
        'DEBUG': 'cyan',
        'INFO': 'green',
        'WARNING': 'yellow',
        'ERROR': 'red',
        'CRITICAL': 'bold_red',
    },
}

# 命令行配置
CLI_CONFIG = {
    'PROG': 'numsemi',
    'JSON_INDENT': 2,
}
