"""日志工具"""

import logging
import os
import sys
from typing import Optional, Union

import colorlog

ROOT_LOGGER_NAME = "fkac"


def setup_logger(
    name: str = ROOT_LOGGER_NAME,
    level: Optional[Union[int, str]] = None,
    log_file: Optional[str] = None
) -> logging.Logger:
    """
    设置日志记录器

    Args:
        name: 日志记录器名称
        level: 日志级别，缺省时读取环境变量 FKAC_LOG_LEVEL（默认 INFO）
        log_file: 日志文件路径（可选），缺省时读取 FKAC_LOG_FILE

    Returns:
        Logger: 配置好的日志记录器
    """
    if level is None:
        level = os.getenv("FKAC_LOG_LEVEL", "INFO")
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.INFO
    log_file = log_file or os.getenv("FKAC_LOG_FILE")

    logger = logging.getLogger(name)
    logger.setLevel(level)

    # 清除现有处理器
    logger.handlers.clear()

    # 控制台处理器（彩色，写 stderr，stdout 留给结果表）
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(colorlog.ColoredFormatter(
        '%(log_color)s%(asctime)s - %(name)s - %(levelname)s%(reset)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S',
        log_colors={
            'DEBUG': 'cyan',
            'INFO': 'green',
            'WARNING': 'yellow',
            'ERROR': 'red',
            'CRITICAL': 'red,bg_white',
        }
    ))
    logger.addHandler(console_handler)

    # 文件处理器（如果指定）
    if log_file:
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        ))
        logger.addHandler(file_handler)

    return logger


def get_logger(suffix: str) -> logging.Logger:
    """
    获取 fkac 命名空间下的子日志记录器

    Args:
        suffix: 子名称，如 "stepper"

    Returns:
        Logger: 子日志记录器
    """
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{suffix}")
