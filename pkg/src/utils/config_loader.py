"""配置加载器

配置文件是扁平的 YAML 键值文件，每个键对应一个命令行参数（如 ``tfinal``、
``mgrid``、``orders``）。命令行显式给出的参数覆盖文件中的值。
"""

import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml
from dotenv import load_dotenv

from .exceptions import ConfigError
from .error_messages import ErrorMessages


def load_config(config_path: Union[str, Path] = "config.yaml") -> Dict[str, Any]:
    """
    加载配置文件

    Args:
        config_path: 配置文件路径

    Returns:
        Dict: 配置字典（空文件返回空字典）
    """
    # 加载环境变量
    load_dotenv()

    path = Path(config_path)
    if not path.is_file():
        raise ConfigError(ErrorMessages.get("CONFIG_FILE_NOT_FOUND", path=path), path=str(path))

    # 读取 YAML 配置
    with open(path, 'r', encoding='utf-8') as f:
        config = yaml.safe_load(f)

    if config is None:
        return {}
    if not isinstance(config, dict):
        raise ConfigError(ErrorMessages.get("CONFIG_INVALID_VALUE", name=str(path), value=type(config).__name__))
    return config


def load_flat_config(config_path: Union[str, Path]) -> Dict[str, Any]:
    """
    加载扁平键值配置文件

    键名中的 ``-`` 统一替换为 ``_``，值只允许标量或列表。

    Args:
        config_path: 配置文件路径

    Returns:
        Dict: 规范化后的键值
    """
    raw = load_config(config_path)
    flat: Dict[str, Any] = {}
    for key, value in raw.items():
        if isinstance(value, dict):
            raise ConfigError(ErrorMessages.get("CONFIG_NOT_FLAT", name=key), name=key)
        flat[str(key).replace("-", "_")] = value
    return flat


def merge_cli_overrides(file_values: Dict[str, Any], cli_values: Dict[str, Any]) -> Dict[str, Any]:
    """
    合并配置文件与命令行参数

    Args:
        file_values: 配置文件中的值
        cli_values: 命令行参数（未指定的参数为 None）

    Returns:
        Dict: 合并结果，命令行优先
    """
    merged = dict(file_values)
    for key, value in cli_values.items():
        if value is not None:
            merged[key] = value
    return merged


def parse_int_list(value: Any, key: str = "value") -> List[int]:
    """
    解析整数列表，接受 "2,3,4"、[2, 3, 4] 或单个整数

    Args:
        value: 原始值
        key: 配置项名称（用于错误信息）

    Returns:
        List[int]: 整数列表
    """
    if isinstance(value, (list, tuple)):
        items = list(value)
    elif isinstance(value, str):
        items = [item for item in value.split(",") if item.strip()]
    else:
        items = [value]

    try:
        return [int(item) for item in items]
    except (TypeError, ValueError) as exc:
        raise ConfigError(ErrorMessages.get("CONFIG_INVALID_VALUE", name=key, value=value), name=key) from exc


def get_default_workers() -> int:
    """
    从环境变量 FKAC_WORKERS 读取默认并行数

    Returns:
        int: 并行工作线程数（至少为 1）
    """
    load_dotenv()
    raw: Optional[str] = os.getenv("FKAC_WORKERS")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1
