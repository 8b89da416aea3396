"""Утилиты: логирование и разбор аргументов CLI."""

from .logger import setup_logging
from .validators import parse_params, parse_point

__all__ = [
    "setup_logging",
    "parse_params",
    "parse_point",
]
