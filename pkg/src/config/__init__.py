"""Конфигурация приложения."""

from .settings import settings, Settings
from .constants import *
from .logging_config import LoggingSettings
from .oracle_config import OracleSettings

__all__ = [
    "settings",
    "Settings",
    "LoggingSettings",
    "OracleSettings",
]
