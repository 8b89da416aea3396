"""Основные настройки приложения.

Собирает все настройки из отдельных конфигурационных файлов.
"""

from pydantic import BaseModel

from .logging_config import LoggingSettings
from .oracle_config import OracleSettings


class Settings(BaseModel):
    """Главный класс настроек, объединяющий все конфигурации."""

    logging: LoggingSettings = LoggingSettings()
    oracle: OracleSettings = OracleSettings()


settings = Settings()
