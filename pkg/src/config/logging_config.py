"""Настройки логирования."""

from typing import Literal

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class LoggingSettings(BaseSettings):
    """Уровень и формат логов (LOG_LEVEL, LOG_FORMAT); по умолчанию только предупреждения."""

    log_level: str = "WARNING"
    log_format: Literal["json", "text"] = "json"
    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )
