"""Настройки геометрической проверки."""

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from .constants import DEFAULT_RANDOM_SEED, DEFAULT_SAMPLE_COUNT

load_dotenv()


class OracleSettings(BaseSettings):
    """Размер выборки, зерно генератора и число потоков для (G2)/(G1)."""

    sample_count: int = Field(default=DEFAULT_SAMPLE_COUNT, ge=1)
    random_seed: int = DEFAULT_RANDOM_SEED
    workers: int = Field(default=1, ge=1)
    model_config = SettingsConfigDict(
        env_prefix="ASREG_ORACLE_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )
