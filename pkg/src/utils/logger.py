import logging
import sys
from datetime import datetime, timezone

import orjson
from pythonjsonlogger import jsonlogger

from src.config.settings import settings

# Поля, которые команды передают через extra=...
_CONTEXT_FIELDS = ("command", "algebra", "sample_count")

_logging_setup_done = False


class AsregJsonFormatter(jsonlogger.JsonFormatter):
    """Однострочный JSON в stderr с контекстом команды."""

    def add_fields(self, log_record, record, message_dict):
        super().add_fields(log_record, record, message_dict)
        log_record["timestamp"] = datetime.now(timezone.utc).isoformat()
        log_record["level"] = record.levelname
        log_record["logger"] = record.name
        log_record["function"] = record.funcName
        for name in _CONTEXT_FIELDS:
            if hasattr(record, name):
                log_record[name] = getattr(record, name)

    def jsonify_log_record(self, log_record):
        return orjson.dumps(log_record, default=str).decode()


def setup_logging(level: str | None = None):
    """Настраивает логирование один раз за процесс.

    Логи идут в stderr: stdout занят JSON-выводом команд.

    Args:
        level: Уровень, перекрывающий LOG_LEVEL
    """
    global _logging_setup_done

    if _logging_setup_done:
        return

    log_level = level or settings.logging.log_level

    handler = logging.StreamHandler(sys.stderr)
    if settings.logging.log_format == "json":
        handler.setFormatter(AsregJsonFormatter("%(message)s"))
    else:
        handler.setFormatter(
            logging.Formatter(
                "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
            )
        )

    root_logger = logging.getLogger()
    root_logger.handlers.clear()
    root_logger.setLevel(getattr(logging, log_level.upper(), logging.WARNING))
    root_logger.addHandler(handler)

    _logging_setup_done = True
