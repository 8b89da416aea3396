"""Вывод результатов команд и преобразование ошибок в коды выхода."""

import functools
import logging
from enum import Enum
from typing import Callable

import orjson
import typer
from pydantic import BaseModel
from rich.console import Console

from src.algebra.errors import AsregError
from src.config.constants import EXIT_INTERNAL, EXIT_VALIDATION, OUTPUT_JSON, OUTPUT_PRETTY
from src.models import ErrorResponse

logger = logging.getLogger(__name__)


class OutputMode(str, Enum):
    json = OUTPUT_JSON
    pretty = OUTPUT_PRETTY


def render(model: BaseModel, output: OutputMode = OutputMode.json) -> str:
    """Сериализует модель ответа; ключи отсортированы, None отброшены."""
    payload = model.model_dump(by_alias=True, exclude_none=True)
    option = orjson.OPT_SORT_KEYS
    if output == OutputMode.pretty:
        option |= orjson.OPT_INDENT_2
    return orjson.dumps(payload, option=option).decode()


def emit(model: BaseModel, output: OutputMode = OutputMode.json) -> None:
    text = render(model, output)
    if output == OutputMode.pretty:
        Console(soft_wrap=True).print_json(text, sort_keys=True)
    else:
        typer.echo(text)


def _error_response(exc: AsregError) -> ErrorResponse:
    return ErrorResponse(error=exc.code, message=exc.message, dimension=getattr(exc, "dimension", None))


def handle_errors(func: Callable) -> Callable:
    """Переводит AsregError в JSON-объект ошибки и код выхода 1 или 2.

    Непредвиденные исключения считаются нарушением инварианта (код 2).
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        output = kwargs.get("output", OutputMode.json)
        context = {"command": func.__name__}
        try:
            return func(*args, **kwargs)
        except AsregError as exc:
            if exc.internal:
                logger.error(f"Нарушен внутренний инвариант: {exc.message}", exc_info=True, extra=context)
            else:
                logger.info(f"Ошибка валидации {exc.code}: {exc.message}", extra=context)
            emit(_error_response(exc), output)
            raise typer.Exit(EXIT_INTERNAL if exc.internal else EXIT_VALIDATION)
        except (typer.Exit, typer.Abort):
            raise
        except Exception as exc:
            logger.error(f"Непредвиденная ошибка: {exc}", exc_info=True, extra=context)
            emit(ErrorResponse(error="InvariantBreach", message=str(exc)), output)
            raise typer.Exit(EXIT_INTERNAL)

    return wrapper
