"""Разбор аргументов командной строки в объекты поля K и P².

Все ошибки разбора превращаются в InvalidParameters / ParseError,
чтобы CLI завершался с кодом валидации.
"""

import logging

from src.algebra.errors import InvalidParameters
from src.algebra.field import FieldElem, parse_elem
from src.algebra.plinalg import ProjPoint

logger = logging.getLogger(__name__)


def parse_params(raw: str | None) -> list[FieldElem]:
    """Разбирает "2,3,5" или "1/2, eps" в список элементов поля.

    Args:
        raw: Строка через запятую; пустая строка или None — без параметров

    Raises:
        ParseError: Если элемент не является выражением над K
    """
    if raw is None or not raw.strip():
        return []
    values = [parse_elem(part) for part in raw.split(",")]
    logger.debug(f"Параметры разобраны: {[str(v) for v in values]}")
    return values


def parse_point(raw: str | list[str]) -> ProjPoint:
    """Разбирает "a,b,c" или список из трёх строк в точку P².

    Raises:
        InvalidParameters: Если координат не три или все нулевые
    """
    parts = raw.split(",") if isinstance(raw, str) else list(raw)
    if len(parts) != 3:
        raise InvalidParameters(f"Точка P² задаётся тремя координатами, получено {len(parts)}")
    return ProjPoint.of(*parts)
