"""Модели для входящих дескрипторов алгебр."""

from typing import Any, Literal

import orjson
from pydantic import BaseModel, Field, ValidationError, field_validator

from src.algebra.ec import EcDescriptor
from src.algebra.errors import InvalidParameters
from src.algebra.tables import AlgebraType, TypedAlgebra
from src.utils.validators import parse_point

# S'1 → Sp1, T' → Tp
_TAG_ALIASES = {"S'1": "Sp1", "S'2": "Sp2", "T'": "Tp"}


class TableDescriptor(BaseModel):
    """Алгебра из таблицы классификации: {"type": "S1", "params": ["2", "3", "5"]}."""

    type: str = Field(..., min_length=1, description="Тег строки таблицы")
    params: list[str] = Field(default_factory=list, description="Параметры α, β, γ")

    @field_validator("type")
    @classmethod
    def validate_type(cls, v: str) -> str:
        """Нормализует тег и проверяет, что такая строка таблицы есть."""
        tag = _TAG_ALIASES.get(v.strip(), v.strip())
        try:
            AlgebraType(tag)
        except ValueError as exc:
            raise ValueError(f"Неизвестный тип алгебры: {v}") from exc
        return tag

    def to_algebra(self) -> TypedAlgebra:
        return TypedAlgebra.of(self.type, *self.params)


class EcDescriptorModel(BaseModel):
    """Алгебра типа EC: {"type": "EC", "point": ["1", "2", "3"], "i": 1}."""

    type: Literal["EC"] = "EC"
    point: list[str] = Field(..., min_length=3, max_length=3)
    i: int = 0

    def to_descriptor(self) -> EcDescriptor:
        return EcDescriptor.of(parse_point(self.point), self.i)


Descriptor = TableDescriptor | EcDescriptorModel


def parse_descriptor(raw: str | dict[str, Any]) -> Descriptor:
    """Разбирает JSON-дескриптор; тип "EC" даёт EcDescriptorModel.

    Raises:
        InvalidParameters: Если JSON некорректен или не проходит валидацию
    """
    if isinstance(raw, str):
        try:
            raw = orjson.loads(raw)
        except orjson.JSONDecodeError as exc:
            raise InvalidParameters(f"Дескриптор не является JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise InvalidParameters("Дескриптор должен быть JSON-объектом")
    try:
        if raw.get("type") == "EC":
            return EcDescriptorModel.model_validate(raw)
        return TableDescriptor.model_validate(raw)
    except ValidationError as exc:
        raise InvalidParameters(f"Некорректный дескриптор: {exc.errors()[0]['msg']}") from exc
