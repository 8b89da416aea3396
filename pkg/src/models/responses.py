"""Модели для исходящих ответов.

Все числа — строки с точными элементами поля, не float.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class RelationSetResponse(BaseModel):
    """Три соотношения в разреженном виде {"x*y": "коэффициент"}."""

    algebra: str
    relations: list[dict[str, str]]
    regularity: Optional[str] = None


class PointResponse(BaseModel):
    point: list[str]


class PointListResponse(BaseModel):
    points: list[list[str]]


class ValueResponse(BaseModel):
    value: str


class FlagResponse(BaseModel):
    value: bool


class MatrixResponse(BaseModel):
    matrix: list[list[str]]
    order: int


class CubicResponse(BaseModel):
    algebra: str
    cubic: dict[str, str]
    identically_zero: bool


class Witness(BaseModel):
    """Свидетель решения: перестановка координат или элемент орбиты (l, r)."""

    matrix: Optional[list[list[str]]] = None
    l: Optional[int] = None
    r: Optional[list[str]] = None


class DecisionResponse(BaseModel):
    isomorphic: Optional[bool] = None
    equivalent: Optional[bool] = None
    witness: Optional[Witness] = None


class NormalFormResponse(BaseModel):
    algebra: str
    normal_form: str
    descriptor: dict
    relations: list[dict[str, str]]


class G1EntryResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    point: list[str]
    check: str
    passed: bool = Field(..., serialization_alias="pass")
    detail: str = ""


class G1ReportResponse(BaseModel):
    """Отчёт (G1): выборочное свидетельство, а не доказательство."""

    label: str = "sampled evidence"
    verdict: str
    entries: list[G1EntryResponse]


class ErrorResponse(BaseModel):
    error: str
    message: str
    dimension: Optional[int] = None


class G2Response(BaseModel):
    """Соотношения, восстановленные по (G2), и их сравнение с построением."""

    algebra: str
    family: str
    sample_count: int
    relations: list[dict[str, str]]
    matches_construction: bool
