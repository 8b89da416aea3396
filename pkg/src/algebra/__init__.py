"""Алгебраическое ядро: поле K, проективная геометрия, кривые Гессе,
квадратичные алгебры, таблицы классификации и геометрические проверки."""

from .errors import AsregError
from .field import EPS, I, ONE, SQRT3, ZERO, ZETA, FieldElem, parse_elem
from .plinalg import Mat3, ProjPoint, Tensor2
from .qalg import CubicForm, RelationSet

__all__ = [
    "AsregError",
    "EPS",
    "I",
    "ONE",
    "SQRT3",
    "ZERO",
    "ZETA",
    "FieldElem",
    "parse_elem",
    "Mat3",
    "ProjPoint",
    "Tensor2",
    "CubicForm",
    "RelationSet",
]
