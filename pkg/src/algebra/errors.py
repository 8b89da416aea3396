"""Исключения алгебраического ядра.

Каждое исключение несёт машиночитаемый код `code`, который CLI
кладёт в JSON-объект ошибки. Ошибки валидации входа завершают CLI
с кодом 1, нарушения внутренних инвариантов с кодом 2.
"""

from __future__ import annotations


class AsregError(Exception):
    """Базовое исключение библиотеки."""

    code: str = "AsregError"
    internal: bool = False

    def __init__(self, message: str = "") -> None:
        super().__init__(message or self.code)
        self.message = message or self.code

    def to_dict(self) -> dict[str, str]:
        return {"error": self.code, "message": self.message}


class DivisionByZero(AsregError, ZeroDivisionError):
    code = "DivisionByZero"


class SingularMatrix(AsregError):
    code = "SingularMatrix"


class TorsionPoint(AsregError):
    """Точка лежит на одной из прямых xyz = 0 (abc = 0)."""

    code = "TorsionPoint"


class SingularHesse(AsregError):
    """λ³ = 1: кубика Гессе вырождена."""

    code = "SingularHesse"


class CanonicalFormRequired(AsregError):
    """j ∈ {0, 1728}, но λ не приведено к 0 или 1+√3."""

    code = "CanonicalFormRequired"


class CurveMismatch(AsregError):
    code = "CurveMismatch"


class InvalidParameters(AsregError):
    code = "InvalidParameters"


class NotOnCurve(AsregError):
    code = "NotOnCurve"


class ParseError(AsregError):
    code = "ParseError"


class SamplingExhausted(AsregError):
    code = "SamplingExhausted"
    internal = True


class WrongDimension(AsregError):
    """Пространство соотношений из (G2) не трёхмерно."""

    code = "WrongDimension"
    internal = True

    def __init__(self, dimension: int, message: str = "") -> None:
        super().__init__(
            message or f"Ожидалось 3-мерное пространство соотношений, получено {dimension}"
        )
        self.dimension = dimension

    def to_dict(self) -> dict[str, str]:
        payload = super().to_dict()
        payload["dimension"] = str(self.dimension)
        return payload


class InvariantBreach(AsregError):
    code = "InvariantBreach"
    internal = True
