"""Точная арифметика в круговом поле K = Q(ζ), ζ — первообразный корень 12-й степени из 1.

Элемент хранится как c₀ + c₁ζ + c₂ζ² + c₃ζ³ с рациональными коэффициентами
по модулю минимального многочлена ζ⁴ − ζ² + 1. В K лежат все константы,
которые встречаются в конструкциях: ε = ζ² − 1, √3 = 2ζ − ζ³, i = ζ³.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import cached_property
from typing import Union

from src.algebra.errors import DivisionByZero, ParseError
from src.config.constants import MAX_PARSE_EXPONENT

Scalar = Union[int, Fraction, "FieldElem"]

DEGREE = 4

# ζ ↦ ζᵏ, k ∈ (Z/12)^× \ {1}: остальные вложения K
_GALOIS_EXPONENTS = (5, 7, 11)


def _reduce(raw: list[Fraction]) -> tuple[Fraction, ...]:
    """Сводит многочлен от ζ к степени < 4 по правилу ζᵏ = ζᵏ⁻² − ζᵏ⁻⁴."""
    coeffs = list(raw)
    for k in range(len(coeffs) - 1, DEGREE - 1, -1):
        top = coeffs[k]
        if top:
            coeffs[k - 2] += top
            coeffs[k - 4] -= top
        coeffs[k] = Fraction(0)
    coeffs += [Fraction(0)] * (DEGREE - len(coeffs))
    return tuple(coeffs[:DEGREE])


class FieldElem:
    """Элемент поля K в каноническом виде.

    Значения неизменяемы и хэшируемы; арифметика принимает int и Fraction
    наравне с FieldElem.
    """

    def __init__(self, coeffs: tuple | list = (0,)) -> None:
        values = [Fraction(c) for c in coeffs]
        if len(values) > DEGREE:
            self._coeffs = _reduce(values)
        else:
            self._coeffs = tuple(values + [Fraction(0)] * (DEGREE - len(values)))

    @classmethod
    def coerce(cls, value: Scalar) -> FieldElem:
        if isinstance(value, FieldElem):
            return value
        if isinstance(value, (int, Fraction)):
            return cls((value,))
        raise TypeError(f"Нельзя привести {type(value).__name__} к элементу поля")

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} не является рациональным числом")
        return self._coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"FieldElem({self})"

    def __str__(self) -> str:
        return format_elem(self)

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self._coeffs[0])
        return hash(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self._coeffs[0] == other
        if isinstance(other, FieldElem):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __add__(self, other: Scalar) -> FieldElem:
        try:
            rhs = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        return FieldElem(tuple(a + b for a, b in zip(self._coeffs, rhs._coeffs)))

    def __radd__(self, other: Scalar) -> FieldElem:
        return self + other

    def __neg__(self) -> FieldElem:
        return FieldElem(tuple(-a for a in self._coeffs))

    def __sub__(self, other: Scalar) -> FieldElem:
        try:
            rhs = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Scalar) -> FieldElem:
        return (-self) + other

    def __mul__(self, other: Scalar) -> FieldElem:
        if isinstance(other, (int, Fraction)):
            return FieldElem(tuple(a * other for a in self._coeffs))
        if not isinstance(other, FieldElem):
            return NotImplemented
        raw = [Fraction(0)] * (2 * DEGREE - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                if b:
                    raw[i + j] += a * b
        return FieldElem(_reduce(raw))

    def __rmul__(self, other: Scalar) -> FieldElem:
        return self * other

    def conjugate(self, k: int) -> FieldElem:
        """Образ при автоморфизме Галуа ζ ↦ ζᵏ."""
        image = ZETA ** (k % 12)
        result = ZERO
        power = ONE
        for c in self._coeffs:
            if c:
                result = result + power * c
            power = power * image
        return result

    @cached_property
    def norm(self) -> Fraction:
        """Норма N(a) = a·σ₅(a)·σ₇(a)·σ₁₁(a) ∈ Q."""
        product = self
        for k in _GALOIS_EXPONENTS:
            product = product * self.conjugate(k)
        return product.rational()

    def inv(self) -> FieldElem:
        if self.is_zero():
            raise DivisionByZero("Обращение нулевого элемента поля")
        if self.is_rational():
            return FieldElem((1 / self._coeffs[0],))
        cofactor = ONE
        for k in _GALOIS_EXPONENTS:
            cofactor = cofactor * self.conjugate(k)
        return cofactor * (1 / self.norm)

    def __truediv__(self, other: Scalar) -> FieldElem:
        try:
            rhs = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self * rhs.inv()

    def __rtruediv__(self, other: Scalar) -> FieldElem:
        return FieldElem.coerce(other) * self.inv()

    def __pow__(self, exponent: int) -> FieldElem:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result


ZERO = FieldElem((0,))
ONE = FieldElem((1,))
ZETA = FieldElem((0, 1))


def add(a: Scalar, b: Scalar) -> FieldElem:
    return FieldElem.coerce(a) + b


def sub(a: Scalar, b: Scalar) -> FieldElem:
    return FieldElem.coerce(a) - b


def mul(a: Scalar, b: Scalar) -> FieldElem:
    return FieldElem.coerce(a) * b


def neg(a: Scalar) -> FieldElem:
    return -FieldElem.coerce(a)


def inv(a: Scalar) -> FieldElem:
    return FieldElem.coerce(a).inv()


def const_eps() -> FieldElem:
    """Первообразный кубический корень из единицы ε = ζ² − 1."""
    return EPS


def const_sqrt3() -> FieldElem:
    return SQRT3


def const_i() -> FieldElem:
    return I


EPS = FieldElem((-1, 0, 1))
SQRT3 = FieldElem((0, 2, 0, -1))
I = FieldElem((0, 0, 0, 1))

_NAMES = {
    "z": ZETA,
    "zeta": ZETA,
    "eps": EPS,
    "sqrt3": SQRT3,
    "i": I,
}


def _fraction_text(value: Fraction) -> str:
    return str(value)


def format_elem(a: FieldElem) -> str:
    """Каноническая строка "c0 + c1*z + c2*z^2 + c3*z^3" без нулевых членов."""
    terms: list[tuple[Fraction, str]] = []
    for degree, c in enumerate(a.coeffs):
        if not c:
            continue
        monomial = "" if degree == 0 else ("z" if degree == 1 else f"z^{degree}")
        terms.append((c, monomial))
    if not terms:
        return "0"
    parts: list[str] = []
    for index, (c, monomial) in enumerate(terms):
        magnitude = abs(c)
        if monomial and magnitude == 1:
            body = monomial
        elif monomial:
            body = f"{_fraction_text(magnitude)}*{monomial}"
        else:
            body = _fraction_text(magnitude)
        if index == 0:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


def _evaluate(node: ast.AST) -> FieldElem:
    if isinstance(node, ast.Expression):
        return _evaluate(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return FieldElem((node.value,))
    if isinstance(node, ast.Name):
        if node.id not in _NAMES:
            raise ParseError(f"Неизвестное имя в записи элемента поля: {node.id}")
        return _NAMES[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        operand = _evaluate(node.operand)
        return -operand if isinstance(node.op, ast.USub) else operand
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            exponent = node.right
            sign = 1
            if isinstance(exponent, ast.UnaryOp) and isinstance(exponent.op, ast.USub):
                sign, exponent = -1, exponent.operand
            if not (isinstance(exponent, ast.Constant) and isinstance(exponent.value, int)):
                raise ParseError("Показатель степени должен быть целым числом")
            if exponent.value > MAX_PARSE_EXPONENT:
                raise ParseError(f"Показатель степени больше {MAX_PARSE_EXPONENT}: {exponent.value}")
            return _evaluate(node.left) ** (sign * exponent.value)
        left, right = _evaluate(node.left), _evaluate(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left / right
    raise ParseError(f"Недопустимая конструкция в записи элемента поля: {ast.dump(node)}")


def parse_elem(text: str | int | Fraction | FieldElem) -> FieldElem:
    """Разбирает "n/d", "c0 + c1*z + c2*z^2 + c3*z^3" и сокращения eps, sqrt3, i.

    Raises:
        ParseError: Если строка не является выражением над K
        DivisionByZero: Если в выражении есть деление на ноль
    """
    if not isinstance(text, str):
        return FieldElem.coerce(text)
    source = text.strip().replace("^", "**")
    if not source:
        raise ParseError("Пустая запись элемента поля")
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"Не удалось разобрать элемент поля: {text!r}") from exc
    return _evaluate(tree)
