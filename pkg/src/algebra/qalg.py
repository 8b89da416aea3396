"""Квадратичные алгебры T(V)/(R), R ⊂ V⊗V, dim R = 3.

Твист A^φ, применение изоморфизма φ⊗φ, матрица мультилинеаризации M(x)
и детерминант, задающий схему точек.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import permutations

from src.algebra.errors import InvalidParameters, SingularMatrix
from src.algebra.field import ZERO, FieldElem, Scalar
from src.algebra.plinalg import BASIS, Mat3, ProjPoint, Tensor2, nullspace, rank, tensor_both, tensor_left

logger = logging.getLogger(__name__)

# Показатели (x, y, z) мономов кубики в порядке deg-lex
CUBIC_MONOMIALS: tuple[tuple[int, int, int], ...] = (
    (3, 0, 0),
    (2, 1, 0),
    (2, 0, 1),
    (1, 2, 0),
    (1, 1, 1),
    (1, 0, 2),
    (0, 3, 0),
    (0, 2, 1),
    (0, 1, 2),
    (0, 0, 3),
)

LinearForm = tuple[FieldElem, FieldElem, FieldElem]


@dataclass(frozen=True)
class RelationSet:
    relations: tuple[Tensor2, Tensor2, Tensor2]

    def __post_init__(self) -> None:
        if len(self.relations) != 3:
            raise InvalidParameters(f"Нужно ровно 3 соотношения, получено {len(self.relations)}")
        if rank([r.entries for r in self.relations], 9) != 3:
            raise InvalidParameters("Соотношения линейно зависимы")

    @classmethod
    def of(cls, *relations: Tensor2 | dict[str, Scalar]) -> RelationSet:
        tensors = tuple(r if isinstance(r, Tensor2) else Tensor2.from_terms(r) for r in relations)
        return cls(tensors)

    def __iter__(self):
        return iter(self.relations)

    def to_json(self) -> list[dict[str, str]]:
        return [{k: str(v) for k, v in r.terms().items()} for r in self.relations]


@dataclass(frozen=True)
class CubicForm:
    """Тернарная кубика; сравнение с другими кубиками — с точностью до скаляра."""

    coeffs: tuple[FieldElem, ...]

    @classmethod
    def zero(cls) -> CubicForm:
        return cls((ZERO,) * 10)

    @classmethod
    def from_terms(cls, terms: dict[str, Scalar]) -> CubicForm:
        """{"xyz": 1, "xxx": -2} → кубика; моном задаётся набором букв."""
        coeffs = [ZERO] * 10
        for word, coeff in terms.items():
            exponent = tuple(word.count(letter) for letter in BASIS)
            if sum(exponent) != 3 or len(word) != 3:
                raise InvalidParameters(f"Моном {word!r} не кубический")
            index = CUBIC_MONOMIALS.index(exponent)
            coeffs[index] = coeffs[index] + FieldElem.coerce(coeff)
        return cls(tuple(coeffs))

    @classmethod
    def from_dict(cls, raw: dict[tuple[int, int, int], FieldElem]) -> CubicForm:
        return cls(tuple(raw.get(m, ZERO) for m in CUBIC_MONOMIALS))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def evaluate(self, p: ProjPoint) -> FieldElem:
        total = ZERO
        for (i, j, k), c in zip(CUBIC_MONOMIALS, self.coeffs):
            if not c.is_zero():
                total = total + c * p[0] ** i * p[1] ** j * p[2] ** k
        return total

    def proportional(self, other: CubicForm) -> bool:
        """Равенство с точностью до ненулевого скаляра (перекрёстное умножение)."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        lead = next(i for i, c in enumerate(self.coeffs) if not c.is_zero())
        a, b = self.coeffs[lead], other.coeffs[lead]
        return all(b * s == a * o for s, o in zip(self.coeffs, other.coeffs))

    def substitute(self, m: Mat3) -> CubicForm:
        """F(m·v): замена координат."""
        rows = [tuple(m[i, j] for j in range(3)) for i in range(3)]
        result: dict[tuple[int, int, int], FieldElem] = {}
        for exponent, c in zip(CUBIC_MONOMIALS, self.coeffs):
            if c.is_zero():
                continue
            factors = [rows[axis] for axis, e in enumerate(exponent) for _ in range(e)]
            for mono, value in _product3(*factors).items():
                result[mono] = result.get(mono, ZERO) + c * value
        return CubicForm.from_dict(result)

    def terms(self) -> dict[str, FieldElem]:
        out: dict[str, FieldElem] = {}
        for exponent, c in zip(CUBIC_MONOMIALS, self.coeffs):
            if c.is_zero():
                continue
            parts = [
                letter if e == 1 else f"{letter}^{e}"
                for letter, e in zip(BASIS, exponent)
                if e
            ]
            out["*".join(parts)] = c
        return out

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"({c})*{m}" for m, c in self.terms().items())


def _product3(a: LinearForm, b: LinearForm, c: LinearForm) -> dict[tuple[int, int, int], FieldElem]:
    out: dict[tuple[int, int, int], FieldElem] = {}
    for i in range(3):
        if a[i].is_zero():
            continue
        for j in range(3):
            if b[j].is_zero():
                continue
            ab = a[i] * b[j]
            for k in range(3):
                if c[k].is_zero():
                    continue
                exponent = [0, 0, 0]
                for axis in (i, j, k):
                    exponent[axis] += 1
                key = tuple(exponent)
                out[key] = out.get(key, ZERO) + ab * c[k]
    return out


def _require_invertible(m: Mat3) -> None:
    if m.det().is_zero():
        raise SingularMatrix("Матрица φ вырождена")


def twist(a: RelationSet, m: Mat3) -> RelationSet:
    """Твист A^φ: соотношения (φ⊗id)(R).

    Raises:
        SingularMatrix: Если m вырождена
    """
    _require_invertible(m)
    return RelationSet(tuple(tensor_left(m, r) for r in a.relations))


def apply_iso(a: RelationSet, m: Mat3) -> RelationSet:
    """Образ R при (φ⊗φ)."""
    _require_invertible(m)
    return RelationSet(tuple(tensor_both(m, r) for r in a.relations))


def relations_equal(a: RelationSet, b: RelationSet) -> bool:
    stacked = [r.entries for r in a.relations] + [r.entries for r in b.relations]
    return rank(stacked, 9) == 3


def left_matrix(a: RelationSet) -> tuple[tuple[LinearForm, ...], ...]:
    """M(x): fᵢ = Σ_k M_{ik} ⊗ x_k, M_{ik} = Σ_j t^{(i)}_{jk} x_j.

    Линейная форма хранится как тройка коэффициентов при x, y, z.
    """
    return tuple(
        tuple(tuple(r.coeff(j, k) for j in range(3)) for k in range(3))
        for r in a.relations
    )


def left_matrix_at(a: RelationSet, p: ProjPoint) -> Mat3:
    """M(p): при фиксированном p решения q уравнений fᵢ(p, q) = 0 — ядро M(p)."""
    return Mat3(
        tuple(
            tuple(sum((r.coeff(j, k) * p[j] for j in range(3)), ZERO) for k in range(3))
            for r in a.relations
        )
    )


def kernel_point(m: Mat3) -> ProjPoint | None:
    """Точка ядра матрицы ранга 2, иначе None."""
    basis = nullspace(m.rows, 3)
    if len(basis) != 1:
        return None
    return ProjPoint.from_vector(basis[0])


def point_scheme_det(a: RelationSet) -> CubicForm:
    """det M(x), разложенный точно (формула Лейбница)."""
    forms = left_matrix(a)
    result: dict[tuple[int, int, int], FieldElem] = {}
    for perm in permutations(range(3)):
        inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
        sign = -1 if inversions % 2 else 1
        for mono, value in _product3(*(forms[i][perm[i]] for i in range(3))).items():
            result[mono] = result.get(mono, ZERO) + sign * value
    cubic = CubicForm.from_dict(result)
    logger.debug(f"point_scheme_det: {cubic}")
    return cubic
