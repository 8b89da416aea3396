"""Проективные точки, матрицы 3×3 и тензоры V⊗V над полем K.

Соглашения:
- столбец j матрицы m — образ базисного вектора x_j;
- тензор Σ t_{jk} x_j⊗x_k хранится как матрица T, строка — первый
  множитель, столбец — второй;
- (m⊗id)(g) = M·T, (m⊗m)(g) = M·T·Mᵀ, g(p, q) = pᵀ·T·q.
Отсюда g((m⊗id)·, ·)(p, q) = g(mᵀp, q): двойственное отображение действует
на координатах точек транспонированной матрицей.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from src.algebra.errors import InvalidParameters, SingularMatrix
from src.algebra.field import ONE, ZERO, FieldElem, Scalar, parse_elem

logger = logging.getLogger(__name__)

BASIS = ("x", "y", "z")


def _elems(values: Iterable[Scalar | str]) -> tuple[FieldElem, ...]:
    return tuple(parse_elem(v) for v in values)


@dataclass(frozen=True)
class ProjPoint:
    """Точка P²(K) в каноническом виде: первая ненулевая координата равна 1."""

    coords: tuple[FieldElem, FieldElem, FieldElem]

    @classmethod
    def of(cls, *coords: Scalar | str) -> ProjPoint:
        values = _elems(coords)
        if len(values) != 3:
            raise InvalidParameters(f"Точка P² задаётся тремя координатами, получено {len(values)}")
        return cls.from_vector(values)

    @classmethod
    def from_vector(cls, vector: Sequence[FieldElem]) -> ProjPoint:
        lead = next((c for c in vector if not c.is_zero()), None)
        if lead is None:
            raise InvalidParameters("Нулевой вектор не задаёт точку P²")
        scale = lead.inv()
        return cls(tuple(c * scale for c in vector))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index: int) -> FieldElem:
        return self.coords[index]

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coords) + ")"

    def sort_key(self) -> tuple:
        return tuple(tuple(c.coeffs) for c in self.coords)


@dataclass(frozen=True)
class Mat3:
    rows: tuple[tuple[FieldElem, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[Scalar | str]]) -> Mat3:
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise InvalidParameters("Матрица должна иметь размер 3×3")
        return cls(tuple(_elems(r) for r in rows))

    @classmethod
    def identity(cls) -> Mat3:
        return cls.diag(1, 1, 1)

    @classmethod
    def diag(cls, a: Scalar, b: Scalar, c: Scalar) -> Mat3:
        return cls.of([[a, 0, 0], [0, b, 0], [0, 0, c]])

    @classmethod
    def permutation(cls, images: Sequence[int]) -> Mat3:
        """Матрица перестановки базиса x_j ↦ x_{images[j]}."""
        entries = [[0] * 3 for _ in range(3)]
        for j, target in enumerate(images):
            entries[target][j] = 1
        return cls.of(entries)

    def __getitem__(self, index: tuple[int, int]) -> FieldElem:
        i, j = index
        return self.rows[i][j]

    def __mul__(self, other: Mat3) -> Mat3:
        return Mat3(
            tuple(
                tuple(
                    sum((self.rows[i][k] * other.rows[k][j] for k in range(3)), ZERO)
                    for j in range(3)
                )
                for i in range(3)
            )
        )

    def scale(self, factor: Scalar) -> Mat3:
        return Mat3(tuple(tuple(a * factor for a in row) for row in self.rows))

    def transpose(self) -> Mat3:
        return Mat3(tuple(tuple(self.rows[i][j] for i in range(3)) for j in range(3)))

    def det(self) -> FieldElem:
        r = self.rows
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    def inverse(self) -> Mat3:
        d = self.det()
        if d.is_zero():
            raise SingularMatrix("Матрица вырождена")
        r = self.rows
        cof = [[ZERO] * 3 for _ in range(3)]
        for i, j in product(range(3), range(3)):
            minor = [[r[a][b] for b in range(3) if b != j] for a in range(3) if a != i]
            value = minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0]
            cof[i][j] = value if (i + j) % 2 == 0 else -value
        inv_det = d.inv()
        return Mat3(tuple(tuple(cof[j][i] * inv_det for j in range(3)) for i in range(3)))

    def power(self, n: int) -> Mat3:
        if n < 0:
            return self.inverse().power(-n)
        result = Mat3.identity()
        for _ in range(n):
            result = result * self
        return result

    def is_scalar(self) -> bool:
        r = self.rows
        off_diagonal = all(r[i][j].is_zero() for i in range(3) for j in range(3) if i != j)
        return off_diagonal and r[0][0] == r[1][1] == r[2][2] and not r[0][0].is_zero()

    def vector(self, v: Sequence[FieldElem]) -> tuple[FieldElem, ...]:
        return tuple(sum((self.rows[i][k] * v[k] for k in range(3)), ZERO) for i in range(3))


def projective_order(m: Mat3, limit: int = 24) -> int:
    """Порядок класса m в PGL₃(K) (наименьшее n ≥ 1 с mⁿ скалярной)."""
    power = m
    for n in range(1, limit + 1):
        if power.is_scalar():
            return n
        power = power * m
    raise InvalidParameters(f"Порядок матрицы в PGL₃ больше {limit}")


def apply(m: Mat3, p: ProjPoint) -> ProjPoint:
    """Образ точки под действием PGL₃: координатный вектор M·p."""
    if m.det().is_zero():
        raise SingularMatrix("Нельзя применить вырожденную матрицу к точке")
    return ProjPoint.from_vector(m.vector(p.coords))


@dataclass(frozen=True)
class Tensor2:
    """Элемент V⊗V: коэффициенты t_{jk} при x_j⊗x_k, порядок (xx, xy, xz, yx, ..., zz)."""

    entries: tuple[FieldElem, ...]

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[FieldElem]]) -> Tensor2:
        return cls(tuple(rows[j][k] for j in range(3) for k in range(3)))

    @classmethod
    def from_terms(cls, terms: dict[str, Scalar]) -> Tensor2:
        """Собирает тензор из словаря {"xy": коэффициент, ...}."""
        entries = [ZERO] * 9
        for monomial, coeff in terms.items():
            j, k = (BASIS.index(letter) for letter in monomial)
            entries[3 * j + k] = entries[3 * j + k] + FieldElem.coerce(coeff)
        return cls(tuple(entries))

    @classmethod
    def zero(cls) -> Tensor2:
        return cls((ZERO,) * 9)

    def coeff(self, j: int, k: int) -> FieldElem:
        return self.entries[3 * j + k]

    def matrix(self) -> Mat3:
        return Mat3(tuple(tuple(self.coeff(j, k) for k in range(3)) for j in range(3)))

    def __add__(self, other: Tensor2) -> Tensor2:
        return Tensor2(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Tensor2) -> Tensor2:
        return Tensor2(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, factor: Scalar) -> Tensor2:
        return Tensor2(tuple(a * factor for a in self.entries))

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.entries)

    def terms(self) -> dict[str, FieldElem]:
        """Разреженное представление {"x*y": коэффициент}."""
        return {
            f"{BASIS[j]}*{BASIS[k]}": self.coeff(j, k)
            for j in range(3)
            for k in range(3)
            if not self.coeff(j, k).is_zero()
        }


def evaluate_raw(g: Tensor2, p: Sequence[FieldElem], q: Sequence[FieldElem]) -> FieldElem:
    total = ZERO
    for j in range(3):
        if p[j].is_zero():
            continue
        for k in range(3):
            t = g.entries[3 * j + k]
            if not t.is_zero() and not q[k].is_zero():
                total = total + t * p[j] * q[k]
    return total


def evaluate(g: Tensor2, p: ProjPoint, q: ProjPoint) -> FieldElem:
    """Значение g(p, q) на канонических представителях.

    Само значение зависит от нормировки, корректен только вердикт ноль/не ноль.
    """
    return evaluate_raw(g, p.coords, q.coords)


def tensor_left(m: Mat3, g: Tensor2) -> Tensor2:
    """(m⊗id)(g)."""
    return Tensor2.from_matrix((m * g.matrix()).rows)


def tensor_both(m: Mat3, g: Tensor2) -> Tensor2:
    """(m⊗m)(g)."""
    return Tensor2.from_matrix((m * g.matrix() * m.transpose()).rows)


def row_echelon(rows: Sequence[Sequence[FieldElem]], width: int) -> tuple[list[list[FieldElem]], list[int]]:
    """Ступенчатый вид без дробей (схема Барейса) и список ведущих столбцов.

    Каждый шаг заменяет строку на pivot·row − factor·pivot_row и делит
    на предыдущий ведущий элемент; деление точное.
    """
    m = [list(r) for r in rows if any(not c.is_zero() for c in r)]
    pivots: list[int] = []
    prev = ONE
    rank = 0
    for col in range(width):
        pivot_row = next((i for i in range(rank, len(m)) if not m[i][col].is_zero()), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, len(m)):
            factor = m[i][col]
            m[i] = [(pivot * m[i][c] - factor * m[rank][c]) / prev for c in range(width)]
        prev = pivot
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return m[:rank], pivots


def rank(rows: Sequence[Sequence[FieldElem]], width: int) -> int:
    return len(row_echelon(rows, width)[1])


def nullspace(rows: Sequence[Sequence[FieldElem]], width: int = 9) -> list[tuple[FieldElem, ...]]:
    """Базис правого ядра матрицы, по одному вектору на свободный столбец."""
    echelon, pivots = row_echelon(rows, width)
    free = [c for c in range(width) if c not in pivots]
    basis: list[tuple[FieldElem, ...]] = []
    for f in free:
        solution = [ZERO] * width
        solution[f] = ONE
        for r in range(len(pivots) - 1, -1, -1):
            col = pivots[r]
            acc = sum((echelon[r][c] * solution[c] for c in range(col + 1, width)), ZERO)
            solution[col] = -acc / echelon[r][col]
        basis.append(tuple(solution))
    logger.debug(f"nullspace: rank={len(pivots)}, dim={len(basis)}")
    return basis


def cross(u: Sequence[FieldElem], v: Sequence[FieldElem]) -> tuple[FieldElem, ...]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )
