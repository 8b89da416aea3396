"""Классификация 3-мерных квадратичных AS-регулярных алгебр вне типа EC.

Каждая строка таблицы (P₁ … TL₄) регистрируется в реестре: определяющие
соотношения, ограничения на параметры, условие изоморфизма и, для
приведённых E, явная геометрическая пара (E, σ).
"""

from __future__ import annotations

import logging
import random
import threading
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Callable, Sequence

from src.algebra.errors import InvalidParameters, NotOnCurve
from src.algebra.field import EPS, ONE, FieldElem, Scalar, parse_elem
from src.algebra.oracle import Component, Family, GeometricPair, plane_pair, random_int
from src.algebra.plinalg import Mat3, ProjPoint, cross
from src.algebra.qalg import RelationSet, apply_iso, relations_equal

logger = logging.getLogger(__name__)


class AlgebraType(str, Enum):
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"
    SP1 = "Sp1"
    SP2 = "Sp2"
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    TP = "Tp"
    CC = "CC"
    NC1 = "NC1"
    NC2 = "NC2"
    WL1 = "WL1"
    WL2 = "WL2"
    WL3 = "WL3"
    TL1 = "TL1"
    TL2 = "TL2"
    TL3 = "TL3"
    TL4 = "TL4"

    @property
    def coarse(self) -> str:
        """Тип без номера подтипа: P, S, Sp, T, Tp, CC, NC, WL, TL."""
        return self.value.rstrip("0123456789")


@dataclass(frozen=True)
class Row:
    tag: AlgebraType
    arity: int
    relations: Callable[..., RelationSet]
    constraint: Callable[..., str | None]


class RowRegistry:
    """Реестр строк таблицы классификации."""

    def __init__(self) -> None:
        self._rows: dict[AlgebraType, Row] = {}
        self._iso: dict[AlgebraType, Callable[[tuple, tuple], bool]] = {}
        self._pairs: dict[AlgebraType, Callable[..., GeometricPair]] = {}
        self._lock = threading.RLock()

    def row(self, tag: AlgebraType, arity: int = 0, constraint: Callable[..., str | None] | None = None):
        def decorator(fn: Callable[..., RelationSet]) -> Callable[..., RelationSet]:
            with self._lock:
                self._rows[tag] = Row(tag, arity, fn, constraint or (lambda *params: None))
            return fn

        return decorator

    def iso(self, *tags: AlgebraType):
        def decorator(fn: Callable[[tuple, tuple], bool]) -> Callable[[tuple, tuple], bool]:
            with self._lock:
                for tag in tags:
                    self._iso[tag] = fn
            return fn

        return decorator

    def pair(self, *tags: AlgebraType):
        def decorator(fn: Callable[..., GeometricPair]) -> Callable[..., GeometricPair]:
            with self._lock:
                for tag in tags:
                    self._pairs[tag] = fn
            return fn

        return decorator

    def get(self, tag: AlgebraType) -> Row:
        return self._rows[tag]

    def iso_condition(self, tag: AlgebraType) -> Callable[[tuple, tuple], bool]:
        return self._iso.get(tag, lambda a, b: True)

    def pair_builder(self, tag: AlgebraType) -> Callable[..., GeometricPair] | None:
        return self._pairs.get(tag)

    def tags(self) -> list[AlgebraType]:
        return list(self._rows)


registry = RowRegistry()


@dataclass(frozen=True)
class TypedAlgebra:
    type: AlgebraType
    params: tuple[FieldElem, ...] = ()

    def __post_init__(self) -> None:
        row = registry.get(self.type)
        if len(self.params) != row.arity:
            raise InvalidParameters(
                f"Тип {self.type.value} требует {row.arity} параметров, получено {len(self.params)}"
            )
        violation = row.constraint(*self.params)
        if violation:
            raise InvalidParameters(f"{self.type.value}: нарушено условие {violation}")

    @classmethod
    def of(cls, tag: AlgebraType | str, *params: Scalar | str) -> TypedAlgebra:
        return cls(AlgebraType(tag), tuple(parse_elem(p) for p in params))

    def __str__(self) -> str:
        if not self.params:
            return self.type.value
        return f"{self.type.value}(" + ", ".join(str(p) for p in self.params) + ")"


def _rel(*relations: dict[str, Scalar]) -> RelationSet:
    return RelationSet.of(*relations)


def _nonzero_not_one(name: str) -> Callable[[FieldElem], str | None]:
    def check(value: FieldElem) -> str | None:
        if value.is_zero() or value == 1:
            return f"{name} ≠ 0, 1"
        return None

    return check


# --- Type P ---------------------------------------------------------------


@registry.row(AlgebraType.P1, 3, lambda a, b, c: None if not (a * b * c).is_zero() else "αβγ ≠ 0")
def _p1(a, b, c):
    return _rel({"xy": a, "yx": -b}, {"yz": b, "zy": -c}, {"zx": c, "xz": -a})


@registry.row(AlgebraType.P2, 1, lambda a: None if not a.is_zero() else "α ≠ 0")
def _p2(a):
    return _rel({"xy": 1, "yx": -1, "yy": 1}, {"xz": 1, "zx": -a, "zy": a}, {"yz": 1, "zy": -a})


@registry.row(AlgebraType.P3)
def _p3():
    return _rel(
        {"xy": 1, "yx": -1, "yy": 1, "zx": -1},
        {"xz": 1, "yz": 1, "zx": -1},
        {"zy": 1, "yz": -1, "zz": -1},
    )


# --- Type S, S' -----------------------------------------------------------


@registry.row(AlgebraType.S1, 3, lambda a, b, c: _nonzero_not_one("αβγ")(a * b * c))
def _s1(a, b, c):
    return _rel({"yz": 1, "zy": -a}, {"zx": 1, "xz": -b}, {"xy": 1, "yx": -c})


@registry.row(AlgebraType.S2, 2, lambda a, b: None if not (a * b).is_zero() else "αβ ≠ 0")
def _s2(a, b):
    return _rel({"zx": 1, "yz": -a}, {"xz": 1, "zy": -b}, {"xx": 1, "yy": a * b})


@registry.row(AlgebraType.S3, 3, lambda a, b, c: _nonzero_not_one("αβγ")(a * b * c))
def _s3(a, b, c):
    return _rel({"yx": 1, "zz": -a}, {"zy": 1, "xx": -b}, {"xz": 1, "yy": -c})


@registry.row(AlgebraType.SP1, 2, lambda a, b: _nonzero_not_one("αβ²")(a * b * b))
def _sp1(a, b):
    return _rel({"xy": 1, "yx": -b}, {"xx": 1, "yz": 1, "zy": -a}, {"zx": 1, "xz": -b})


@registry.row(AlgebraType.SP2)
def _sp2():
    return _rel({"xy": 1, "zx": -1}, {"yx": 1, "xz": -1}, {"xx": 1, "yy": 1, "zz": 1})


# --- Type T, T' -----------------------------------------------------------


def _sum_nonzero(a, b, c) -> str | None:
    return None if not (a + b + c).is_zero() else "α + β + γ ≠ 0"


@registry.row(AlgebraType.T1, 3, _sum_nonzero)
def _t1(a, b, c):
    return _rel(
        {"xy": 1, "yx": -1},
        {"xz": 1, "zx": -1, "xx": -b, "yx": b + c},
        {"yz": 1, "zy": -1, "yy": -a, "xy": a + c},
    )


@registry.row(AlgebraType.T2, 3, _sum_nonzero)
def _t2(a, b, c):
    return _rel(
        {"xx": 1, "yy": -1},
        {"xz": 1, "zy": -1, "xy": -b, "yy": b + c},
        {"yz": 1, "zx": -1, "yx": -a, "xx": a + c},
    )


@registry.row(AlgebraType.T3)
def _t3():
    return _rel({"xx": 1, "xy": -1, "yy": 1}, {"xz": 1, "zy": 1}, {"yx": 1, "yz": -1, "zx": 1, "zy": -1})


@registry.row(AlgebraType.TP, 2, lambda a, b: None if not (a + 2 * b).is_zero() else "α + 2β ≠ 0")
def _tp(a, b):
    return _rel(
        {"xx": a, "xy": b * (a + b), "xz": -1, "zx": 1, "zy": -(a + b)},
        {"xy": 1, "yx": -1, "yy": -b},
        {"xy": 2 * b, "yy": -b * b, "yz": 1, "zy": -1},
    )


# --- Type CC, NC ----------------------------------------------------------


@registry.row(AlgebraType.CC)
def _cc():
    return _rel(
        {"xx": -3, "xy": -2, "xz": 1, "zx": -1, "zy": 2},
        {"xy": -1, "yx": 1, "yy": 1},
        {"xx": 3, "yy": 1, "yz": 1, "zy": -1},
    )


@registry.row(AlgebraType.NC1, 1, lambda a: None if not (a * (a ** 3 - 1)).is_zero() else "α(α³ − 1) ≠ 0")
def _nc1(a):
    k = (a ** 3 - 1) / a
    return _rel({"xy": 1, "yx": -a}, {"xx": k, "zy": a, "yz": -1}, {"yy": k, "xz": a, "zx": -1})


@registry.row(AlgebraType.NC2)
def _nc2():
    return _rel({"xz": 1, "yx": -2, "zy": 1}, {"zx": 1, "xy": -2, "yz": 1}, {"yy": 1, "xx": 1})


# --- Type WL, TL ----------------------------------------------------------


@registry.row(AlgebraType.WL1, 2, lambda a, c: _nonzero_not_one("α")(a))
def _wl1(a, c):
    return _rel({"xy": a, "yx": -1}, {"xz": a, "yx": -c, "zx": -1}, {"zy": 1, "yz": -1, "yy": 1 + c})


@registry.row(AlgebraType.WL2, 1)
def _wl2(c):
    return _rel({"xy": 1, "yx": -1}, {"xz": 1, "yx": -c, "zx": -1}, {"zy": 1, "yz": -1, "yy": 1 + c})


@registry.row(AlgebraType.WL3, 1)
def _wl3(c):
    return _rel(
        {"xy": 1, "yx": -1},
        {"xz": 1, "xx": -1, "yx": -c, "zx": -1},
        {"xy": 1, "zy": 1, "yz": -1, "yy": 1 + c},
    )


@registry.row(AlgebraType.TL1, 1, lambda a: None if not a.is_zero() else "α ≠ 0")
def _tl1(a):
    return _rel({"xy": 1, "yx": -a}, {"xz": 1, "zx": -a.inv()}, {"zy": a.inv(), "yz": -a, "xx": 1})


@registry.row(AlgebraType.TL2, 1)
def _tl2(b):
    return _rel(
        {"xy": 1, "yx": -1, "xx": -b},
        {"xz": 1, "zx": -1, "yx": -1},
        {"zy": 1, "yz": -1, "xz": -b, "xx": 1, "yy": 1},
    )


@registry.row(AlgebraType.TL3)
def _tl3():
    return _rel({"xy": 1, "yx": 1}, {"xz": 1, "zx": 1, "yx": -1}, {"zy": 1, "yz": -1, "xx": -1, "yy": -1})


@registry.row(AlgebraType.TL4)
def _tl4():
    return _rel({"xy": 1, "yx": 1}, {"xz": 1, "zx": -1, "xx": -1}, {"zy": 1, "yz": -1, "xy": 1, "xx": 1})


def twist_normal_form(index: int) -> RelationSet:
    """B₁, B₂, B₃: алгебры, к которым твистом приводятся типы WL (B₁, B₂) и TL (B₃)."""
    third = {1: {"zy": 1, "yz": -1, "xz": 1}, 2: {"zy": 1, "yz": -1, "yy": 1}, 3: {"zy": 1, "yz": -1, "xx": 1}}
    if index not in third:
        raise InvalidParameters(f"Нет нормальной формы B{index}")
    return _rel({"xy": 1, "yx": -1}, {"xz": 1, "zx": -1}, third[index])


def construct(t: TypedAlgebra) -> RelationSet:
    return registry.get(t.type).relations(*t.params)


# --- Изоморфизм -----------------------------------------------------------


def _projective_equal(u: Sequence[FieldElem], v: Sequence[FieldElem]) -> bool:
    if len(u) == 2:
        return u[0] * v[1] == u[1] * v[0]
    return all(c.is_zero() for c in cross(u, v))


@registry.iso(AlgebraType.P1, AlgebraType.T1)
def _iso_permuted_p2(a: tuple, b: tuple) -> bool:
    return any(_projective_equal(b, perm) for perm in permutations(a))


@registry.iso(AlgebraType.P2)
def _iso_p2(a: tuple, b: tuple) -> bool:
    return a == b


@registry.iso(AlgebraType.S1)
def _iso_s1(a: tuple, b: tuple) -> bool:
    al, be, ga = a
    orbit = [
        (al, be, ga),
        (be, ga, al),
        (ga, al, be),
        (al.inv(), ga.inv(), be.inv()),
        (be.inv(), al.inv(), ga.inv()),
        (ga.inv(), be.inv(), al.inv()),
    ]
    return tuple(b) in orbit


@registry.iso(AlgebraType.S2, AlgebraType.TP)
def _iso_p1_point(a: tuple, b: tuple) -> bool:
    return _projective_equal(a, b)


@registry.iso(AlgebraType.S3)
def _iso_s3(a: tuple, b: tuple) -> bool:
    return a[0] * a[1] * a[2] == b[0] * b[1] * b[2]


@registry.iso(AlgebraType.SP1)
def _iso_sp1(a: tuple, b: tuple) -> bool:
    return tuple(b) in (tuple(a), (a[0].inv(), a[1].inv()))


@registry.iso(AlgebraType.T2)
def _iso_t2(a: tuple, b: tuple) -> bool:
    return _projective_equal((a[0] + a[1], a[2]), (b[0] + b[1], b[2]))


@registry.iso(AlgebraType.NC1, AlgebraType.TL1)
def _iso_inverse_pair(a: tuple, b: tuple) -> bool:
    return b[0] == a[0] or b[0] == a[0].inv()


@registry.iso(AlgebraType.WL1, AlgebraType.WL2, AlgebraType.WL3)
def _iso_equal(a: tuple, b: tuple) -> bool:
    return a == b


@registry.iso(AlgebraType.TL2)
def _iso_tl2(a: tuple, b: tuple) -> bool:
    return b[0] == a[0] or b[0] == -a[0]


def iso_decide(a: TypedAlgebra, b: TypedAlgebra) -> bool:
    """Изоморфны ли алгебры как градуированные; разные строки таблицы не изоморфны."""
    if a.type != b.type:
        return False
    return registry.iso_condition(a.type)(a.params, b.params)


def iso_witness(a: TypedAlgebra, b: TypedAlgebra) -> Mat3 | None:
    """Перестановка координат φ с (φ⊗φ)(R_a) = R_b, если такая есть."""
    if not iso_decide(a, b):
        return None
    source, target = construct(a), construct(b)
    for images in permutations(range(3)):
        m = Mat3.permutation(images)
        if relations_equal(apply_iso(source, m), target):
            logger.debug(f"iso_witness: {a} → {b}, x_j ↦ x_{images}")
            return m
    return None


# --- Градуированная эквивалентность Мориты --------------------------------

# Инвариант класса: произведение мультипликаторов σ вдоль компонент E
_MORITA_INVARIANTS: dict[AlgebraType, Callable[..., FieldElem]] = {
    AlgebraType.S1: lambda a, b, c: a * b * c,
    AlgebraType.S2: lambda a, b: FieldElem.coerce(-1),
    AlgebraType.S3: lambda a, b, c: a * b * c,
    AlgebraType.SP1: lambda a, b: a * b * b,
    AlgebraType.SP2: lambda: FieldElem.coerce(-1),
    AlgebraType.NC1: lambda a: a ** 3,
    AlgebraType.NC2: lambda: FieldElem.coerce(-1),
}


def morita_invariant(t: TypedAlgebra) -> FieldElem | None:
    fn = _MORITA_INVARIANTS.get(t.type)
    return fn(*t.params) if fn else None


def morita_decide(a: TypedAlgebra, b: TypedAlgebra) -> bool:
    if a.type.coarse != b.type.coarse:
        return False
    left, right = morita_invariant(a), morita_invariant(b)
    if left is None:
        return True
    return left == right or left * right == 1


def _class_representative(values: Sequence[FieldElem]) -> FieldElem:
    """Наибольший по кортежу коэффициентов элемент класса."""
    return max(values, key=lambda v: v.coeffs)


def _nc1_representative(alpha: FieldElem) -> FieldElem:
    # α³ = β³ или α³β³ = 1 ⟺ β ∈ {α, α⁻¹}·μ₃
    return _class_representative([r * EPS ** k for r in (alpha, alpha.inv()) for k in range(3)])


def morita_normal_form(t: TypedAlgebra) -> TypedAlgebra:
    """Представитель класса Мориты: морита-эквивалентные входы дают равные формы."""
    coarse = t.type.coarse
    invariant = morita_invariant(t)
    if coarse == "P":
        return TypedAlgebra.of(AlgebraType.P1, 1, 1, 1)
    if coarse == "S":
        return TypedAlgebra(AlgebraType.S1, (_class_representative([invariant, invariant.inv()]), ONE, ONE))
    if coarse == "Sp":
        return TypedAlgebra(AlgebraType.SP1, (_class_representative([invariant, invariant.inv()]), ONE))
    if coarse == "T":
        return TypedAlgebra.of(AlgebraType.T1, 1, 1, -1)
    if coarse == "Tp":
        return TypedAlgebra.of(AlgebraType.TP, 1, 0)
    if coarse == "NC":
        alpha = t.params[0] if t.type is AlgebraType.NC1 else -ONE
        return TypedAlgebra(AlgebraType.NC1, (_nc1_representative(alpha),))
    if coarse == "WL":
        return TypedAlgebra.of(AlgebraType.WL1, -1, 0)
    if coarse == "TL":
        return TypedAlgebra.of(AlgebraType.TL1, 1)
    return TypedAlgebra(AlgebraType.CC)


# --- Узловая кубика V(x³ + y³ + xyz) ---------------------------------------

NODE = ProjPoint.of(0, 0, 1)


def nodal_equation(p: ProjPoint) -> FieldElem:
    x, y, z = p
    return x ** 3 + y ** 3 + x * y * z


def nc_parametrize(a: Scalar, b: Scalar) -> ProjPoint:
    """Нормализация π(a:b) = (a²b : ab² : −a³−b³)."""
    a, b = FieldElem.coerce(a), FieldElem.coerce(b)
    return ProjPoint.from_vector((a * a * b, a * b * b, -(a ** 3) - b ** 3))


def nc_sigma(variant: int, param: Scalar, p: ProjPoint) -> ProjPoint:
    """Автоморфизм σ₁ (variant = 1) или σ₂ (variant = 2) узловой кубики.

    Raises:
        InvalidParameters: Если variant ∉ {1, 2} или param³ ∈ {0, 1}
        NotOnCurve: Если p не лежит на кубике
    """
    param = FieldElem.coerce(param)
    cube = param ** 3
    if variant not in (1, 2) or cube.is_zero() or cube == 1:
        raise InvalidParameters(f"σ{variant}: требуется variant ∈ {{1, 2}} и param³ ≠ 0, 1")
    if not nodal_equation(p).is_zero():
        raise NotOnCurve(f"Точка {p} не лежит на V(x³ + y³ + xyz)")
    if p == NODE:
        return NODE
    x, y, z = p
    if variant == 1:
        image = (param * x * y, param * param * y * y, (cube - 1) * x * x + cube * y * z)
    else:
        image = (param * y * y, param * param * x * y, (1 - cube) * x * x + y * z)
    return ProjPoint.from_vector(image)


# --- Явные геометрические пары ---------------------------------------------


def _pair_sample(rng: random.Random) -> tuple[int, int] | None:
    s, t = random_int(rng), random_int(rng)
    return (s, t) if s or t else None


def _sampler(embed: Callable[[int, int], tuple]) -> Callable[[random.Random], ProjPoint | None]:
    def sample(rng: random.Random) -> ProjPoint | None:
        st = _pair_sample(rng)
        if st is None:
            return None
        return ProjPoint.of(*embed(*st))

    return sample


def _line(name: str, equation, embed, sigma) -> Component:
    return Component(name, 1, equation, _sampler(embed), lambda p: ProjPoint.of(*sigma(*p)))


def _triangle(tag: AlgebraType, on_x, on_y, on_z) -> GeometricPair:
    return GeometricPair(
        Family.TRIANGLE,
        (
            _line("V(x)", lambda p: p[0], lambda s, t: (0, s, t), on_x),
            _line("V(y)", lambda p: p[1], lambda s, t: (s, 0, t), on_y),
            _line("V(z)", lambda p: p[2], lambda s, t: (s, t, 0), on_z),
        ),
        label=tag.value,
    )


def _three_lines(tag: AlgebraType, on_x, on_y, on_diagonal) -> GeometricPair:
    return GeometricPair(
        Family.THREE_LINES,
        (
            _line("V(x)", lambda p: p[0], lambda s, t: (0, s, t), on_x),
            _line("V(y)", lambda p: p[1], lambda s, t: (s, 0, t), on_y),
            _line("V(x-y)", lambda p: p[0] - p[1], lambda s, t: (s, s, t), on_diagonal),
        ),
        label=tag.value,
    )


@registry.pair(AlgebraType.P1)
def _pair_p1(a, b, c):
    return plane_pair(Mat3.diag(a, b, c), "P1")


@registry.pair(AlgebraType.P2)
def _pair_p2(a):
    return plane_pair(Mat3.of([[1, 1, 0], [0, 1, 0], [0, 0, a]]), "P2")


@registry.pair(AlgebraType.P3)
def _pair_p3():
    return plane_pair(Mat3.of([[1, 1, 0], [0, 1, 1], [0, 0, 1]]), "P3")


@registry.pair(AlgebraType.S1)
def _pair_s1(a, b, c):
    return _triangle(
        AlgebraType.S1,
        lambda x, y, z: (0, y, a * z),
        lambda x, y, z: (b * x, 0, z),
        lambda x, y, z: (x, c * y, 0),
    )


@registry.pair(AlgebraType.S2)
def _pair_s2(a, b):
    return _triangle(
        AlgebraType.S2,
        lambda x, y, z: (a * y, 0, z),
        lambda x, y, z: (0, x, b * z),
        lambda x, y, z: (a * b * y, -x, 0),
    )


@registry.pair(AlgebraType.S3)
def _pair_s3(a, b, c):
    return _triangle(
        AlgebraType.S3,
        lambda x, y, z: (a * z, 0, y),
        lambda x, y, z: (z, b * x, 0),
        lambda x, y, z: (0, x, c * y),
    )


def _conic(name: str, degree_two_equation, coefficient, sigma) -> Component:
    """Коника вида c·x² + yz = 0 (после масштабирования), параметризация (su : u² : −c s²)."""
    return Component(
        name,
        2,
        degree_two_equation,
        _sampler(lambda s, u: (s * u, u * u, -coefficient * s * s)),
        lambda p: ProjPoint.from_vector(sigma(*p)),
    )


@registry.pair(AlgebraType.SP1)
def _pair_sp1(a, b):
    kappa = a * b * b
    c = b / (1 - kappa)
    return GeometricPair(
        Family.LINE_CONIC_2,
        (
            _line("V(x)", lambda p: p[0], lambda s, t: (0, s, t), lambda x, y, z: (0, y, a * z)),
            _conic(
                "V(βx² + (1−αβ²)yz)",
                lambda p: b * p[0] ** 2 + (1 - kappa) * p[1] * p[2],
                c,
                lambda x, y, z: (b * x, b * b * y, z),
            ),
        ),
        label="Sp1",
    )


@registry.pair(AlgebraType.SP2)
def _pair_sp2():
    half = FieldElem.coerce(1) / 2
    return GeometricPair(
        Family.LINE_CONIC_2,
        (
            _line("V(x)", lambda p: p[0], lambda s, t: (0, s, t), lambda x, y, z: (0, z, -y)),
            _conic("V(x² + 2yz)", lambda p: p[0] ** 2 + 2 * p[1] * p[2], half, lambda x, y, z: (x, z, y)),
        ),
        label="Sp2",
    )


@registry.pair(AlgebraType.T1)
def _pair_t1(a, b, c):
    return _three_lines(
        AlgebraType.T1,
        lambda x, y, z: (0, y, z + a * y),
        lambda x, y, z: (x, 0, z + b * x),
        lambda x, y, z: (x, y, z - c * x),
    )


@registry.pair(AlgebraType.T2)
def _pair_t2(a, b, c):
    return _three_lines(
        AlgebraType.T2,
        lambda x, y, z: (y, 0, z + a * y),
        lambda x, y, z: (0, x, z + b * x),
        lambda x, y, z: (x, y, z - c * x),
    )


@registry.pair(AlgebraType.T3)
def _pair_t3():
    return _three_lines(
        AlgebraType.T3,
        lambda x, y, z: (y, 0, y + z),
        lambda x, y, z: (x, x, -z),
        lambda x, y, z: (0, x, -z),
    )


@registry.pair(AlgebraType.TP)
def _pair_tp(a, b):
    def shift(x, y, z):
        if y.is_zero():
            return (x, y, z)
        u = x - b * y
        return (u * y, y * y, u * u)

    return GeometricPair(
        Family.LINE_CONIC_1,
        (
            _line("V(y)", lambda p: p[1], lambda s, t: (s, 0, t), lambda x, y, z: (x, 0, z + a * x)),
            _conic("V(x² − yz)", lambda p: p[0] ** 2 - p[1] * p[2], FieldElem.coerce(-1), shift),
        ),
        label="Tp",
    )


def nodal_pair(variant: int, param: Scalar) -> GeometricPair:
    def sample(rng: random.Random) -> ProjPoint | None:
        st = _pair_sample(rng)
        return nc_parametrize(*st) if st else None

    component = Component(
        "V(x³ + y³ + xyz)",
        3,
        nodal_equation,
        sample,
        lambda p: nc_sigma(variant, param, p),
    )
    return GeometricPair(Family.NODAL_CUBIC, (component,), label=f"σ{variant}({param})")


@registry.pair(AlgebraType.NC1)
def _pair_nc1(a):
    return nodal_pair(1, a)


@registry.pair(AlgebraType.NC2)
def _pair_nc2():
    return nodal_pair(2, -1)


def table_pair(t: TypedAlgebra) -> GeometricPair:
    """Геометрическая пара (E, σ) строки таблицы.

    Raises:
        InvalidParameters: Для строк с неприведённой E и для CC (σ в явном виде не задан)
    """
    builder = registry.pair_builder(t.type)
    if builder is None:
        raise InvalidParameters(f"Для типа {t.type.value} явная пара (E, σ) не задана")
    return builder(*t.params)
