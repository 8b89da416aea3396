"""Эллиптические кривые в форме Гессе E_λ = V(x³+y³+z³−3λxyz).

Групповой закон с нулём o = (1:−1:0), j-инвариант, 3-кручение,
образующая τ_λ группы автоморфизмов, сохраняющих o, множества F_{λ,i}
и группа Aut E ≅ T ⋊ G (элементы σ_p τ^i).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from src.algebra.errors import CanonicalFormRequired, CurveMismatch, NotOnCurve, SingularHesse, TorsionPoint
from src.algebra.field import EPS, ONE, SQRT3, ZERO, FieldElem, Scalar
from src.algebra.plinalg import Mat3, ProjPoint, apply, cross

logger = logging.getLogger(__name__)

J_ZERO = FieldElem((0,))
J_1728 = FieldElem((1728,))
LAMBDA_J1728 = ONE + SQRT3


@dataclass(frozen=True)
class HesseCurve:
    lam: FieldElem

    def __post_init__(self) -> None:
        if self.lam ** 3 == 1:
            raise SingularHesse(f"λ³ = 1 при λ = {self.lam}: кривая особая")

    @classmethod
    def of(cls, lam: Scalar) -> HesseCurve:
        return cls(FieldElem.coerce(lam))

    def equation(self, v) -> FieldElem:
        x, y, z = v
        return x ** 3 + y ** 3 + z ** 3 - 3 * self.lam * x * y * z

    def gradient(self, v) -> tuple[FieldElem, FieldElem, FieldElem]:
        """∇F/3."""
        x, y, z = v
        lam = self.lam
        return (x * x - lam * y * z, y * y - lam * x * z, z * z - lam * x * y)

    def contains(self, p: ProjPoint) -> bool:
        return self.equation(p.coords).is_zero()

    def point(self, p: ProjPoint) -> CurvePoint:
        if not self.contains(p):
            raise NotOnCurve(f"Точка {p} не лежит на E_λ, λ = {self.lam}")
        return CurvePoint(self, p)

    @property
    def o(self) -> CurvePoint:
        return CurvePoint(self, ProjPoint.of(1, -1, 0))

    def torsion3(self) -> list[CurvePoint]:
        return [CurvePoint(self, p) for p in torsion3()]

    def __str__(self) -> str:
        return f"E_λ(λ = {self.lam})"


@dataclass(frozen=True)
class CurvePoint:
    curve: HesseCurve
    point: ProjPoint

    def __add__(self, other: CurvePoint) -> CurvePoint:
        return add(self, other)

    def __neg__(self) -> CurvePoint:
        return neg(self)

    def __sub__(self, other: CurvePoint) -> CurvePoint:
        return add(self, neg(other))

    def __rmul__(self, n: int) -> CurvePoint:
        return smul(n, self)

    def __str__(self) -> str:
        return str(self.point)


def _same_curve(p: CurvePoint, q: CurvePoint) -> None:
    if p.curve != q.curve:
        raise CurveMismatch(f"Точки лежат на разных кривых: {p.curve} и {q.curve}")


def _is_zero_vector(v) -> bool:
    return all(c.is_zero() for c in v)


def _third_intersection(curve: HesseCurve, p: ProjPoint, q: ProjPoint) -> tuple[FieldElem, ...]:
    """Третья точка пересечения прямой pq (касательной при p = q) с кривой.

    F(sp + tq) = s³F(p) + s²t·∇F(p)·q + st²·∇F(q)·p + t³F(q).
    """
    pv, qv = p.coords, q.coords
    if p != q:
        a = sum((g * c for g, c in zip(curve.gradient(pv), qv)), ZERO)
        b = sum((g * c for g, c in zip(curve.gradient(qv), pv)), ZERO)
        return tuple(b * x - a * y for x, y in zip(pv, qv))
    tangent = curve.gradient(pv)
    for k in range(3):
        unit = tuple(ONE if i == k else ZERO for i in range(3))
        w = cross(tangent, unit)
        if not _is_zero_vector(w) and not _is_zero_vector(cross(w, pv)):
            break
    fw = curve.equation(w)
    bw = sum((g * c for g, c in zip(curve.gradient(w), pv)), ZERO)
    return tuple(fw * x - bw * y for x, y in zip(pv, w))


def add(p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """Сумма точек по формулам сложения формы Гессе.

    Если формула даёт нулевой вектор, сумма вычисляется через хорду
    (касательную): p + q = −r, где r — третья точка пересечения.

    Raises:
        CurveMismatch: Если точки лежат на разных кривых
    """
    _same_curve(p, q)
    a, b, c = p.point.coords
    al, be, ga = q.point.coords
    if p.point == q.point:
        vector = (a ** 3 * b - b * c ** 3, a * c ** 3 - a * b ** 3, b ** 3 * c - a ** 3 * c)
    else:
        vector = (
            a * c * be * be - b * b * al * ga,
            b * c * al * al - a * a * be * ga,
            a * b * ga * ga - c * c * al * be,
        )
    if _is_zero_vector(vector):
        third = _third_intersection(p.curve, p.point, q.point)
        return neg(CurvePoint(p.curve, ProjPoint.from_vector(third)))
    return CurvePoint(p.curve, ProjPoint.from_vector(vector))


def neg(p: CurvePoint) -> CurvePoint:
    a, b, c = p.point.coords
    return CurvePoint(p.curve, ProjPoint.from_vector((b, a, c)))


def smul(n: int, p: CurvePoint) -> CurvePoint:
    if n < 0:
        return smul(-n, neg(p))
    result = p.curve.o
    addend = p
    while n:
        if n & 1:
            result = add(result, addend)
        addend = add(addend, addend)
        n >>= 1
    return result


def lambda_of(p: ProjPoint) -> FieldElem:
    """Единственное λ с p ∈ E_λ: λ = (a³+b³+c³)/(3abc).

    Raises:
        TorsionPoint: Если abc = 0
        SingularHesse: Если λ³ = 1
    """
    a, b, c = p.coords
    abc = a * b * c
    if abc.is_zero():
        raise TorsionPoint(f"У точки {p} есть нулевая координата")
    lam = (a ** 3 + b ** 3 + c ** 3) / (3 * abc)
    if lam ** 3 == 1:
        raise SingularHesse(f"Точка {p} лежит на особой кубике (λ = {lam})")
    return lam


def j_invariant(lam: Scalar) -> FieldElem:
    lam = FieldElem.coerce(lam)
    cube = lam ** 3
    if cube == 1:
        raise SingularHesse(f"j-инвариант не определён при λ³ = 1 (λ = {lam})")
    return 27 * cube * (cube + 8) ** 3 / (cube - 1) ** 3


@lru_cache(maxsize=1)
def torsion3() -> tuple[ProjPoint, ...]:
    """p₀, …, p₈: точки E_λ[3], общие для всех λ."""
    e1, e2 = EPS, EPS * EPS
    return (
        ProjPoint.of(1, -1, 0),
        ProjPoint.of(1, -e1, 0),
        ProjPoint.of(1, -e2, 0),
        ProjPoint.of(1, 0, -1),
        ProjPoint.of(1, 0, -e1),
        ProjPoint.of(1, 0, -e2),
        ProjPoint.of(0, 1, -1),
        ProjPoint.of(0, 1, -e1),
        ProjPoint.of(0, 1, -e2),
    )


def is_torsion3(p: CurvePoint) -> bool:
    return p.point in torsion3()


def group_order_d(lam: Scalar) -> int:
    """d = |G_λ|: 6 при j = 0, 4 при j = 1728, иначе 2."""
    j = j_invariant(lam)
    if j == J_ZERO:
        return 6
    if j == J_1728:
        return 4
    return 2


@lru_cache(maxsize=64)
def _tau_matrix(lam: FieldElem) -> Mat3:
    j = j_invariant(lam)
    e1, e2 = EPS, EPS * EPS
    if j == J_ZERO:
        if lam != 0:
            raise CanonicalFormRequired(
                f"j(E_λ) = 0 при λ = {lam}; приведите кривую к форме Гессе с λ = 0"
            )
        return Mat3.of([[0, 1, 0], [1, 0, 0], [0, 0, e1]])
    if j == J_1728:
        if lam != LAMBDA_J1728:
            raise CanonicalFormRequired(
                f"j(E_λ) = 1728 при λ = {lam}; приведите кривую к форме Гессе с λ = 1+√3"
            )
        return Mat3.of([[e2, e1, 1], [e1, e2, 1], [1, 1, 1]])
    return Mat3.of([[0, 1, 0], [1, 0, 0], [0, 0, 1]])


def tau_matrix(lam: Scalar) -> Mat3:
    """Матрица образующей τ_λ группы G_λ.

    Raises:
        SingularHesse: Если λ³ = 1
        CanonicalFormRequired: Если j ∈ {0, 1728}, а λ не равно 0 или 1+√3
    """
    return _tau_matrix(FieldElem.coerce(lam))


@lru_cache(maxsize=256)
def _tau_power(lam: FieldElem, exponent: int) -> Mat3:
    return tau_matrix(lam).power(exponent)


def tau_power(lam: Scalar, i: int) -> Mat3:
    lam = FieldElem.coerce(lam)
    return _tau_power(lam, i % group_order_d(lam))


def tau_apply(i: int, p: CurvePoint) -> CurvePoint:
    return CurvePoint(p.curve, apply(tau_power(p.curve.lam, i), p.point))


def f_set(lam: Scalar, i: int) -> list[ProjPoint]:
    """F_{λ,i} = {p − τ^i(p) | p ∈ E_λ[3]} в порядке p₀, …, p₈."""
    curve = HesseCurve.of(lam)
    members = {(p - tau_apply(i, p)).point for p in curve.torsion3()}
    return [p for p in torsion3() if p in members]


@dataclass(frozen=True)
class AutElem:
    """Автоморфизм σ_p τ^i кривой: q ↦ p + τ^i(q)."""

    translation: CurvePoint
    exponent: int

    @classmethod
    def make(cls, p: CurvePoint, i: int) -> AutElem:
        return cls(p, i % group_order_d(p.curve.lam))

    @classmethod
    def identity(cls, curve: HesseCurve) -> AutElem:
        return cls(curve.o, 0)

    @property
    def curve(self) -> HesseCurve:
        return self.translation.curve

    def __call__(self, q: CurvePoint) -> CurvePoint:
        return aut_apply(self, q)

    def __mul__(self, other: AutElem) -> AutElem:
        return aut_compose(self, other)


def aut_apply(g: AutElem, q: CurvePoint) -> CurvePoint:
    _same_curve(g.translation, q)
    return add(g.translation, tau_apply(g.exponent, q))


def aut_compose(g: AutElem, h: AutElem) -> AutElem:
    """(σ_q τ^j)(σ_p τ^i) = σ_{q+τ^j(p)} τ^{j+i}."""
    _same_curve(g.translation, h.translation)
    point = add(g.translation, tau_apply(g.exponent, h.translation))
    return AutElem.make(point, g.exponent + h.exponent)


def aut_inverse(g: AutElem) -> AutElem:
    """(σ_p τ^i)⁻¹ = σ_{−τ^{−i}(p)} τ^{−i}."""
    return AutElem.make(neg(tau_apply(-g.exponent, g.translation)), -g.exponent)


def aut_conjugate_formula(
    q: CurvePoint, j: int, r: CurvePoint, l: int, p: CurvePoint, i: int
) -> AutElem:
    """Замкнутая формула (σ_q τ^j)⁻¹(σ_r τ^l)(σ_p τ^i) = σ_{τ^{−j}(−q+r+τ^l(p))} τ^{l+i−j}."""
    inner = add(add(neg(q), r), tau_apply(l, p))
    return AutElem.make(tau_apply(-j, inner), l + i - j)


def triple_product_formula(
    q: CurvePoint, j: int, r: CurvePoint, l: int, p: CurvePoint, i: int
) -> AutElem:
    """Замкнутая формула (σ_q τ^j)(σ_r τ^l)(σ_p τ^i)⁻¹ = σ_{q+τ^j(r)−τ^{l+j−i}(p)} τ^{l+j−i}."""
    point = add(add(q, tau_apply(j, r)), neg(tau_apply(l + j - i, p)))
    return AutElem.make(point, l + j - i)
