"""Алгебры типа EC: A(E_λ, σ_p τ^i).

Соотношения получаются твистом алгебры Склянина A(E_λ, σ_p) матрицей τ^i.
Изоморфизм и эквивалентность Мориты решаются перебором конечной орбиты
{τ^l(p) + r}, l ∈ Z_d, r ∈ F_{λ,i} (для Мориты r ∈ E[3]).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from src.algebra.errors import CurveMismatch, InvalidParameters, TorsionPoint
from src.algebra.field import EPS, ZERO, FieldElem, Scalar
from src.algebra.hesse import (
    AutElem,
    CurvePoint,
    HesseCurve,
    f_set,
    group_order_d,
    is_torsion3,
    lambda_of,
    tau_apply,
    tau_matrix,
    tau_power,
)
from src.algebra.plinalg import ProjPoint, Tensor2
from src.algebra.qalg import RelationSet, twist

logger = logging.getLogger(__name__)

REGULARITY_UNDECIDED = "undecided"


@dataclass(frozen=True)
class EcDescriptor:
    """Пара (p, i): точка p ∈ E_λ с abc ≠ 0 и показатель i по модулю d = |G_λ|.

    λ всегда вычисляется по p.
    """

    point: CurvePoint
    exponent: int

    @classmethod
    def of(cls, p: ProjPoint, i: int) -> EcDescriptor:
        """Raises:
        TorsionPoint: Если у p есть нулевая координата
        SingularHesse: Если λ³ = 1
        CanonicalFormRequired: Если j ∈ {0, 1728}, а λ не каноническое
        """
        lam = lambda_of(p)
        tau_matrix(lam)  # CanonicalFormRequired при j ∈ {0, 1728}
        curve = HesseCurve(lam)
        return cls(curve.point(p), i % group_order_d(lam))

    @property
    def curve(self) -> HesseCurve:
        return self.point.curve

    @property
    def lam(self) -> FieldElem:
        return self.point.curve.lam

    @property
    def aut(self) -> AutElem:
        return AutElem(self.point, self.exponent)

    def __str__(self) -> str:
        return f"({self.point}, {self.exponent})"


def sklyanin(p: ProjPoint) -> RelationSet:
    """A(E, σ_p): ayz + bzy + cx², azx + bxz + cy², axy + byx + cz².

    Raises:
        TorsionPoint: Если abc = 0
    """
    a, b, c = p.coords
    if (a * b * c).is_zero():
        raise TorsionPoint(f"Точка {p}: abc = 0")
    return RelationSet.of(
        {"yz": a, "zy": b, "xx": c},
        {"zx": a, "xz": b, "yy": c},
        {"xy": a, "yx": b, "zz": c},
    )


def construct_ec(d: EcDescriptor) -> RelationSet:
    return twist(sklyanin(d.point.point), tau_power(d.lam, d.exponent))


class JCase(str, Enum):
    GENERIC = "generic"
    J0 = "j0"
    J1728 = "j1728"


def j_case(lam: Scalar) -> JCase:
    d = group_order_d(lam)
    return {2: JCase.GENERIC, 6: JCase.J0, 4: JCase.J1728}[d]


def _relation(a, b, c, forms: Sequence[tuple[dict[str, Scalar], str]]) -> Tensor2:
    """a·L₁⊗(·) + b·L₂⊗(·) + c·L₃⊗(·): первый множитель — линейная форма {"x": коэфф., ...}."""
    terms: dict[str, FieldElem] = {}
    for scalar, (form, second) in zip((a, b, c), forms):
        for letter, coeff in form.items():
            key = letter + second
            terms[key] = terms.get(key, ZERO) + scalar * coeff
    return Tensor2.from_terms(terms)


def ec_relations_literal(a: Scalar, b: Scalar, c: Scalar, case: JCase, i: int) -> RelationSet:
    """Выписанные списки соотношений для каждого случая j и каждого i.

    Используются как эталон для construct_ec; в случае j = 0 — для
    проверки на уровне формул при произвольных a, b, c.
    """
    a, b, c = (FieldElem.coerce(v) for v in (a, b, c))
    e1, e2 = EPS, EPS * EPS
    x, y, z = ({"x": 1}, {"y": 1}, {"z": 1})
    if case is JCase.GENERIC:
        i %= 2
        lists = {
            0: ((y, "z"), (z, "y"), (x, "x"), (z, "x"), (x, "z"), (y, "y"), (x, "y"), (y, "x"), (z, "z")),
            1: ((x, "z"), (z, "y"), (y, "x"), (z, "x"), (y, "z"), (x, "y"), (y, "y"), (x, "x"), (z, "z")),
        }
    elif case is JCase.J0:
        i %= 6
        # τ^i(x), τ^i(y), τ^i(z) для τ = [[0,1,0],[1,0,0],[0,0,ε]]
        zeta = {0: 1, 1: e1, 2: e2, 3: 1, 4: e1, 5: e2}[i]
        swap = i % 2 == 1
        tx, ty, tz = (y if swap else x), (x if swap else y), {"z": zeta}
        lists = {i: ((ty, "z"), (tz, "y"), (tx, "x"), (tz, "x"), (tx, "z"), (ty, "y"), (tx, "y"), (ty, "x"), (tz, "z"))}
    else:
        i %= 4
        u = {"x": e1, "y": e2, "z": 1}
        v = {"x": 1, "y": 1, "z": 1}
        w = {"x": e2, "y": e1, "z": 1}
        lists = {
            0: ((y, "z"), (z, "y"), (x, "x"), (z, "x"), (x, "z"), (y, "y"), (x, "y"), (y, "x"), (z, "z")),
            1: ((u, "z"), (v, "y"), (w, "x"), (v, "x"), (w, "z"), (u, "y"), (w, "y"), (u, "x"), (v, "z")),
            2: ((x, "z"), (z, "y"), (y, "x"), (z, "x"), (y, "z"), (x, "y"), (y, "y"), (x, "x"), (z, "z")),
            3: ((w, "z"), (v, "y"), (u, "x"), (v, "x"), (u, "z"), (w, "y"), (u, "y"), (w, "x"), (v, "z")),
        }
    forms = lists[i]
    return RelationSet(
        (
            _relation(a, b, c, forms[0:3]),
            _relation(a, b, c, forms[3:6]),
            _relation(a, b, c, forms[6:9]),
        )
    )


def _same_curve(a: EcDescriptor, b: EcDescriptor) -> None:
    if a.lam != b.lam:
        raise CurveMismatch(f"Дескрипторы на разных кривых: λ = {a.lam} и λ = {b.lam}")


@dataclass(frozen=True)
class OrbitMember:
    point: CurvePoint
    l: int
    r: CurvePoint


def _orbit_members(d: EcDescriptor, kind: str) -> list[OrbitMember]:
    curve = d.curve
    if kind == "iso":
        offsets = [curve.point(r) for r in f_set(d.lam, d.exponent)]
    elif kind == "morita":
        offsets = curve.torsion3()
    else:
        raise InvalidParameters(f"Неизвестный вид орбиты: {kind!r}")
    members = []
    for l in range(group_order_d(d.lam)):
        image = tau_apply(l, d.point)
        members.extend(OrbitMember(image + r, l, r) for r in offsets)
    return members


def orbit(d: EcDescriptor, kind: str = "iso") -> list[ProjPoint]:
    """Отсортированное множество {τ^l(p) + r}: r ∈ F_{λ,i} для "iso", r ∈ E[3] для "morita"."""
    points = {m.point.point for m in _orbit_members(d, kind)}
    logger.debug(f"orbit({d}, {kind}): {len(points)} точек")
    return sorted(points, key=ProjPoint.sort_key)


@dataclass(frozen=True)
class EcVerdict:
    holds: bool
    witness: OrbitMember | None = None


def _find_in_orbit(a: EcDescriptor, target: CurvePoint, kind: str) -> OrbitMember | None:
    return next((m for m in _orbit_members(a, kind) if m.point == target), None)


def iso_ec(a: EcDescriptor, b: EcDescriptor) -> EcVerdict:
    """A(p, i) ≅ A(q, j) тогда и только тогда, когда i = j и q = τ^l(p) + r, r ∈ F_{λ,i}.

    Raises:
        CurveMismatch: Если λ различны
    """
    _same_curve(a, b)
    if a.exponent != b.exponent:
        return EcVerdict(False)
    witness = _find_in_orbit(a, b.point, "iso")
    return EcVerdict(witness is not None, witness)


def morita_ec(a: EcDescriptor, b: EcDescriptor) -> EcVerdict:
    """GrMod A(p, i) ≅ GrMod A(q, j) тогда и только тогда, когда p − τ^{j−i}(p) ∈ E[3]
    и q = τ^l(p) + r для некоторых r ∈ E[3], l ∈ Z_d."""
    _same_curve(a, b)
    shift = a.point - tau_apply(b.exponent - a.exponent, a.point)
    if not is_torsion3(shift):
        return EcVerdict(False)
    witness = _find_in_orbit(a, b.point, "morita")
    return EcVerdict(witness is not None, witness)


def is_type_ec(p: CurvePoint) -> bool:
    return not is_torsion3(p)
