"""Геометрическая проверка: соотношения из условия (G2) и поточечная проверка (G1).

Для геометрической пары (E, σ) берутся точки p ∈ E, строится матрица
значений мономов x_j⊗x_k в (p, σ(p)), её ядро — пространство соотношений.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from src.algebra.errors import InvariantBreach, NotOnCurve, SamplingExhausted, WrongDimension
from src.algebra.field import FieldElem
from src.algebra.hesse import AutElem, CurvePoint, aut_apply, is_torsion3
from src.algebra.plinalg import Mat3, ProjPoint, Tensor2, apply, evaluate, nullspace, rank
from src.algebra.qalg import RelationSet, kernel_point, left_matrix_at
from src.config.constants import MAX_SAMPLING_ATTEMPTS, MIN_G2_SAMPLES, SAMPLE_RANGE
from src.config.settings import settings

logger = logging.getLogger(__name__)


class Family(str, Enum):
    P2 = "P2"
    TRIANGLE = "Triangle"
    LINE_CONIC_2 = "LineConic2"
    LINE_CONIC_1 = "LineConic1"
    THREE_LINES = "ThreeLinesConcurrent"
    NODAL_CUBIC = "NodalCubic"
    HESSE_CUBIC = "HesseCubic"


@dataclass(frozen=True)
class Component:
    """Неприводимая компонента E с параметризацией и ограничением σ на неё.

    degree — степень компоненты (прямая 1, коника 2, кубика 3);
    sample получает генератор и возвращает точку или None, если
    выпавшее значение параметра не даёт точки.
    """

    name: str
    degree: int
    equation: Callable[[ProjPoint], FieldElem]
    sample: Callable[[random.Random], ProjPoint | None]
    sigma: Callable[[ProjPoint], ProjPoint]


@dataclass(frozen=True)
class GeometricPair:
    family: Family
    components: tuple[Component, ...] = ()
    aut: AutElem | None = None
    seed: CurvePoint | None = None
    label: str = ""

    def contains(self, p: ProjPoint) -> bool:
        if self.family is Family.HESSE_CUBIC:
            return self.aut.curve.contains(p)
        return any(c.equation(p).is_zero() for c in self.components)

    def sigma(self, p: ProjPoint) -> ProjPoint:
        if self.family is Family.HESSE_CUBIC:
            return aut_apply(self.aut, self.aut.curve.point(p)).point
        for component in self.components:
            if component.equation(p).is_zero():
                return component.sigma(p)
        raise NotOnCurve(f"Точка {p} не лежит на E ({self.family.value})")


def random_int(rng: random.Random) -> int:
    return rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE)


def plane_pair(m: Mat3, label: str = "") -> GeometricPair:
    """(P², σ) с линейным σ."""

    def sample(rng: random.Random) -> ProjPoint | None:
        vector = [random_int(rng) for _ in range(3)]
        if not any(vector):
            return None
        return ProjPoint.of(*vector)

    component = Component(
        name="P2",
        degree=1,
        equation=lambda p: FieldElem.coerce(0),
        sample=sample,
        sigma=lambda p: apply(m, p),
    )
    return GeometricPair(Family.P2, (component,), label=label)


def hesse_pair(aut: AutElem, seed: CurvePoint | None = None) -> GeometricPair:
    """(E_λ, σ_p τ^i); точки выборки — m·s + pₗ от затравки s (по умолчанию s = p)."""
    return GeometricPair(
        Family.HESSE_CUBIC,
        aut=aut,
        seed=seed or aut.translation,
        label=f"σ_p τ^{aut.exponent}, p = {aut.translation}",
    )


def _allocate(components: tuple[Component, ...], n: int) -> list[int]:
    """Делит n точек между компонентами пропорционально степени (метод наибольших остатков)."""
    total = sum(c.degree for c in components)
    shares = [n * c.degree for c in components]
    quotas = [s // total for s in shares]
    remainders = sorted(range(len(components)), key=lambda k: (-(shares[k] % total), k))
    for k in remainders[: n - sum(quotas)]:
        quotas[k] += 1
    return quotas


def _sample_hesse(pair: GeometricPair, n: int) -> list[ProjPoint]:
    curve = pair.aut.curve
    offsets = curve.torsion3()
    if is_torsion3(pair.seed):
        raise SamplingExhausted(f"Затравка {pair.seed} лежит в E[3]: точек m·s + pₗ не больше 9")
    points: list[ProjPoint] = []
    seen: set[ProjPoint] = set()
    multiple = pair.seed
    for _ in range(MAX_SAMPLING_ATTEMPTS):
        for offset in offsets:
            candidate = (multiple + offset).point
            if candidate not in seen:
                seen.add(candidate)
                points.append(candidate)
                if len(points) == n:
                    return points
        multiple = multiple + pair.seed
        if multiple.point == pair.seed.point:
            break
    raise SamplingExhausted(f"Орбита затравки {pair.seed} дала только {len(points)} точек из {n}")


def sample_points(pair: GeometricPair, n: int | None = None, seed: int | None = None) -> list[ProjPoint]:
    """n различных точек E.

    Raises:
        SamplingExhausted: Если различных точек не хватает
    """
    n = settings.oracle.sample_count if n is None else n
    if n < 1:
        raise SamplingExhausted(f"Нужна хотя бы одна точка, запрошено {n}")
    if pair.family is Family.HESSE_CUBIC:
        points = _sample_hesse(pair, n)
        logger.debug(f"sample_points: {pair.family.value}, {len(points)} точек")
        return points

    rng = random.Random(settings.oracle.random_seed if seed is None else seed)
    points: list[ProjPoint] = []
    seen: set[ProjPoint] = set()
    for component, quota in zip(pair.components, _allocate(pair.components, n)):
        taken = 0
        for _ in range(MAX_SAMPLING_ATTEMPTS):
            if taken == quota:
                break
            p = component.sample(rng)
            if p is None or p in seen:
                continue
            seen.add(p)
            points.append(p)
            taken += 1
        if taken < quota:
            raise SamplingExhausted(
                f"Компонента {component.name}: получено {taken} точек из {quota}"
            )
    logger.debug(f"sample_points: {pair.family.value}, {len(points)} точек")
    return points


def _graph_point(pair: GeometricPair, p: ProjPoint) -> tuple[ProjPoint, ProjPoint]:
    q = pair.sigma(p)
    if not pair.contains(q):
        raise InvariantBreach(f"σ({p}) = {q} не лежит на E ({pair.family.value})")
    return p, q


def graph_points(pair: GeometricPair, n: int | None = None) -> list[tuple[ProjPoint, ProjPoint]]:
    """Пары (p, σ(p)); при workers > 1 образы считаются в пуле потоков."""
    points = sample_points(pair, n)
    workers = settings.oracle.workers
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(lambda p: _graph_point(pair, p), points))
    return [_graph_point(pair, p) for p in points]


def g2_relations(pair: GeometricPair, n: int | None = None) -> RelationSet:
    """R = {f ∈ V⊗V | f(p, σ(p)) = 0 для выбранных p ∈ E}.

    Raises:
        WrongDimension: Если ядро не трёхмерно
    """
    n = settings.oracle.sample_count if n is None else n
    if n < MIN_G2_SAMPLES:
        logger.warning(f"g2_relations: n = {n} < {MIN_G2_SAMPLES}, ядро может оказаться больше 3")
    rows = [
        tuple(p[j] * q[k] for j in range(3) for k in range(3))
        for p, q in graph_points(pair, n)
    ]
    basis = nullspace(rows, 9)
    if len(basis) != 3:
        raise WrongDimension(
            len(basis),
            f"Пространство соотношений для {pair.family.value} имеет размерность {len(basis)}, ожидалась 3",
        )
    return RelationSet(tuple(Tensor2(v) for v in basis))


@dataclass
class G1Entry:
    point: ProjPoint
    check: str
    passed: bool
    detail: str = ""


@dataclass
class G1Report:
    """Поточечная проверка (G1); это выборочное свидетельство, не доказательство."""

    entries: list[G1Entry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def verdict(self) -> str:
        return "G1" if self.passed else "NotG1"

    @property
    def failures(self) -> list[G1Entry]:
        return [e for e in self.entries if not e.passed]


def g1_check(a: RelationSet, pair: GeometricPair, n: int | None = None) -> G1Report:
    """Для каждой точки p выборки: соотношения обращаются в ноль на (p, σ(p)),
    rank M(p) = 2 и ядро M(p) — это σ(p)."""
    report = G1Report()
    for p, q in graph_points(pair, n):
        bad = [i for i, f in enumerate(a.relations) if not evaluate(f, p, q).is_zero()]
        report.entries.append(
            G1Entry(p, "vanishing", not bad, f"f{bad[0] + 1}(p, σ(p)) ≠ 0" if bad else "")
        )
        m = left_matrix_at(a, p)
        r = rank(m.rows, 3)
        report.entries.append(G1Entry(p, "rank", r == 2, f"rank M(p) = {r}"))
        if r == 2:
            kernel = kernel_point(m)
            report.entries.append(
                G1Entry(p, "kernel", kernel == q, f"ker M(p) = {kernel}, σ(p) = {q}")
            )
    logger.debug(f"g1_check: {pair.family.value}, {len(report.failures)} нарушений")
    return report
