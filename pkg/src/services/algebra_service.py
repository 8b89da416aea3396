"""Сервис, связывающий CLI с алгебраическим ядром.

Разбирает дескрипторы, вызывает функции src.algebra и собирает модели ответов.
"""

import logging

from src.algebra import ec, hesse, oracle, qalg, tables
from src.algebra.ec import REGULARITY_UNDECIDED, EcDescriptor
from src.algebra.errors import InvalidParameters
from src.algebra.field import ZERO, FieldElem
from src.algebra.hesse import CurvePoint, HesseCurve
from src.algebra.plinalg import Mat3, ProjPoint, projective_order
from src.algebra.qalg import RelationSet
from src.algebra.tables import TypedAlgebra
from src.config.settings import settings
from src.models import (
    CubicResponse,
    DecisionResponse,
    FlagResponse,
    G1EntryResponse,
    G1ReportResponse,
    G2Response,
    MatrixResponse,
    NormalFormResponse,
    PointListResponse,
    PointResponse,
    RelationSetResponse,
    ValueResponse,
    Witness,
    parse_descriptor,
)
from src.models.descriptors import EcDescriptorModel, TableDescriptor

logger = logging.getLogger(__name__)

Algebra = TypedAlgebra | EcDescriptor


def _point_strings(p: ProjPoint) -> list[str]:
    return [str(c) for c in p.coords]


def _matrix_strings(m: Mat3) -> list[list[str]]:
    return [[str(c) for c in row] for row in m.rows]


def load_algebra(raw: str | dict) -> Algebra:
    """JSON-дескриптор → TypedAlgebra или EcDescriptor."""
    model = parse_descriptor(raw)
    if isinstance(model, EcDescriptorModel):
        return model.to_descriptor()
    return model.to_algebra()


def describe(algebra: Algebra) -> str:
    if isinstance(algebra, EcDescriptor):
        return f"EC{algebra}"
    return str(algebra)


def descriptor_json(algebra: Algebra) -> dict:
    if isinstance(algebra, EcDescriptor):
        return EcDescriptorModel(point=_point_strings(algebra.point.point), i=algebra.exponent).model_dump()
    return TableDescriptor(type=algebra.type.value, params=[str(p) for p in algebra.params]).model_dump()


def relations_of(algebra: Algebra) -> RelationSet:
    if isinstance(algebra, EcDescriptor):
        return ec.construct_ec(algebra)
    return tables.construct(algebra)


def pair_of(algebra: Algebra) -> oracle.GeometricPair:
    if isinstance(algebra, EcDescriptor):
        return oracle.hesse_pair(algebra.aut)
    return tables.table_pair(algebra)


def construct(raw: str | dict) -> RelationSetResponse:
    algebra = load_algebra(raw)
    relations = relations_of(algebra)
    logger.info(f"Построены соотношения {describe(algebra)}")
    regularity = REGULARITY_UNDECIDED if isinstance(algebra, EcDescriptor) else None
    return RelationSetResponse(algebra=describe(algebra), relations=relations.to_json(), regularity=regularity)


def _ec_witness(verdict: ec.EcVerdict) -> Witness | None:
    if verdict.witness is None:
        return None
    return Witness(l=verdict.witness.l, r=_point_strings(verdict.witness.r.point))


def iso(raw_a: str | dict, raw_b: str | dict) -> DecisionResponse:
    a, b = load_algebra(raw_a), load_algebra(raw_b)
    if isinstance(a, EcDescriptor) and isinstance(b, EcDescriptor):
        verdict = ec.iso_ec(a, b)
        logger.info(f"iso {describe(a)} ~ {describe(b)}: {verdict.holds}")
        return DecisionResponse(isomorphic=verdict.holds, witness=_ec_witness(verdict))
    if isinstance(a, EcDescriptor) or isinstance(b, EcDescriptor):
        return DecisionResponse(isomorphic=False)
    holds = tables.iso_decide(a, b)
    witness = tables.iso_witness(a, b) if holds else None
    logger.info(f"iso {describe(a)} ~ {describe(b)}: {holds}")
    return DecisionResponse(
        isomorphic=holds,
        witness=Witness(matrix=_matrix_strings(witness)) if witness else None,
    )


def morita(raw_a: str | dict, raw_b: str | dict) -> DecisionResponse:
    a, b = load_algebra(raw_a), load_algebra(raw_b)
    if isinstance(a, EcDescriptor) and isinstance(b, EcDescriptor):
        verdict = ec.morita_ec(a, b)
        logger.info(f"morita {describe(a)} ~ {describe(b)}: {verdict.holds}")
        return DecisionResponse(equivalent=verdict.holds, witness=_ec_witness(verdict))
    if isinstance(a, EcDescriptor) or isinstance(b, EcDescriptor):
        return DecisionResponse(equivalent=False)
    holds = tables.morita_decide(a, b)
    logger.info(f"morita {describe(a)} ~ {describe(b)}: {holds}")
    return DecisionResponse(equivalent=holds)


def normal_form(raw: str | dict) -> NormalFormResponse:
    algebra = load_algebra(raw)
    if isinstance(algebra, EcDescriptor):
        raise InvalidParameters("Нормальная форма Мориты для типа EC не определена")
    form = tables.morita_normal_form(algebra)
    return NormalFormResponse(
        algebra=describe(algebra),
        normal_form=describe(form),
        descriptor=descriptor_json(form),
        relations=tables.construct(form).to_json(),
    )


def point_scheme(raw: str | dict) -> CubicResponse:
    algebra = load_algebra(raw)
    cubic = qalg.point_scheme_det(relations_of(algebra))
    return CubicResponse(
        algebra=describe(algebra),
        cubic={k: str(v) for k, v in cubic.terms().items()},
        identically_zero=cubic.is_zero(),
    )


def verify_g2(raw: str | dict, n: int | None = None) -> G2Response:
    algebra = load_algebra(raw)
    n = settings.oracle.sample_count if n is None else n
    pair = pair_of(algebra)
    recovered = oracle.g2_relations(pair, n)
    matches = qalg.relations_equal(recovered, relations_of(algebra))
    logger.info(f"verify-g2 {describe(algebra)}: n={n}, совпадение={matches}")
    return G2Response(
        algebra=describe(algebra),
        family=pair.family.value,
        sample_count=n,
        relations=recovered.to_json(),
        matches_construction=matches,
    )


def verify_g1(raw: str | dict, raw_pair: str | dict | None = None, n: int | None = None) -> G1ReportResponse:
    """Проверяет соотношения алгебры на паре (E, σ) той же или другой алгебры."""
    algebra = load_algebra(raw)
    pair = pair_of(load_algebra(raw_pair) if raw_pair else algebra)
    report = oracle.g1_check(relations_of(algebra), pair, n)
    logger.info(f"verify-g1 {describe(algebra)}: {report.verdict}")
    return G1ReportResponse(
        verdict=report.verdict,
        entries=[
            G1EntryResponse(point=_point_strings(e.point), check=e.check, passed=e.passed, detail=e.detail)
            for e in report.entries
        ],
    )


# --- Кривая Гессе ----------------------------------------------------------


def _curve(points: list[ProjPoint], lam: FieldElem | None) -> HesseCurve:
    """Кривая задаётся λ явно или по первой точке с abc ≠ 0; точки E[3] лежат на всех E_λ."""
    if lam is None:
        generic = next((p for p in points if not (p[0] * p[1] * p[2]).is_zero()), None)
        lam = hesse.lambda_of(generic) if generic else ZERO
    return HesseCurve(lam)


def _curve_points(points: list[ProjPoint], lam: FieldElem | None) -> list[CurvePoint]:
    curve = _curve(points, lam)
    return [curve.point(p) for p in points]


def curve_add(p: ProjPoint, q: ProjPoint, lam: FieldElem | None = None) -> PointResponse:
    a, b = _curve_points([p, q], lam)
    return PointResponse(point=_point_strings((a + b).point))


def curve_neg(p: ProjPoint, lam: FieldElem | None = None) -> PointResponse:
    (a,) = _curve_points([p], lam)
    return PointResponse(point=_point_strings((-a).point))


def curve_smul(n: int, p: ProjPoint, lam: FieldElem | None = None) -> PointResponse:
    (a,) = _curve_points([p], lam)
    return PointResponse(point=_point_strings(hesse.smul(n, a).point))


def curve_j(lam: FieldElem) -> ValueResponse:
    return ValueResponse(value=str(hesse.j_invariant(lam)))


def curve_torsion3() -> PointListResponse:
    return PointListResponse(points=[_point_strings(p) for p in hesse.torsion3()])


def curve_is_torsion3(p: ProjPoint, lam: FieldElem | None = None) -> FlagResponse:
    (a,) = _curve_points([p], lam)
    return FlagResponse(value=hesse.is_torsion3(a))


def curve_tau(lam: FieldElem) -> MatrixResponse:
    m = hesse.tau_matrix(lam)
    return MatrixResponse(matrix=_matrix_strings(m), order=projective_order(m))


def curve_f_set(lam: FieldElem, i: int) -> PointListResponse:
    return PointListResponse(points=[_point_strings(p) for p in hesse.f_set(lam, i)])


def curve_orbit(raw: str | dict, kind: str = "iso") -> PointListResponse:
    algebra = load_algebra(raw)
    if not isinstance(algebra, EcDescriptor):
        raise InvalidParameters("Орбита определена только для дескрипторов типа EC")
    points = ec.orbit(algebra, kind)
    logger.info(f"orbit {describe(algebra)} ({kind}): {len(points)} точек")
    return PointListResponse(points=[_point_strings(p) for p in points])
