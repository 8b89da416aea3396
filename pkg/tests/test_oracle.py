import pytest

from src.algebra import oracle
from src.algebra.ec import EcDescriptor, construct_ec
from src.algebra.errors import SamplingExhausted, WrongDimension
from src.algebra.field import ONE, SQRT3
from src.algebra.hesse import AutElem, HesseCurve, tau_apply
from src.algebra.plinalg import Mat3, ProjPoint, rank
from src.algebra.qalg import RelationSet, kernel_point, left_matrix_at, relations_equal
from src.algebra.tables import TypedAlgebra, construct, table_pair
from src.config.settings import settings

ROW_PARAMETERS = [
    ("P1", [(1, 2, 3), (2, -1, 5), (3, 3, 7)]),
    ("P2", [(2,), (-3,), ("1/2",)]),
    ("P3", [()]),
    ("S1", [(2, 3, 5), (-1, 2, 3), ("1/2", 3, -4)]),
    ("S2", [(2, 3), (-1, 5), ("1/3", 2)]),
    ("S3", [(2, 3, 5), (-1, 2, 3), (3, 1, -2)]),
    ("Sp1", [(2, 3), (-1, 2), (5, "1/2")]),
    ("Sp2", [()]),
    ("T1", [(1, 2, 3), (-1, 4, 2), (0, 0, 1)]),
    ("T2", [(1, 2, 3), (-1, 4, 2), (2, 0, -1)]),
    ("T3", [()]),
    ("Tp", [(1, 2), (3, -1), (0, 1)]),
    ("NC1", [(2,), (-1,), (3,)]),
    ("NC2", [()]),
]

CASES = [(tag, params) for tag, sets in ROW_PARAMETERS for params in sets]


@pytest.mark.parametrize("tag, params", CASES)
def test_g2_reproduces_table_rows(tag, params):
    algebra = TypedAlgebra.of(tag, *params)
    recovered = oracle.g2_relations(table_pair(algebra))
    assert relations_equal(recovered, construct(algebra))


@pytest.mark.parametrize(
    "point, exponents",
    [
        (ProjPoint.of(1, 2, 3), range(2)),
        (ProjPoint.of(1, 1, ONE + SQRT3), range(4)),
    ],
)
def test_g2_reproduces_ec_algebras(point, exponents):
    for i in exponents:
        d = EcDescriptor.of(point, i)
        recovered = oracle.g2_relations(oracle.hesse_pair(d.aut))
        assert relations_equal(recovered, construct_ec(d))


def test_graph_lies_on_the_curve():
    d = EcDescriptor.of(ProjPoint.of(1, 2, 3), 1)
    pair = oracle.hesse_pair(d.aut)
    for p, q in oracle.graph_points(pair, 12):
        assert pair.contains(p) and pair.contains(q)


def test_sampling_is_deterministic():
    pair = table_pair(TypedAlgebra.of("S1", 2, 3, 5))
    assert oracle.sample_points(pair, 9) == oracle.sample_points(pair, 9)
    assert oracle.sample_points(pair, 9, seed=1) == oracle.sample_points(pair, 9, seed=1)
    assert len(set(oracle.sample_points(pair, 12))) == 12


def test_sampling_respects_component_degrees():
    pair = table_pair(TypedAlgebra.of("Sp1", 2, 3))
    line, conic = pair.components
    points = oracle.sample_points(pair, 12)
    on_line = [p for p in points if line.equation(p).is_zero()]
    assert len(on_line) >= 4
    assert all(line.equation(p).is_zero() or conic.equation(p).is_zero() for p in points)


def test_allocation_by_degree():
    pair = table_pair(TypedAlgebra.of("Sp1", 2, 3))
    assert oracle._allocate(pair.components, 12) == [4, 8]
    assert oracle._allocate(pair.components, 10) == [3, 7]


def test_too_few_samples_leave_a_larger_kernel():
    pair = table_pair(TypedAlgebra.of("S1", 2, 3, 5))
    with pytest.raises(WrongDimension) as info:
        oracle.g2_relations(pair, 5)
    assert info.value.dimension >= 4


def test_torsion_seed_cannot_be_sampled(torsion):
    curve = HesseCurve.of(2)
    aut = AutElem.make(curve.point(torsion[3]), 1)
    with pytest.raises(SamplingExhausted):
        oracle.sample_points(oracle.hesse_pair(aut), 12)


def test_small_orbit_is_exhausted():
    curve = HesseCurve.of(ONE + SQRT3)
    q = curve.point(ProjPoint.of(1, 1, ONE + SQRT3))
    with pytest.raises(SamplingExhausted):
        oracle.sample_points(oracle.hesse_pair(AutElem.make(q, 0)), 19)


def test_thread_pool_gives_same_graph(monkeypatch):
    pair = table_pair(TypedAlgebra.of("T1", 1, 2, 3))
    serial = oracle.graph_points(pair, 12)
    monkeypatch.setattr(settings.oracle, "workers", 3)
    assert oracle.graph_points(pair, 12) == serial


@pytest.mark.parametrize("tag, params", [("S1", (2, 3, 5)), ("Sp1", (2, 3)), ("Tp", (1, 2)), ("NC1", (2,))])
def test_g1_holds_for_own_pair(tag, params):
    algebra = TypedAlgebra.of(tag, *params)
    report = oracle.g1_check(construct(algebra), table_pair(algebra))
    assert report.passed
    assert report.verdict == "G1"
    assert {e.check for e in report.entries} == {"vanishing", "rank", "kernel"}


@pytest.mark.parametrize(
    "point, i",
    [(ProjPoint.of(1, 2, 3), i) for i in range(2)] + [(ProjPoint.of(1, 1, ONE + SQRT3), i) for i in range(4)],
)
def test_g1_holds_for_ec_algebra(point, i):
    d = EcDescriptor.of(point, i)
    relations = construct_ec(d)
    assert oracle.g1_check(relations, oracle.hesse_pair(d.aut), 9).passed
    for x in oracle.sample_points(oracle.hesse_pair(d.aut), 9):
        m = left_matrix_at(relations, x)
        assert rank(m.rows, 3) == 2
        assert kernel_point(m) == (d.point + tau_apply(d.exponent, d.curve.point(x))).point


def test_g1_detects_mismatched_pair():
    relations = construct(TypedAlgebra.of("S1", 2, 3, 5))
    report = oracle.g1_check(relations, table_pair(TypedAlgebra.of("S1", 2, 3, 7)))
    assert report.verdict == "NotG1"
    assert report.failures


def test_g1_commutative_relations_on_plane():
    commutative = RelationSet.of({"xy": 1, "yx": -1}, {"yz": 1, "zy": -1}, {"zx": 1, "xz": -1})
    report = oracle.g1_check(commutative, oracle.plane_pair(Mat3.identity()))
    assert report.passed
