from itertools import permutations

import pytest

from src.algebra.errors import InvalidParameters, NotOnCurve
from src.algebra.field import EPS, FieldElem
from src.algebra.plinalg import Mat3, ProjPoint
from src.algebra.qalg import CubicForm, apply_iso, point_scheme_det, relations_equal
from src.algebra.tables import (
    NODE,
    AlgebraType,
    TypedAlgebra,
    construct,
    iso_decide,
    iso_witness,
    morita_decide,
    morita_invariant,
    morita_normal_form,
    nc_parametrize,
    nc_sigma,
    nodal_equation,
    registry,
    table_pair,
    twist_normal_form,
)


def _alg(tag, *params):
    return TypedAlgebra.of(tag, *params)


def _permutation_iso(a: TypedAlgebra, b: TypedAlgebra) -> bool:
    source, target = construct(a), construct(b)
    return any(relations_equal(apply_iso(source, Mat3.permutation(p)), target) for p in permutations(range(3)))


def test_registry_covers_every_row():
    assert set(registry.tags()) == set(AlgebraType)
    assert len(AlgebraType) == 22


def test_coarse_types():
    assert AlgebraType.S2.coarse == "S"
    assert AlgebraType.SP1.coarse == "Sp"
    assert AlgebraType.TP.coarse == "Tp"
    assert AlgebraType.CC.coarse == "CC"
    assert AlgebraType.WL3.coarse == "WL"


def test_s1_relations():
    assert construct(_alg("S1", 2, 3, 5)).to_json() == [
        {"y*z": "1", "z*y": "-2"},
        {"x*z": "-3", "z*x": "1"},
        {"x*y": "1", "y*x": "-5"},
    ]


def test_nc1_relations():
    # (α³ − 1)/α = 7/2 при α = 2
    assert construct(_alg("NC1", 2)).to_json() == [
        {"x*y": "1", "y*x": "-2"},
        {"x*x": "7/2", "y*z": "-1", "z*y": "2"},
        {"x*z": "2", "y*y": "7/2", "z*x": "-1"},
    ]


def test_cc_relations():
    assert construct(_alg("CC")).to_json() == [
        {"x*x": "-3", "x*y": "-2", "x*z": "1", "z*x": "-1", "z*y": "2"},
        {"x*y": "-1", "y*x": "1", "y*y": "1"},
        {"x*x": "3", "y*y": "1", "y*z": "1", "z*y": "-1"},
    ]


@pytest.mark.parametrize(
    "tag, params",
    [
        ("P1", (1, 2, 0)),
        ("P2", (0,)),
        ("S1", (1, 1, 1)),
        ("S1", (2, 0, 5)),
        ("S2", (0, 3)),
        ("S3", (1, -1, -1)),
        ("Sp1", (1, 1)),
        ("T1", (1, 1, -2)),
        ("Tp", (2, -1)),
        ("NC1", (1,)),
        ("NC1", (EPS,)),
        ("WL1", (1, 5)),
        ("TL1", (0,)),
        ("S1", (2, 3)),
        ("CC", (1,)),
    ],
)
def test_invalid_parameters(tag, params):
    with pytest.raises(InvalidParameters):
        TypedAlgebra.of(tag, *params)


def test_unknown_tag():
    with pytest.raises(ValueError):
        TypedAlgebra.of("Q7")


# Кубика det M(x) для каждой строки таблицы, с точностью до скаляра
GOLDEN_POINT_SCHEMES = [
    ("P1", (1, 2, 3), {}),
    ("P2", (2,), {}),
    ("P3", (), {}),
    ("S1", (2, 3, 5), {"xyz": 1}),
    ("S2", (2, 3), {"xyz": 1}),
    ("S3", (2, 3, 5), {"xyz": 1}),
    ("Sp1", (2, 3), {"xxx": 3, "xyz": -17}),
    ("Sp2", (), {"xxx": -1, "xyz": -2}),
    ("T1", (1, 2, 3), {"xxy": 1, "xyy": -1}),
    ("T2", (1, 2, 3), {"xyy": 1, "xxy": -1}),
    ("T3", (), {"xyy": 1, "xxy": -1}),
    ("Tp", (1, 2), {"xxy": 1, "yyz": -1}),
    ("CC", (), {"xxx": 1, "yyz": -1}),
    ("NC1", (2,), {"xxx": 1, "yyy": 1, "xyz": 1}),
    ("NC2", (), {"xxx": 1, "yyy": 1, "xyz": 1}),
    ("WL1", (2, 3), {"xyy": 1}),
    ("WL2", (3,), {"xyy": 1}),
    ("WL3", (3,), {"xyy": 1}),
    ("TL1", (2,), {"xxx": 1}),
    ("TL2", (3,), {"xxx": 1}),
    ("TL3", (), {"xxx": 1}),
    ("TL4", (), {"xxx": 1, "xxy": -2, "xyz": -2}),
]


@pytest.mark.parametrize("tag, params, expected", GOLDEN_POINT_SCHEMES)
def test_point_scheme_golden(tag, params, expected):
    cubic = point_scheme_det(construct(_alg(tag, *params)))
    assert cubic.proportional(CubicForm.from_terms(expected))


@pytest.mark.parametrize("index, expected", [(1, {"xxz": 1}), (2, {"xyy": 1}), (3, {"xxx": 1})])
def test_twist_normal_forms(index, expected):
    assert point_scheme_det(twist_normal_form(index)).proportional(CubicForm.from_terms(expected))


def test_tl1_at_one_is_b3():
    assert relations_equal(construct(_alg("TL1", 1)), twist_normal_form(3))


def test_twist_normal_form_rejects_unknown_index():
    with pytest.raises(InvalidParameters):
        twist_normal_form(4)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (("S1", 2, 3, 5), ("S1", 3, 5, 2), True),
        (("S1", 2, 3, 5), ("S1", 2, 5, 3), False),
        (("S1", 2, 3, 5), ("S1", "1/3", "1/2", "1/5"), True),
        (("NC1", 2), ("NC1", "1/2"), True),
        (("NC1", 2), ("NC1", 3), False),
        (("P1", 1, 2, 3), ("P1", 6, 2, 4), True),
        (("P1", 1, 2, 3), ("P1", 1, 2, 4), False),
        (("T2", 1, 2, 3), ("T2", 2, 1, 3), True),
        (("T2", 1, 2, 3), ("T2", 2, 4, 6), True),
        (("T2", 1, 2, 3), ("T2", 1, 2, 4), False),
        (("TL2", 3), ("TL2", -3), True),
        (("TL2", 3), ("TL2", 2), False),
        (("S2", 1, 2), ("S2", 2, 4), True),
        (("S3", 1, 2, 3), ("S3", 3, 2, 1), True),
        (("Sp1", 2, 3), ("Sp1", "1/2", "1/3"), True),
        (("Sp1", 2, 3), ("Sp1", 3, 2), False),
        (("WL2", 1), ("WL2", 1), True),
        (("WL2", 1), ("WL2", 2), False),
        (("CC",), ("CC",), True),
        (("TL3",), ("TL4",), False),
        (("S1", 2, 3, 5), ("S3", 2, 3, 5), False),
    ],
)
def test_iso_decide(a, b, expected):
    assert iso_decide(_alg(*a), _alg(*b)) is expected


def test_s1_iso_condition_matches_coordinate_permutations(rng):
    """Условие изоморфизма S₁ против прямого перебора перестановок координат."""
    positives = 0
    for k in range(20):
        params = [rng.randint(2, 6), rng.choice([-2, -1, 2, 3]), rng.randint(1, 4)]
        a = _alg("S1", *params)
        if k < 5:
            al, be, ga = (FieldElem.coerce(v) for v in params)
            orbit = [(be, ga, al), (ga, al, be), (al.inv(), ga.inv(), be.inv()), (be.inv(), al.inv(), ga.inv())]
            b = TypedAlgebra(AlgebraType.S1, rng.choice(orbit))
        else:
            b = _alg("S1", rng.randint(2, 6), rng.choice([-2, -1, 2, 3]), rng.randint(1, 4))
        decided = iso_decide(a, b)
        assert decided == _permutation_iso(a, b)
        positives += decided
        if decided:
            witness = iso_witness(a, b)
            assert relations_equal(apply_iso(construct(a), witness), construct(b))
    assert positives >= 5


def test_p1_witness_is_coordinate_permutation():
    a, b = _alg("P1", 1, 2, 3), _alg("P1", 2, 1, 3)
    witness = iso_witness(a, b)
    assert witness is not None
    assert relations_equal(apply_iso(construct(a), witness), construct(b))
    assert iso_witness(a, _alg("P1", 1, 2, 4)) is None


def test_morita_invariants():
    assert morita_invariant(_alg("S1", 2, 3, 5)) == 30
    assert morita_invariant(_alg("S2", 2, 3)) == -1
    assert morita_invariant(_alg("Sp1", 2, 3)) == 18
    assert morita_invariant(_alg("NC1", 2)) == 8
    assert morita_invariant(_alg("T1", 1, 2, 3)) is None


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (("S1", 2, 3, 5), ("S1", 5, 6, 1), True),
        (("S1", 2, 3, 5), ("S1", "1/30", 1, 1), True),
        (("S1", 2, 3, 5), ("S1", 2, 3, 7), False),
        (("S1", 2, 3, 5), ("S2", 2, 3), False),
        (("S1", -1, 1, 1), ("S2", 2, 3), True),
        (("S3", 2, 3, 5), ("S1", 30, 1, 1), True),
        (("Sp1", 2, 3), ("Sp1", 18, 1), True),
        (("Sp1", 2, 3), ("Sp1", 2, 2), False),
        (("NC1", 2), ("NC1", "2*eps"), True),
        (("NC1", 2), ("NC1", "1/2"), True),
        (("NC1", -1), ("NC2",), True),
        (("NC1", 2), ("NC1", 3), False),
        (("WL1", 5, 7), ("WL3", 2), True),
        (("T1", 1, 2, 3), ("T3",), True),
        (("TL2", 3), ("TL4",), True),
        (("P1", 1, 2, 3), ("P3",), True),
        (("P1", 1, 2, 3), ("S1", 1, 2, 3), False),
        (("T1", 1, 2, 3), ("Tp", 1, 2), False),
        (("CC",), ("CC",), True),
    ],
)
def test_morita_decide(a, b, expected):
    assert morita_decide(_alg(*a), _alg(*b)) is expected


def test_s1_morita_condition_on_random_instances(rng):
    for k in range(20):
        params = [rng.randint(2, 5), rng.randint(1, 4), rng.choice([-3, -2, 2, 3])]
        a = _alg("S1", *params)
        product = FieldElem.coerce(params[0] * params[1] * params[2])
        if k < 5:
            b = TypedAlgebra(AlgebraType.S1, (product.inv(), FieldElem.coerce(1), FieldElem.coerce(1)))
            assert morita_decide(a, b)
        elif k < 10:
            b = TypedAlgebra(AlgebraType.S1, (product * 2, FieldElem.coerce(1) / 2, FieldElem.coerce(1)))
            assert morita_decide(a, b)
        else:
            b = TypedAlgebra(AlgebraType.S1, (product + 1, FieldElem.coerce(1), FieldElem.coerce(1)))
            assert not morita_decide(a, b)


def test_iso_implies_morita(rng):
    pool = [
        _alg("S1", 2, 3, 5),
        _alg("S1", 3, 5, 2),
        _alg("S1", "1/2", "1/5", "1/3"),
        _alg("S2", 1, 2),
        _alg("S2", 2, 4),
        _alg("Sp1", 2, 3),
        _alg("Sp1", "1/2", "1/3"),
        _alg("NC1", 2),
        _alg("NC1", "1/2"),
        _alg("T2", 1, 2, 3),
        _alg("T2", 2, 1, 3),
        _alg("TL2", 3),
        _alg("TL2", -3),
        _alg("P1", 1, 2, 3),
        _alg("P1", 3, 2, 1),
    ]
    for _ in range(100):
        a, b = rng.choice(pool), rng.choice(pool)
        assert iso_decide(a, a) and morita_decide(a, a)
        assert iso_decide(a, b) == iso_decide(b, a)
        assert morita_decide(a, b) == morita_decide(b, a)
        if iso_decide(a, b):
            assert morita_decide(a, b)


@pytest.mark.parametrize(
    "tag, params, expected",
    [
        ("S1", (2, 3, 5), ("S1", (30, 1, 1))),
        ("S2", (2, 3), ("S1", (-1, 1, 1))),
        ("Sp1", (2, 3), ("Sp1", (18, 1))),
        ("P2", (5,), ("P1", (1, 1, 1))),
        ("T3", (), ("T1", (1, 1, -1))),
        ("Tp", (3, 4), ("Tp", (1, 0))),
        ("NC2", (), ("NC1", ("-eps",))),
        ("NC1", (2,), ("NC1", (2,))),
        ("WL2", (3,), ("WL1", (-1, 0))),
        ("TL4", (), ("TL1", (1,))),
        ("CC", (), ("CC", ())),
    ],
)
def test_morita_normal_form(tag, params, expected):
    a = _alg(tag, *params)
    form = morita_normal_form(a)
    assert form == _alg(expected[0], *expected[1])
    assert morita_decide(a, form)


def test_nodal_parametrization():
    assert nc_parametrize(1, 0) == NODE
    assert nc_parametrize(0, 1) == NODE
    assert nc_parametrize(1, 1) == ProjPoint.of(1, 1, -2)
    for a, b in [(2, 3), (-1, 4), (5, 1)]:
        assert nodal_equation(nc_parametrize(a, b)).is_zero()


def test_nodal_automorphisms():
    p = nc_parametrize(1, 1)
    assert nc_sigma(1, 2, p) == ProjPoint.of(2, 4, 7 - 16)
    assert nc_sigma(1, 2, NODE) == NODE
    assert nc_sigma(2, -1, NODE) == NODE
    for variant in (1, 2):
        for a, b in [(2, 3), (-1, 4)]:
            assert nodal_equation(nc_sigma(variant, 3, nc_parametrize(a, b))).is_zero()


def test_nodal_automorphism_errors():
    with pytest.raises(InvalidParameters):
        nc_sigma(1, 1, NODE)
    with pytest.raises(InvalidParameters):
        nc_sigma(3, 2, NODE)
    with pytest.raises(NotOnCurve):
        nc_sigma(1, 2, ProjPoint.of(1, 1, 1))


def test_table_pair_unavailable_rows():
    for tag in ("CC", "TL3", "WL2"):
        params = (1,) if tag == "WL2" else ()
        with pytest.raises(InvalidParameters):
            table_pair(_alg(tag, *params))


MORITA_POOL = [
    ("S1", 2, 3, 5),
    ("S1", 5, 6, 1),
    ("S1", "1/2", "1/3", "1/5"),
    ("S1", 3, 5, 2),
    ("S1", 2, 2, 2),
    ("S3", 1, 1, 30),
    ("S2", 1, 2),
    ("S1", -1, 1, 1),
    ("Sp1", 2, 3),
    ("Sp1", 18, 1),
    ("Sp1", "1/18", 1),
    ("Sp2",),
    ("NC1", 2),
    ("NC1", "2*eps"),
    ("NC1", "1/2"),
    ("NC1", "eps^2/2"),
    ("NC1", -1),
    ("NC1", 3),
    ("NC2",),
    ("P1", 1, 2, 3),
    ("P3",),
    ("T1", 1, 2, 3),
    ("T3",),
    ("WL1", 5, 7),
    ("WL3", 2),
    ("TL2", 3),
    ("TL4",),
    ("CC",),
]

ISO_POOL = [
    ("S1", 2, 3, 5),
    ("S1", 3, 5, 2),
    ("S1", 5, 2, 3),
    ("S1", "1/2", "1/5", "1/3"),
    ("S1", 2, 3, 7),
    ("S2", 1, 2),
    ("S2", 2, 4),
    ("Sp1", 2, 3),
    ("Sp1", "1/2", "1/3"),
    ("NC1", 2),
    ("NC1", "1/2"),
    ("T2", 1, 2, 3),
    ("T2", 2, 1, 3),
    ("TL2", 3),
    ("TL2", -3),
    ("P1", 1, 2, 3),
    ("P1", 3, 2, 1),
    ("P1", 2, 3, 1),
]


@pytest.mark.parametrize("pool, decide", [(ISO_POOL, iso_decide), (MORITA_POOL, morita_decide)])
def test_table_relations_are_transitive(pool, decide):
    algebras = [_alg(*entry) for entry in pool]
    related = 0
    for a in algebras:
        assert decide(a, a)
        for b in algebras:
            assert decide(a, b) == decide(b, a)
            if not decide(a, b) or a == b:
                continue
            related += 1
            for c in algebras:
                assert decide(b, c) == decide(a, c)
    assert related >= 10


def test_morita_normal_form_separates_classes():
    algebras = [_alg(*entry) for entry in MORITA_POOL]
    for a in algebras:
        form = morita_normal_form(a)
        assert morita_normal_form(form) == form
        for b in algebras:
            assert (form == morita_normal_form(b)) is morita_decide(a, b)


def test_nc1_normal_form_ignores_inverse_and_cube_roots():
    forms = {morita_normal_form(_alg("NC1", alpha)) for alpha in (2, "2*eps", "2*eps^2", "1/2", "eps/2")}
    assert forms == {_alg("NC1", 2)}
    assert morita_normal_form(_alg("NC2")) == morita_normal_form(_alg("NC1", -1)) == _alg("NC1", "-eps")
