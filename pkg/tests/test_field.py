import cmath
from fractions import Fraction

import pytest

from src.algebra.errors import DivisionByZero, ParseError
from src.algebra.field import EPS, I, ONE, SQRT3, ZERO, ZETA, FieldElem, format_elem, parse_elem


def test_constants_are_exact():
    assert EPS ** 3 == 1
    assert EPS != 1
    assert 1 + EPS + EPS ** 2 == 0
    assert SQRT3 * SQRT3 == 3
    assert I * I == -1
    assert ZETA ** 12 == 1
    assert ZETA ** 6 == -1


def test_zeta_reduction():
    assert ZETA ** 4 == ZETA ** 2 - 1


def test_inverse_of_random_elements(rng):
    for _ in range(30):
        a = FieldElem(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)))
        if a.is_zero():
            continue
        assert a * a.inv() == ONE
        assert (a / a) == 1


def test_norm_is_rational():
    assert (ONE + SQRT3).norm == 4
    assert EPS.norm == 1


def test_conjugate_is_galois_action():
    assert ZETA.conjugate(5) == ZETA ** 5
    assert SQRT3.conjugate(5) == -SQRT3
    assert EPS.conjugate(7) == EPS


def test_zero_inverse_raises():
    with pytest.raises(DivisionByZero):
        ZERO.inv()
    with pytest.raises(DivisionByZero):
        ONE / 0


def test_mixed_arithmetic_with_int_and_fraction():
    assert 2 + EPS - 2 == EPS
    assert Fraction(1, 2) * FieldElem.coerce(4) == 2
    assert 1 / FieldElem.coerce(4) == Fraction(1, 4)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3", FieldElem.coerce(3)),
        ("-1/2", FieldElem.coerce(Fraction(-1, 2))),
        ("1+sqrt3", ONE + SQRT3),
        ("eps^2", EPS * EPS),
        ("z**3", I),
        ("2*z - z^3", SQRT3),
        ("eps^-1", EPS * EPS),
    ],
)
def test_parse_elem(text, expected):
    assert parse_elem(text) == expected


def test_format_is_accepted_by_parser():
    a = parse_elem("1/3 - 2*z + z^2 - 5/7*z^3")
    assert format_elem(a) == "1/3 - 2*z + z^2 - 5/7*z^3"
    assert parse_elem(str(a)) == a
    assert str(ZERO) == "0"
    assert str(FieldElem.coerce(-1)) == "-1"


@pytest.mark.parametrize("text", ["", "w", "2**sqrt3", "x.y", "[1]"])
def test_parse_rejects_garbage(text):
    with pytest.raises(ParseError):
        parse_elem(text)


def test_parse_division_by_zero():
    with pytest.raises(DivisionByZero):
        parse_elem("1/(1+eps+eps^2)")


def test_parse_caps_exponent():
    assert parse_elem("z^64") == ZETA ** 4
    assert parse_elem("2^-64") == FieldElem.coerce(Fraction(1, 2 ** 64))
    for text in ("2^65", "2^1000000000", "eps^-100"):
        with pytest.raises(ParseError):
            parse_elem(text)


def _random_elem(rng) -> FieldElem:
    return FieldElem(tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(4)))


def test_field_axioms_on_random_triples(rng):
    for _ in range(1000):
        a, b, c = _random_elem(rng), _random_elem(rng), _random_elem(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == ZERO
        if not a.is_zero():
            assert a * a.inv() == ONE


def _embed(a: FieldElem) -> complex:
    zeta = cmath.exp(1j * cmath.pi / 6)
    return sum(float(c) * zeta ** k for k, c in enumerate(a.coeffs))


def test_complex_embedding_of_constants():
    assert cmath.isclose(_embed(ZETA), cmath.exp(1j * cmath.pi / 6))
    assert cmath.isclose(_embed(EPS), cmath.exp(2j * cmath.pi / 3))
    assert cmath.isclose(_embed(SQRT3), 3 ** 0.5)
    assert cmath.isclose(_embed(I), 1j)


def test_complex_embedding_is_multiplicative(rng):
    for _ in range(200):
        a, b = _random_elem(rng), _random_elem(rng)
        assert cmath.isclose(_embed(a * b), _embed(a) * _embed(b), rel_tol=1e-9, abs_tol=1e-9)
        assert cmath.isclose(_embed(a + b), _embed(a) + _embed(b), rel_tol=1e-9, abs_tol=1e-9)
