"""Exact scalar tower: rationals, quadratic surds, high-precision floats."""

from fractions import Fraction as F

import pytest

from su3forms.errors import NotExactSqrt, ParseError
from su3forms.scalars import (
    BigFloat,
    DEFAULT_DPS,
    Surd,
    ZERO_TOL,
    format_scalar,
    parse_scalar,
    scalar_div,
    scalar_is_zero,
    scalar_sign,
    scalar_sqrt,
    squarefree_decompose,
    to_bigfloat,
)

SQRT2 = Surd.sqrt_int(2)
SQRT3 = Surd.sqrt_int(3)
SQRT6 = Surd.sqrt_int(6)


def test_squarefree_decompose():
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(4) == (2, 1)
    assert squarefree_decompose(12) == (2, 3)
    assert squarefree_decompose(360) == (6, 10)


def test_surd_field_identities():
    assert (1 + SQRT2) * (SQRT2 - 1) == Surd.from_rational(F(1))
    assert (SQRT2 + SQRT3) * (SQRT2 + SQRT3) == 5 + 2 * SQRT6
    assert SQRT2 * SQRT3 == SQRT6
    assert SQRT2 * SQRT2 == Surd.from_rational(F(2))
    inv = (1 + SQRT2).inverse()
    assert inv == SQRT2 - 1
    assert (1 + SQRT2) * inv == Surd.from_rational(F(1))


def test_surd_division():
    a = F(1, 2) + SQRT3 * F(2, 5)
    b = 3 - SQRT3 * F(1, 7)
    q = a / b
    assert q * b == a


def test_surd_sign_and_order():
    assert (SQRT3 - SQRT2).sign() == 1
    assert (SQRT2 - SQRT3).sign() == -1
    assert (SQRT2 + SQRT3 - SQRT6 * F(99, 100)).sign() == 1
    assert Surd().sign() == 0
    assert SQRT2 < SQRT3
    assert SQRT6 > 2
    assert SQRT6 < F(5, 2)


def test_surd_exact_sqrt():
    assert Surd.from_rational(F(9, 4)).sqrt() == Surd.from_rational(F(3, 2))
    assert Surd.from_rational(F(12)).sqrt() == 2 * SQRT3
    # binomial surd square roots
    assert (5 + 2 * SQRT6).sqrt() == SQRT2 + SQRT3
    with pytest.raises(NotExactSqrt):
        (-SQRT2).sqrt()
    with pytest.raises(NotExactSqrt):
        (1 + SQRT2 + SQRT3).sqrt()


def test_scalar_sqrt_dispatch():
    assert scalar_sqrt(F(9, 16)) == F(3, 4)
    assert scalar_sqrt(F(3)) == SQRT3
    r = scalar_sqrt(SQRT3)  # 3^(1/4) is not a quadratic surd
    assert isinstance(r, BigFloat)
    assert scalar_is_zero(r * r - SQRT3, F(1, 10**50))
    with pytest.raises(NotExactSqrt):
        scalar_sqrt(F(-2))


def test_bigfloat_precision_carries_through_ops():
    x = to_bigfloat(F(1, 3), dps=64)
    y = x * 3 - 1
    assert scalar_is_zero(y, F(1, 10**60))
    s = scalar_sqrt(F(2)).to_mpf if False else to_bigfloat(SQRT2, dps=64)
    assert scalar_is_zero(s * s - 2, F(1, 10**60))


def test_bigfloat_negation_keeps_precision():
    # unary minus must not round through a low-precision ambient context
    s = to_bigfloat(SQRT2, dps=64)
    n = -s
    assert scalar_is_zero(n * n - 2, F(1, 10**60))
    assert scalar_is_zero(n + s, F(1, 10**60))
    k = to_bigfloat(SQRT3, dps=64)
    cube = (-k) * (-k) * (-k)
    assert scalar_is_zero(cube + 3 * SQRT3, F(1, 10**55))


def test_bigfloat_comparisons_and_sign():
    x = to_bigfloat(F(1, 4))
    assert x.sign() == 1
    assert (-x).sign() == -1
    assert x < F(1, 2)
    assert x > 0
    assert BigFloat(0).sign() == 0


def test_scalar_is_zero_tolerances():
    assert scalar_is_zero(F(0))
    assert not scalar_is_zero(F(1, 10**100))  # exact scalars ignore tolerance
    tiny = to_bigfloat(F(1, 10**45))
    assert scalar_is_zero(tiny)  # below ZERO_TOL = 1e-40
    assert not scalar_is_zero(to_bigfloat(F(1, 10**30)))
    assert ZERO_TOL == F(1, 10**40)


def test_scalar_sign_dispatch():
    assert scalar_sign(F(-3, 7)) == -1
    assert scalar_sign(0) == 0
    assert scalar_sign(SQRT3 - 1) == 1


def test_scalar_div_tower():
    assert scalar_div(F(1), F(3)) == F(1, 3)
    assert scalar_div(SQRT6, SQRT2) == SQRT3
    q = scalar_div(to_bigfloat(F(1)), 3)
    assert scalar_is_zero(q - F(1, 3), F(1, 10**60))
    with pytest.raises(ZeroDivisionError):
        scalar_div(F(1), F(0))


def test_scalar_div_generic_ring_element():
    from su3forms.groebner import Poly

    p = Poly.variable(("x",), "x")
    q = scalar_div(p, F(2))
    assert q == p * F(1, 2)


def test_parse_format_round_trip():
    samples = [
        F(0),
        F(-3),
        F(22, 7),
        SQRT2,
        -SQRT3 * F(5, 9),
        F(1, 2) + SQRT3 * F(2, 5),
        Surd.sqrt_int(330) * F(7, 660),
        1 - SQRT6,
    ]
    for x in samples:
        text = format_scalar(x)
        y = parse_scalar(text)
        assert y == x, (text, x, y)


def test_parse_scalar_rejects_garbage():
    for bad in ("", "sqrt()", "1//2", "sqrt(-4)", "x"):
        with pytest.raises(ParseError):
            parse_scalar(bad)


def test_bigfloat_format_is_deterministic():
    x = to_bigfloat(SQRT2, dps=48)
    assert format_scalar(x) == format_scalar(to_bigfloat(SQRT2, dps=48))
