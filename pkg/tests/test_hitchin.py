"""Stable-form machinery: K, lambda, J, psi_minus, metric, validity flags."""

from fractions import Fraction as F

import pytest

from conftest import (
    E,
    INV_SQRT2,
    REFERENCE_PAIRS,
    SQRT3,
    coupled_pair,
    double_pair,
    flat_pair,
    generic_halfflat_pair,
    nearly_kahler_pair,
)
from su3forms.errors import Degenerate2Form, NotStable, NotSymmetric, WrongOrientation
from su3forms.exterior import KForm
from su3forms.hitchin import (
    CLASSIFY_TOL,
    SU3Structure,
    almost_complex,
    k_endo,
    lambda_of,
    metric,
    metric_wedge,
    psi_minus,
    validate,
)
from su3forms.liealg import MetricMatrix, jensen_metric
from su3forms.scalars import scalar_is_zero

TOL30 = F(1, 10 ** 30)


def _zero_form(form, tol=F(0)):
    return all(scalar_is_zero(c, tol) for c in form.coeffs.values())


def _matrices_close(a, b, tol=F(0)):
    return all(
        scalar_is_zero(a[i][j] - b[i][j], tol) for i in range(6) for j in range(6)
    )


def test_k_endo_flat_model():
    _, psi = flat_pair()
    k = k_endo(psi)
    # K e1 = -2 e2 and K e2 = 2 e1; columns hold the images
    assert [k[a][0] for a in range(6)] == [0, -2, 0, 0, 0, 0]
    assert [k[a][1] for a in range(6)] == [2, 0, 0, 0, 0, 0]


def test_k_endo_zero_form():
    k = k_endo(KForm.zero(3))
    assert all(k[i][j] == 0 for i in range(6) for j in range(6))


def test_lambda_values():
    _, psi = flat_pair()
    assert lambda_of(psi) == F(-4)
    assert lambda_of(E(1, 2, 3)) == 0  # decomposable forms are never stable


def test_lambda_quartic_scaling():
    _, psi = flat_pair()
    t = F(3, 2)
    assert lambda_of(psi.scale(t)) == t ** 4 * F(-4)


def test_almost_complex_flat_model():
    _, psi = flat_pair()
    j = almost_complex(psi)
    expected = {(1, 0): 1, (0, 1): -1, (3, 2): 1, (2, 3): -1, (5, 4): 1, (4, 5): -1}
    for a in range(6):
        for b in range(6):
            assert j[a][b] == expected.get((a, b), 0)
    # J is invariant under positive rescaling of the 3-form
    j2 = almost_complex(psi.scale(F(2)))
    assert _matrices_close(j, j2)


def test_almost_complex_squares_to_minus_identity():
    for fn in REFERENCE_PAIRS.values():
        _, psi = fn()
        j = almost_complex(psi)
        for a in range(6):
            for b in range(6):
                want = F(-1) if a == b else F(0)
                entry = sum(j[a][c] * j[c][b] for c in range(6))
                assert scalar_is_zero(entry - want, TOL30)


def test_almost_complex_errors():
    with pytest.raises(NotStable):
        almost_complex(E(1, 2, 3))
    # a stable form with positive invariant has the wrong orientation
    rho = E(1, 2, 3) + E(4, 5, 6)
    assert lambda_of(rho) > 0
    with pytest.raises(WrongOrientation):
        almost_complex(rho)


def test_psi_minus_flat_model():
    _, psi = flat_pair()
    pm = psi_minus(psi)
    assert pm == E(1, 3, 6) + E(1, 4, 5) + E(2, 3, 5) - E(2, 4, 6)


def test_quartic_point_lambda_and_psi_minus():
    # one-parameter family omega = g*(e14+e25+e36), psi = c*g*(...) has
    # lambda = -3 c^4 g^4; at g = -sqrt(3)/2 the constant c = 1 normalizes it
    gam = -(SQRT3 * F(1, 2))
    c = F(1)
    omega = (E(1, 4) + E(2, 5) + E(3, 6)).scale(gam)
    psi = (
        E(2, 3, 4) - E(1, 5, 6) - E(1, 3, 5) + E(2, 4, 6)
        + E(1, 2, 6) - E(3, 4, 5)
    ).scale(c * gam)
    s = SU3Structure(omega, psi)
    gam4 = gam * gam * gam * gam
    assert s.lam == F(-27, 16)
    assert s.lam == gam4 * c ** 4 * F(-3)
    expected_pm = (
        E(1, 2, 3).scale(F(2)) - E(1, 2, 6) + E(1, 3, 5) - E(1, 5, 6)
        - E(2, 3, 4) + E(2, 4, 6) - E(3, 4, 5) + E(4, 5, 6).scale(F(2))
    ).scale(c * gam * SQRT3 * F(1, 3))
    assert _zero_form(s.psi_minus - expected_pm)
    assert s.is_valid


def test_metric_flat_model_is_identity():
    omega, psi = flat_pair()
    assert metric(omega, psi) == MetricMatrix.identity()
    assert metric_wedge(omega, psi) == MetricMatrix.identity()


def test_metric_double_pair_is_identity():
    omega, psi = double_pair()
    assert metric(omega, psi) == MetricMatrix.identity()


def test_metric_nearly_kahler_pair_proportional_to_jensen():
    omega, psi = nearly_kahler_pair()
    h = metric(omega, psi)
    jm = jensen_metric()
    ratio = None
    for i in range(6):
        for j in range(6):
            if jm[i][j] == 0:
                assert scalar_is_zero(h[i][j], F(0))
            elif ratio is None:
                ratio = h[i][j] / jm[i][j]
            else:
                assert scalar_is_zero(h[i][j] - ratio * jm[i][j], F(0))
    assert ratio is not None and ratio > 0


def test_metric_generic_halfflat_pair_proportional_to_jensen():
    omega, psi = generic_halfflat_pair()
    h = metric(omega, psi)
    jm = jensen_metric()
    ratio = None
    for i in range(6):
        for j in range(6):
            if jm[i][j] == 0:
                assert scalar_is_zero(h[i][j], TOL30)
            elif ratio is None:
                ratio = h[i][j] / jm[i][j]
            else:
                assert scalar_is_zero(h[i][j] - ratio * jm[i][j], TOL30)
    assert ratio is not None


def test_metric_wedge_agrees_with_metric():
    for fn in REFERENCE_PAIRS.values():
        omega, psi = fn()
        a = metric(omega, psi)
        b = metric_wedge(omega, psi)
        assert _matrices_close(a, b, TOL30)


def test_metric_wedge_degenerate_omega():
    _, psi = flat_pair()
    with pytest.raises(Degenerate2Form):
        metric_wedge(E(1, 2), psi)


def test_validate_reference_pairs():
    for fn in REFERENCE_PAIRS.values():
        s = validate(*fn())
        assert s.is_valid, s.flags


def test_validate_flat_model():
    s = validate(*flat_pair())
    assert s.is_valid
    assert s.lam == F(-4)


def test_validate_failure_flags():
    s = validate(E(1, 2), E(1, 2, 3))
    assert not s.flags["stable2"]
    assert not s.flags["stable3"]
    assert not s.is_valid

    omega, psi = flat_pair()
    incompatible = validate(omega, E(1, 3, 4))
    assert not incompatible.flags["compatible"]

    unnormalized = validate(omega, psi.scale(F(2)))
    assert unnormalized.flags["stable3"]
    assert not unnormalized.flags["normalized"]
    assert not unnormalized.is_valid


def test_compatibility_extends_to_psi_minus():
    # omega ^ psi_+ = 0 together with lambda < 0 forces omega ^ psi_- = 0
    for fn in REFERENCE_PAIRS.values():
        omega, psi = fn()
        s = SU3Structure(omega, psi)
        assert _zero_form(omega.wedge(s.psi_minus), TOL30)


def test_metric_not_symmetric_error():
    omega = E(1, 2) + E(3, 4) + E(5, 6) + E(1, 3)
    _, psi = flat_pair()
    with pytest.raises(NotSymmetric):
        metric(omega, psi)


def test_structure_caches_derived_data():
    s = SU3Structure(*flat_pair())
    assert s.j_matrix is s.j_matrix
    assert s.metric is s.metric
