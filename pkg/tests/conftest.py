"""Shared reference structures on su(2)+su(2) and the flat model."""

from fractions import Fraction as F

import mpmath
import pytest

from su3forms.exterior import KForm
from su3forms.hitchin import SU3Structure
from su3forms.liealg import catalog
from su3forms.scalars import BigFloat, Surd, scalar_sqrt

E = KForm.basis

SQRT2 = Surd.sqrt_int(2)
SQRT3 = Surd.sqrt_int(3)
INV_SQRT2 = SQRT2 * F(1, 2)
ROOT4_3 = scalar_sqrt(SQRT3)  # 3^(1/4), inexact


def _root48_6_half(dps=64):
    # (4^(1/3) * 3^(1/6)) / 2 = 48^(1/6) / 2
    with mpmath.workdps(dps + 10):
        return BigFloat(mpmath.root(48, 6) / 2, dps)


def flat_pair():
    """The constant-coefficient model pair with identity metric."""
    omega = E(1, 2) + E(3, 4) + E(5, 6)
    psi = E(1, 3, 5) - E(1, 4, 6) - E(2, 3, 6) - E(2, 4, 5)
    return omega, psi


def double_pair():
    """Half-flat pair inducing the identity metric; d(psi_-) = omega^2/sqrt(2)."""
    omega = -E(1, 4) - E(2, 5) - E(3, 6)
    psi = (
        E(1, 2, 3) - E(1, 5, 6) + E(2, 4, 6) - E(3, 4, 5)
        + E(1, 2, 6) - E(1, 3, 5) + E(2, 3, 4) - E(4, 5, 6)
    ).scale(INV_SQRT2)
    return omega, psi


def nearly_kahler_pair():
    """The nearly Kahler pair: d(omega) = 3 psi_+ and d(psi_-) = -2 omega^2."""
    omega = (E(1, 4) + E(2, 5) + E(3, 6)).scale(-(SQRT3 * F(1, 18)))
    psi = (
        -E(2, 3, 4) + E(1, 5, 6) + E(1, 3, 5) - E(2, 4, 6)
        - E(1, 2, 6) + E(3, 4, 5)
    ).scale(SQRT3 * F(1, 54))
    return omega, psi


def generic_halfflat_pair():
    """Half-flat pair that is neither coupled nor double (inexact scale)."""
    omega = (-E(1, 4) + E(2, 5) + E(3, 6)).scale(_root48_6_half())
    psi = (
        E(1, 2, 3) + E(1, 3, 5) - E(2, 4, 6) - E(1, 2, 6)
        + E(3, 4, 5) - E(4, 5, 6)
    )
    return omega, psi


def coupled_pair():
    """Coupled pair with psi_+ = 3^(1/4) d(omega)."""
    omega = -E(1, 6).scale(SQRT3) - E(2, 4) - E(2, 5) - E(3, 5)
    psi = (
        (E(1, 4, 5) - E(2, 3, 6)).scale(SQRT3)
        + E(1, 3, 4) + E(2, 5, 6) + E(1, 3, 5) - E(2, 4, 6)
        - E(1, 2, 5) - E(3, 4, 6)
    ).scale(ROOT4_3)
    return omega, psi


REFERENCE_PAIRS = {
    "double": double_pair,
    "nearly_kahler": nearly_kahler_pair,
    "generic_halfflat": generic_halfflat_pair,
    "coupled": coupled_pair,
}


@pytest.fixture
def su2su2():
    return catalog("su2su2")


@pytest.fixture
def flat_structure():
    return SU3Structure(*flat_pair())
