"""Torsion-form extraction and the half-flat taxonomy."""

from fractions import Fraction as F

import pytest

from conftest import (
    INV_SQRT2,
    REFERENCE_PAIRS,
    ROOT4_3,
    coupled_pair,
    double_pair,
    flat_pair,
    generic_halfflat_pair,
    nearly_kahler_pair,
)
from su3forms.hitchin import SU3Structure
from su3forms.liealg import catalog
from su3forms.scalars import scalar_div, scalar_is_zero
from su3forms.torsion import (
    COUPLED,
    DOUBLE,
    HALF_FLAT_GENERIC,
    NEARLY_KAHLER,
    NOT_HALF_FLAT,
    TORSION_FREE,
    classify,
    is_half_flat,
    torsion_forms,
)

TOL30 = F(1, 10 ** 30)


def _zero_form(form, tol=TOL30):
    return all(scalar_is_zero(c, tol) for c in form.coeffs.values())


def test_is_half_flat_reference_pairs():
    alg = catalog("su2su2")
    for fn in REFERENCE_PAIRS.values():
        omega, psi = fn()
        assert is_half_flat(alg, omega, psi)


def test_is_half_flat_rejects_flat_pair_on_curved_algebra():
    omega, psi = flat_pair()
    assert not is_half_flat(catalog("su2su2"), omega, psi)
    assert is_half_flat(catalog("abelian"), omega, psi)


def test_classify_double():
    td = classify(double_pair(), catalog("su2su2"))
    assert td.torsion_class == DOUBLE
    assert td.w1 == INV_SQRT2
    assert td.double_constant == INV_SQRT2
    assert td.coupled_constant is None
    assert _zero_form(td.w2, F(0))
    assert not _zero_form(td.w3, F(0))
    assert not td.quasi_kahler


def test_classify_nearly_kahler():
    td = classify(nearly_kahler_pair(), catalog("su2su2"))
    assert td.torsion_class == NEARLY_KAHLER
    assert td.w1 == F(-2)
    assert td.coupled_constant == F(3)
    assert td.double_constant == F(-2)
    assert _zero_form(td.w2, F(0))
    assert _zero_form(td.w3, F(0))
    assert td.quasi_kahler


def test_classify_generic_halfflat():
    td = classify(generic_halfflat_pair(), catalog("su2su2"))
    assert td.torsion_class == HALF_FLAT_GENERIC
    assert td.coupled_constant is None
    assert td.double_constant is None
    assert not _zero_form(td.w2)
    assert not _zero_form(td.w3)
    assert not td.quasi_kahler


def test_classify_coupled():
    td = classify(coupled_pair(), catalog("su2su2"))
    assert td.torsion_class == COUPLED
    assert td.coupled_constant is not None
    # d(omega) = c psi_+ with c the inverse fourth root of 3
    expected_c = scalar_div(F(1), ROOT4_3)
    assert scalar_is_zero(td.coupled_constant - expected_c, TOL30)
    assert not _zero_form(td.w2)
    assert _zero_form(td.w3)
    assert td.double_constant is None
    assert td.quasi_kahler


def test_classify_not_half_flat():
    td = classify(flat_pair(), catalog("su2su2"))
    assert td.torsion_class == NOT_HALF_FLAT
    assert td.w1 is None and td.w2 is None and td.w3 is None
    assert not td.quasi_kahler


def test_classify_torsion_free():
    td = classify(flat_pair(), catalog("abelian"))
    assert td.torsion_class == TORSION_FREE
    assert td.w1 == 0
    assert td.quasi_kahler


def test_torsion_equation_round_trip():
    alg = catalog("su2su2")
    for fn in REFERENCE_PAIRS.values():
        omega, psi = fn()
        s = SU3Structure(omega, psi)
        w1, w2, w3 = torsion_forms(s, alg)
        resid_do = alg.d(omega) - (w3 - psi.scale(w1 * F(3, 2)))
        assert _zero_form(resid_do)
        resid_dpm = alg.d(s.psi_minus) - (
            omega.wedge(omega).scale(w1) - w2.wedge(omega)
        )
        assert _zero_form(resid_dpm)
        assert _zero_form(alg.d(psi))


def test_extracted_torsion_forms_are_primitive():
    alg = catalog("su2su2")
    for fn in REFERENCE_PAIRS.values():
        omega, psi = fn()
        _, w2, w3 = torsion_forms(SU3Structure(omega, psi), alg)
        assert _zero_form(w2.wedge(omega).wedge(omega))
        assert _zero_form(w3.wedge(omega))


def test_coupled_residual_is_exactly_proportional():
    # the proportionality d(omega) = c psi_+ holds as a single exact constant
    alg = catalog("su2su2")
    for fn in (nearly_kahler_pair, coupled_pair):
        omega, psi = fn()
        td = classify(SU3Structure(omega, psi), alg)
        resid = alg.d(omega) - psi.scale(td.coupled_constant)
        assert _zero_form(resid)


def test_classify_accepts_bare_pair_tuple():
    td = classify(double_pair(), catalog("su2su2"))
    td2 = classify(SU3Structure(*double_pair()), catalog("su2su2"))
    assert td.torsion_class == td2.torsion_class == DOUBLE
