"""Torsion forms and the half-flat taxonomy on a fixed Lie algebra.

For a half-flat structure the exterior derivatives satisfy
    d(omega)  = -(3/2) w1 psi_+ + w3,
    d(psi_+)  = 0,
    d(psi_-)  = w1 omega^2 - w2 ^ omega,
with w2 primitive (1,1) and w3 primitive (2,1)+(1,2).
"""

from fractions import Fraction

from .errors import InconsistentTorsion
from .exterior import KForm, basis_words
from .hitchin import CLASSIFY_TOL, SU3Structure
from .linalg import solve
from .scalars import scalar_div, scalar_is_zero

Q0 = Fraction(0)

TORSION_FREE = "TorsionFree"
NEARLY_KAHLER = "NearlyKahler"
COUPLED = "Coupled"
DOUBLE = "Double"
HALF_FLAT_GENERIC = "HalfFlatGeneric"
NOT_HALF_FLAT = "NotHalfFlat"


class TorsionData:
    """Extracted torsion forms plus the classification verdict."""

    __slots__ = (
        "w1",
        "w2",
        "w3",
        "torsion_class",
        "coupled_constant",
        "double_constant",
        "quasi_kahler",
    )

    def __init__(self, w1, w2, w3, torsion_class, coupled_constant=None, double_constant=None):
        self.w1 = w1
        self.w2 = w2
        self.w3 = w3
        self.torsion_class = torsion_class
        self.coupled_constant = coupled_constant
        self.double_constant = double_constant
        self.quasi_kahler = torsion_class in (TORSION_FREE, NEARLY_KAHLER, COUPLED)

    def __repr__(self):
        return "TorsionData(%s, w1=%s)" % (self.torsion_class, self.w1)


def is_half_flat(algebra, omega, psi_plus, tol=CLASSIFY_TOL):
    """d(psi_+) = 0 and d(omega^2) = 0 under the algebra's differential."""
    dpsi = algebra.d(psi_plus)
    dww = algebra.d(omega.wedge(omega))
    return _form_zero(dpsi, tol) and _form_zero(dww, tol)


def _form_zero(form, tol):
    return all(scalar_is_zero(c, tol) for c in form.coeffs.values())


def torsion_forms(structure, algebra, tol=CLASSIFY_TOL):
    """Extract (w1, w2, w3) for a validated half-flat structure.

    w1 comes from d(psi_-)^omega = w1 omega^3 (the w2 term dies against omega^2);
    the cross-check -d(omega)^psi_- = w1 omega^3 uses psi_+^psi_- = (2/3)omega^3
    and w3^psi_- = 0.  w2 is the unique solution of w2^omega = w1 omega^2 - d(psi_-).
    """
    omega, psi_plus = structure.omega, structure.psi_plus
    psi_m = structure.psi_minus
    omega3_top = structure.omega_cubed.top_coefficient()
    dpm = algebra.d(psi_m)
    w1 = scalar_div(dpm.wedge(omega).top_coefficient(), omega3_top)
    domega = algebra.d(omega)
    w1_check = scalar_div(-domega.wedge(psi_m).top_coefficient(), omega3_top)
    if not scalar_is_zero(w1 - w1_check, tol):
        raise InconsistentTorsion(
            "w1 extractions disagree: %s vs %s" % (w1, w1_check)
        )
    w3 = domega + psi_plus.scale(w1 * Fraction(3, 2))
    rhs_form = omega.wedge(omega).scale(w1) - dpm
    w2 = _solve_wedge_omega(omega, rhs_form)
    return w1, w2, w3


def _solve_wedge_omega(omega, rhs):
    """Unique 2-form x with x^omega = rhs (wedging by omega is injective on 2-forms)."""
    words2 = basis_words(2)
    words4 = basis_words(4)
    row_of = {w: i for i, w in enumerate(words4)}
    mat = [[Q0] * len(words2) for _ in words4]
    for ci, w in enumerate(words2):
        prod = KForm.basis(*w).wedge(omega)
        for ww, c in prod.coeffs.items():
            mat[row_of[ww]][ci] = c
    rhs_cols = [[rhs.coeffs.get(w, Q0)] for w in words4]
    sol = solve(mat, rhs_cols)
    coeffs = {w: sol[i][0] for i, w in enumerate(words2)}
    return KForm(2, coeffs)


def classify(structure, algebra, tol=CLASSIFY_TOL):
    """Assign the torsion class of a validated structure on the given algebra."""
    if isinstance(structure, tuple):
        structure = SU3Structure(*structure)
    omega, psi_plus = structure.omega, structure.psi_plus
    if not is_half_flat(algebra, omega, psi_plus, tol):
        return TorsionData(None, None, None, NOT_HALF_FLAT)
    w1, w2, w3 = torsion_forms(structure, algebra, tol)
    domega = algebra.d(omega)
    dpm = algebra.d(structure.psi_minus)
    w1_zero = scalar_is_zero(w1, tol)
    w2_zero = _form_zero(w2, tol)
    w3_zero = _form_zero(w3, tol)
    coupled_c = None
    double_k = None
    if _form_zero(domega, tol) and _form_zero(dpm, tol):
        cls = TORSION_FREE
    elif w2_zero and w3_zero and not w1_zero:
        cls = NEARLY_KAHLER
        coupled_c = w1 * Fraction(-3, 2)
        double_k = w1
    elif w3_zero and not w1_zero and not w2_zero:
        cls = COUPLED
        coupled_c = w1 * Fraction(-3, 2)
    elif w2_zero and not w1_zero and not w3_zero:
        cls = DOUBLE
        double_k = w1
    else:
        cls = HALF_FLAT_GENERIC
    return TorsionData(w1, w2, w3, cls, coupled_c, double_k)
