"""Stable-form machinery: K_rho, lambda, J_rho, psi_minus and the induced metric.

All identifications are relative to the fixed volume Omega = e^{123456}; a
structure whose omega^3 is negatively oriented is reported as such rather
than silently reoriented.
"""

from fractions import Fraction

from .errors import Degenerate2Form, NotStable, NotSymmetric, WrongOrientation
from .exterior import DIM, KForm, five_form_iso
from .linalg import is_positive_definite, is_symmetric
from .scalars import (
    DEFAULT_DPS,
    BigFloat,
    scalar_div,
    scalar_is_zero,
    scalar_sign,
    scalar_sqrt,
)

Q0 = Fraction(0)
Q1 = Fraction(1)

CLASSIFY_TOL = Fraction(1, 10 ** 30)

_BASIS_VECTORS = [[Q1 if a == b else Q0 for a in range(DIM)] for b in range(DIM)]


def k_endo(rho):
    """Matrix of K_rho(v) = A((i_v rho) ^ rho); column j is K(e_j)."""
    cols = []
    for j in range(DIM):
        gamma = rho.interior(_BASIS_VECTORS[j]).wedge(rho)
        cols.append(five_form_iso(gamma))
    return [[cols[j][i] for j in range(DIM)] for i in range(DIM)]


def lambda_of(rho, k_matrix=None):
    """Hitchin's quartic invariant (1/6) tr K_rho^2, relative to Omega^2."""
    k = k_matrix if k_matrix is not None else k_endo(rho)
    total = Q0
    for i in range(DIM):
        for j in range(DIM):
            total = total + k[i][j] * k[j][i]
    return scalar_div(total, 6)


def almost_complex(rho, dps=DEFAULT_DPS, _lam=None, _k=None):
    """J_rho = -K_rho / sqrt(|lambda|); requires lambda < 0."""
    k = _k if _k is not None else k_endo(rho)
    lam = _lam if _lam is not None else lambda_of(rho, k)
    if scalar_is_zero(lam):
        raise NotStable("lambda(rho) = 0: 3-form is not stable")
    if scalar_sign(lam) > 0:
        raise WrongOrientation("lambda(rho) > 0: no almost complex structure")
    root = scalar_sqrt(-lam, dps)
    return [[scalar_div(-k[i][j], root) for j in range(DIM)] for i in range(DIM)]


def psi_minus(rho, dps=DEFAULT_DPS):
    """psi_-(X,Y,Z) = rho(JX, JY, JZ) for J = J_rho."""
    j = almost_complex(rho, dps)
    return rho.pullback(j)


def metric(omega, psi_plus, dps=DEFAULT_DPS):
    """H_{i,j} = omega(e_i, J e_j); symmetry is checked, not assumed."""
    j = almost_complex(psi_plus, dps)
    rows = []
    for i in range(DIM):
        row = []
        for col in range(DIM):
            jcol = [j[a][col] for a in range(DIM)]
            row.append(omega.evaluate([_BASIS_VECTORS[i], jcol]))
        rows.append(row)
    if not is_symmetric(rows):
        raise NotSymmetric("omega(., J.) is not symmetric: invalid pairing")
    from .liealg import MetricMatrix

    return MetricMatrix(rows)


def metric_wedge(omega, psi_plus):
    """H_{i,j} from h(X,Y) omega^3 = -3 (i_X omega)^(i_Y psi_+)^psi_+."""
    omega3 = omega.wedge(omega).wedge(omega)
    denom = omega3.top_coefficient()
    if scalar_is_zero(denom):
        raise Degenerate2Form("omega^3 = 0")
    rows = []
    for i in range(DIM):
        iw = omega.interior(_BASIS_VECTORS[i])
        row = []
        for j in range(DIM):
            ip = psi_plus.interior(_BASIS_VECTORS[j])
            num = iw.wedge(ip).wedge(psi_plus).top_coefficient()
            row.append(scalar_div(-3 * num, denom))
        rows.append(row)
    from .liealg import MetricMatrix

    if not is_symmetric(rows):
        raise NotSymmetric("wedge metric is not symmetric: invalid pairing")
    return MetricMatrix(rows)


class SU3Structure:
    """A candidate SU(3)-structure (omega, psi_plus) with lazy derived data."""

    def __init__(self, omega, psi_plus, dps=DEFAULT_DPS, tol=CLASSIFY_TOL):
        if omega.degree != 2 or psi_plus.degree != 3:
            raise ValueError("need a 2-form and a 3-form")
        self.omega = omega
        self.psi_plus = psi_plus
        self.dps = dps
        self.tol = tol
        self._cache = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def k_matrix(self):
        return self._get("k", lambda: k_endo(self.psi_plus))

    @property
    def lam(self):
        return self._get("lam", lambda: lambda_of(self.psi_plus, self.k_matrix))

    @property
    def omega_cubed(self):
        return self._get("w3", lambda: self.omega.wedge(self.omega).wedge(self.omega))

    @property
    def j_matrix(self):
        return self._get(
            "j",
            lambda: almost_complex(self.psi_plus, self.dps, _lam=self.lam, _k=self.k_matrix),
        )

    @property
    def psi_minus(self):
        return self._get("pm", lambda: self.psi_plus.pullback(self.j_matrix))

    @property
    def metric(self):
        return self._get("h", lambda: metric(self.omega, self.psi_plus, self.dps))

    @property
    def metric_wedge(self):
        return self._get("hw", lambda: metric_wedge(self.omega, self.psi_plus))

    def _zero_form(self, form):
        return all(scalar_is_zero(c, self.tol) for c in form.coeffs.values())

    def _zero_scalar(self, x):
        return scalar_is_zero(x, self.tol)

    @property
    def flags(self):
        return self._get("flags", self._compute_flags)

    def _compute_flags(self):
        flags = {
            "stable2": not self._zero_scalar(self.omega_cubed.top_coefficient()),
            "stable3": not self._zero_scalar(self.lam),
            "lambda_negative": False,
            "compatible": self._zero_form(self.omega.wedge(self.psi_plus)),
            "normalized": False,
            "metric_positive": False,
        }
        if flags["stable3"]:
            flags["lambda_negative"] = scalar_sign(self.lam) < 0
        if flags["stable3"] and flags["lambda_negative"]:
            resid = self.psi_plus.wedge(self.psi_minus) - self.omega_cubed.scale(
                Fraction(2, 3)
            )
            flags["normalized"] = self._zero_form(resid)
            try:
                h = self.metric
                flags["metric_positive"] = is_positive_definite(
                    [list(r) for r in h.rows], self.tol
                )
            except NotSymmetric:
                flags["metric_positive"] = False
        return flags

    @property
    def is_valid(self):
        return all(self.flags.values())

    def __repr__(self):
        return "SU3Structure(omega=%s, psi_plus=%s)" % (self.omega, self.psi_plus)


def validate(omega, psi_plus, dps=DEFAULT_DPS, tol=CLASSIFY_TOL):
    """Build the structure and force evaluation of all validity flags."""
    s = SU3Structure(omega, psi_plus, dps, tol)
    s.flags
    return s
