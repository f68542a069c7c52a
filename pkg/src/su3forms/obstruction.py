"""Half-flat obstruction test over the full spaces of closed 3- and 4-forms.

The test certifies non-existence: if some covector alpha makes the 6-form
alpha ^ (J~*_rho alpha) ^ sigma vanish for every closed 3-form rho and every
closed 4-form sigma, the algebra carries no half-flat structure.  The
quantifier is discharged exactly by expanding the top coefficient into a
polynomial in the coordinates of rho and sigma and checking that every
coefficient vanishes.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .errors import InexactScalars
from .exterior import DIM, KForm, TOP_WORD, format_form
from .groebner import Poly
Q0 = Fraction(0)
Q1 = Fraction(1)

_BASIS_VECTORS = [
    [Q1 if a == b else Q0 for a in range(DIM)] for b in range(DIM)
]


def jtilde_pullback(rho, alpha):
    """1-form X -> top coefficient of alpha ^ (i_X rho) ^ rho.

    This is the unnormalized adjoint action of the Hitchin endomorphism on
    covectors: alpha composed with K_rho, quadratic in rho.
    """
    coeffs = {}
    for i in range(DIM):
        gamma = alpha.wedge(rho.interior(_BASIS_VECTORS[i])).wedge(rho)
        c = gamma.coefficient(TOP_WORD)
        coeffs[(i + 1,)] = c
    return KForm(1, coeffs)


class ObstructionReport:
    """Outcome of the half-flat obstruction test for one covector."""

    def __init__(self, algebra_name, alpha, obstructed, witness_detail, notes=None):
        self.algebra_name = algebra_name
        self.alpha = alpha
        self.obstructed = obstructed
        self.witness_detail = witness_detail
        self.notes = list(notes or [])

    def render(self):
        lines = [
            "algebra: %s" % self.algebra_name,
            "alpha: %s" % format_form(self.alpha),
            "obstructed: %s" % ("true" if self.obstructed else "false"),
        ]
        if self.obstructed:
            lines.append(
                "witness: alpha ^ J~*alpha ^ sigma expands to the zero polynomial "
                "over all closed rho (dim %d) and sigma (dim %d)"
                % self.witness_detail
            )
        else:
            rho, sigma = self.witness_detail
            lines.append("counterexample rho: %s" % format_form(rho))
            lines.append("counterexample sigma: %s" % format_form(sigma))
        lines.extend("note: %s" % n for n in self.notes)
        return "\n".join(lines)


def _require_exact(algebra):
    for diff in algebra.differentials:
        for c in diff.coeffs.values():
            if not isinstance(c, (int, Fraction)):
                raise InexactScalars(
                    "obstruction test needs rational structure constants; "
                    "rationalize the algebra first"
                )


def _symbolic_combination(basis, variables, names):
    """Sum of fresh indeterminates times the given exact forms."""
    degree = basis[0].degree if basis else 3
    acc = {}
    for name, form in zip(names, basis):
        v = Poly.variable(variables, name)
        for w, c in form.coeffs.items():
            term = v * Fraction(c)
            acc[w] = acc.get(w, Poly.zero(variables)) + term
    return KForm(degree, acc)


DEFAULT_SEED = 20260814


def obstruction_test(algebra, alpha, seed=DEFAULT_SEED):
    """Decide whether alpha obstructs every half-flat structure on algebra."""
    if alpha.is_zero():
        raise ValueError("alpha must be a nonzero 1-form")
    _require_exact(algebra)
    rho_basis = algebra.closed_forms(3)
    sigma_basis = algebra.closed_forms(4)
    r_names = ["r%d" % (i + 1) for i in range(len(rho_basis))]
    s_names = ["s%d" % (i + 1) for i in range(len(sigma_basis))]
    variables = tuple(r_names + s_names)
    if not rho_basis or not sigma_basis:
        # no closed forms at all: the condition holds vacuously
        return ObstructionReport(
            algebra.name,
            alpha,
            True,
            (len(rho_basis), len(sigma_basis)),
            ["vacuous: closed-form space is trivial"],
        )
    rho = _symbolic_combination(rho_basis, variables, r_names)
    sigma = _symbolic_combination(sigma_basis, variables, s_names)
    jt = jtilde_pullback(rho, alpha)
    total = alpha.wedge(jt).wedge(sigma).coefficient(TOP_WORD)
    if isinstance(total, (int, Fraction)):
        total = Poly.constant(variables, total)
    if total.is_zero():
        return ObstructionReport(
            algebra.name, alpha, True, (len(rho_basis), len(sigma_basis))
        )
    # not obstructed: extract an explicit numeric counterexample pair
    assignment = _nonvanishing_point(total, seed)
    rho_num = KForm(3)
    for name, form in zip(r_names, rho_basis):
        rho_num = rho_num + form.scale(assignment[name])
    sigma_num = KForm(4)
    for name, form in zip(s_names, sigma_basis):
        sigma_num = sigma_num + form.scale(assignment[name])
    check = (
        alpha.wedge(jtilde_pullback(rho_num, alpha))
        .wedge(sigma_num)
        .coefficient(TOP_WORD)
    )
    if check == 0:
        raise AssertionError("counterexample failed numeric re-verification")
    return ObstructionReport(
        algebra.name,
        alpha,
        False,
        (rho_num, sigma_num),
        ["top coefficient at the counterexample: %s" % check],
    )


def _nonvanishing_point(poly, seed=DEFAULT_SEED):
    """Small rational point where the nonzero polynomial does not vanish."""
    names = poly.variables
    # try sparse 0/1 points suggested by the support first
    for exp, _ in sorted(poly.terms.items()):
        point = {
            n: Fraction(1) if e else Fraction(0) for n, e in zip(names, exp)
        }
        if poly.evaluate(point) != 0:
            return point
    rng = random.Random(seed)
    for _ in range(1000):
        point = {n: Fraction(rng.randint(-9, 9)) for n in names}
        if poly.evaluate(point) != 0:
            return point
    raise AssertionError("no nonvanishing point found for a nonzero polynomial")


def default_candidates():
    """e^i, then e^i + e^j and e^i - e^j for i < j."""
    singles = [KForm(1, {(i,): Q1}) for i in range(1, DIM + 1)]
    pairs = []
    for i, j in itertools.combinations(range(1, DIM + 1), 2):
        pairs.append(KForm(1, {(i,): Q1, (j,): Q1}))
        pairs.append(KForm(1, {(i,): Q1, (j,): -Q1}))
    return singles + pairs


def obstruction_scan(algebra, candidates=None, seed=DEFAULT_SEED):
    """First obstructed candidate's report, or None when none obstructs."""
    if candidates is None:
        candidates = default_candidates()
    for alpha in candidates:
        report = obstruction_test(algebra, alpha, seed)
        if report.obstructed:
            return report
    return None
