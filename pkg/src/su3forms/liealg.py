"""Six-dimensional Lie algebras given by their Chevalley-Eilenberg differentials.

An algebra is stored through the 2-forms de^1..de^6; the bracket follows from
d alpha(X, Y) = -alpha([X, Y]).  The built-in catalog covers the rank 1..3
solvable algebras carrying a standard Einstein inner product (s1..s13),
su(2)+su(2), the nilpotent algebra a6_99 and the abelian algebra.
"""

from fractions import Fraction

from .errors import (
    DegreeError,
    NotRationalizable,
    ParamOutOfRange,
    ParseError,
    UnknownName,
)
from .exterior import DIM, KForm, basis_words, format_form, parse_form
from .linalg import invert, is_symmetric, kernel_basis
from .scalars import (
    BigFloat,
    Surd,
    _prime_factors,
    is_exact,
    scalar_div,
    scalar_is_zero,
    scalar_sqrt,
)

Q0 = Fraction(0)
Q1 = Fraction(1)


class LieAlgebra:
    """A 6-dimensional Lie algebra plus bookkeeping about where it came from."""

    def __init__(self, name, differentials, params=None, check=True):
        if len(differentials) != DIM:
            raise ValueError("need exactly 6 differentials")
        for f in differentials:
            if f.degree != 2:
                raise DegreeError("differentials must be 2-forms")
        self.name = name
        self.differentials = tuple(differentials)
        self.params = dict(params or {})
        if check:
            bad = self.jacobi_failures()
            if bad:
                words = ", ".join("d(de^%d) != 0" % i for i, _ in bad)
                raise ValueError("structure constants violate Jacobi: %s" % words)

    # -- differential ----------------------------------------------------

    def d_word(self, word):
        """d(e^{word}) as a (k+1)-form."""
        k = len(word)
        total = KForm(k + 1)
        for pos in range(k):
            pre = KForm.basis(*word[:pos]) if pos else None
            post = KForm.basis(*word[pos + 1 :]) if pos + 1 < k else None
            piece = self.differentials[word[pos] - 1]
            if pre is not None:
                piece = pre.wedge(piece)
            if post is not None:
                piece = piece.wedge(post)
            total = total + (piece if pos % 2 == 0 else -piece)
        return total

    def d(self, form):
        """Chevalley-Eilenberg differential on a k-form, k <= 5."""
        if form.degree >= DIM:
            raise DegreeError("d on a top form is identically zero")
        total = KForm(form.degree + 1)
        for word, c in form.coeffs.items():
            total = total + self.d_word(word).scale(c)
        return total

    def jacobi_failures(self):
        """List of (i, d(de^i)) for the indices where d^2 e^i != 0."""
        out = []
        for i in range(1, DIM + 1):
            dd = self.d(self.differentials[i - 1])
            if not dd.is_zero():
                out.append((i, dd))
        return out

    def is_lie_algebra(self):
        return not self.jacobi_failures()

    def is_unimodular(self):
        """tr(ad_X) = 0 for all X; equivalently every de^i has no e^{i,*} trace."""
        for j in range(1, DIM + 1):
            tr = Q0
            for i in range(1, DIM + 1):
                w = (min(i, j), max(i, j))
                if i == j:
                    continue
                c = self.differentials[i - 1].coefficient(w)
                # coefficient of e^{ij} in de^i contributes c_{ij}^i
                sgn = 1 if i < j else -1
                tr = tr + sgn * c
            if not scalar_is_zero(tr):
                return False
        return True

    # -- structure constants and curvature --------------------------------

    def structure_constants(self):
        """c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k (1-based dicts)."""
        c = {}
        for i in range(1, DIM + 1):
            for j in range(i + 1, DIM + 1):
                row = {}
                for k in range(1, DIM + 1):
                    v = self.differentials[k - 1].coefficient((i, j))
                    if not scalar_is_zero(v, Fraction(0)):
                        row[k] = -v
                if row:
                    c.setdefault(i, {})[j] = row
        return c

    def brackets_matrix(self):
        """b[i][j] = [e_i, e_j] as length-6 coefficient lists (0-based)."""
        sc = self.structure_constants()
        b = [[None] * DIM for _ in range(DIM)]
        zero = [Q0] * DIM
        for i in range(DIM):
            for j in range(DIM):
                b[i][j] = list(zero)
        for i, rows in sc.items():
            for j, row in rows.items():
                for k, v in row.items():
                    b[i - 1][j - 1][k - 1] = v
                    b[j - 1][i - 1][k - 1] = -v
        return b

    def ricci(self, metric):
        """Ricci tensor of the left invariant metric (Koszul formula, exact)."""
        h = metric.rows if isinstance(metric, MetricMatrix) else metric
        br = self.brackets_matrix()
        hinv = invert([list(r) for r in h])

        def pair(u, v):
            # h(u, v) for coefficient vectors
            total = Q0
            for a in range(DIM):
                if scalar_is_zero(u[a], Fraction(0)):
                    continue
                for b in range(DIM):
                    total = total + u[a] * h[a][b] * v[b]
            return total

        ebasis = [[Q1 if a == b else Q0 for b in range(DIM)] for a in range(DIM)]
        gamma = [[None] * DIM for _ in range(DIM)]
        for i in range(DIM):
            for j in range(DIM):
                w = []
                for l in range(DIM):
                    val = (
                        pair(br[i][j], ebasis[l])
                        - pair(br[j][l], ebasis[i])
                        + pair(br[l][i], ebasis[j])
                    )
                    w.append(val)
                gamma[i][j] = [
                    sum((hinv[k][l] * w[l] for l in range(DIM)), Q0) * Fraction(1, 2)
                    for k in range(DIM)
                ]
        c = [[[Q0] * DIM for _ in range(DIM)] for _ in range(DIM)]
        for i in range(DIM):
            for j in range(DIM):
                for k in range(DIM):
                    c[i][j][k] = br[i][j][k]
        ric = [[Q0] * DIM for _ in range(DIM)]
        for j in range(DIM):
            for k in range(DIM):
                total = Q0
                for i in range(DIM):
                    for m in range(DIM):
                        total = total + gamma[j][k][m] * gamma[i][m][i]
                        total = total - gamma[i][k][m] * gamma[j][m][i]
                        total = total - c[i][j][m] * gamma[m][k][i]
                ric[j][k] = total
        return ric

    def einstein_constant(self, metric, tol=None):
        """Return (is_einstein, mu) for Ric = mu * h; mu is None when not Einstein."""
        h = metric.rows if isinstance(metric, MetricMatrix) else metric
        ric = self.ricci(h)
        mu = None
        for i in range(DIM):
            if not scalar_is_zero(h[i][i], Fraction(0)):
                mu = scalar_div(ric[i][i], h[i][i])
                break
        if mu is None:
            return False, None
        for i in range(DIM):
            for j in range(DIM):
                diff = ric[i][j] - mu * h[i][j]
                if tol is not None and isinstance(diff, BigFloat):
                    ok = scalar_is_zero(diff, tol)
                else:
                    ok = scalar_is_zero(diff)
                if not ok:
                    return False, None
        return True, mu

    def closed_forms(self, k):
        """Basis of the closed k-forms as a list of KForm."""
        if not 1 <= k <= 5:
            raise DegreeError("closed_forms needs 1 <= k <= 5")
        cols = basis_words(k)
        rows = basis_words(k + 1)
        row_index = {w: r for r, w in enumerate(rows)}
        mat = [[Q0] * len(cols) for _ in rows]
        for ci, w in enumerate(cols):
            dw = self.d_word(w)
            for ww, c in dw.coeffs.items():
                mat[row_index[ww]][ci] = c
        basis = kernel_basis(mat)
        out = []
        for vec in basis:
            out.append(KForm(k, {w: v for w, v in zip(cols, vec) if not scalar_is_zero(v, Fraction(0))}))
        return out

    def betti_one(self):
        return len(self.closed_forms(1))

    # -- change of basis ---------------------------------------------------

    def rescale_basis(self, mu):
        """New coframe f^i = mu_i e^i; returns the transported LieAlgebra."""
        diffs = []
        for i in range(1, DIM + 1):
            de = self.differentials[i - 1]
            out = {}
            for (j, k), c in de.coeffs.items():
                out[(j, k)] = c * scalar_div(mu[i - 1], mu[j - 1] * mu[k - 1])
            diffs.append(KForm(2, out))
        return LieAlgebra(self.name + "_rescaled", diffs, self.params, check=False)

    def rationalize(self):
        """Diagonal rescaling making every structure constant rational.

        Returns (algebra, mu, metric_diag): the transported algebra, the list of
        scale factors mu_i (each sqrt of a squarefree integer) and the diagonal
        of the transported standard inner product sum (e^i)^2, namely 1/mu_i^2.
        """
        terms = []
        primes = set()
        for i in range(1, DIM + 1):
            for (j, k), c in self.differentials[i - 1].coeffs.items():
                if isinstance(c, (int, Fraction)):
                    terms.append((i, j, k, 1))
                    continue
                if isinstance(c, Surd):
                    if len(c.terms) > 1:
                        raise NotRationalizable(
                            "mixed radicands in de^%d coefficient %s" % (i, c)
                        )
                    (d,) = c.terms
                    terms.append((i, j, k, d))
                    primes.update(_prime_factors(d))
                else:
                    raise NotRationalizable("inexact structure constant in de^%d" % i)
        m = [1] * DIM
        for p in sorted(primes):
            # every nonzero coefficient constrains every tracked prime
            eqs = [(i, j, k, 1 if d % p == 0 else 0) for i, j, k, d in terms]
            sol = _solve_gf2(eqs)
            if sol is None:
                raise NotRationalizable("no parity solution for prime %d" % p)
            for idx in range(DIM):
                if sol[idx]:
                    m[idx] *= p
        mu = [Surd.sqrt_int(v) for v in m]
        new = self.rescale_basis(mu)
        for i in range(1, DIM + 1):
            for w, c in new.differentials[i - 1].coeffs.items():
                if isinstance(c, Surd):
                    if not c.is_rational():
                        raise NotRationalizable(
                            "residual irrational coefficient %s on de^%d" % (c, i)
                        )
        diffs = [f.map_coeffs(_to_fraction) for f in new.differentials]
        algebra = LieAlgebra(self.name + "_rational", diffs, self.params, check=False)
        metric_diag = [Fraction(1, v) for v in m]
        return algebra, mu, metric_diag

    def __repr__(self):
        return "LieAlgebra(%r)" % self.name


def _to_fraction(c):
    if isinstance(c, Surd):
        return c.to_fraction()
    if isinstance(c, int):
        return Fraction(c)
    return c


def _solve_gf2(eqs):
    """Solve x_i + x_j + x_k = 1 (mod 2) style systems over 6 unknowns.

    eqs: list of (i, j, k, rhs) with 1-based indices; repeated indices cancel.
    Returns one solution as a list of 6 bits, or None.
    """
    rows = []
    for i, j, k, rhs in eqs:
        vec = [0] * DIM
        for idx in (i, j, k):
            vec[idx - 1] ^= 1
        rows.append((vec, rhs & 1))
    pivots = []
    for col in range(DIM):
        piv = None
        for r in range(len(pivots), len(rows)):
            if rows[r][0][col]:
                piv = r
                break
        if piv is None:
            continue
        r0 = len(pivots)
        rows[r0], rows[piv] = rows[piv], rows[r0]
        for r in range(len(rows)):
            if r != r0 and rows[r][0][col]:
                vec = [a ^ b for a, b in zip(rows[r][0], rows[r0][0])]
                rows[r] = (vec, rows[r][1] ^ rows[r0][1])
        pivots.append(col)
    sol = [0] * DIM
    for r0, col in enumerate(pivots):
        sol[col] = rows[r0][1]
    for vec, rhs in rows:
        if all(v == 0 for v in vec) and rhs:
            return None
    return sol


class MetricMatrix:
    """Symmetric 6x6 matrix of scalars used as an inner product."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if len(rows) != DIM or any(len(r) != DIM for r in rows):
            raise ValueError("metric must be 6x6")
        if not is_symmetric(rows):
            from .errors import NotSymmetric

            raise NotSymmetric("metric matrix is not symmetric")
        self.rows = [tuple(r) for r in rows]

    @classmethod
    def identity(cls):
        return cls([[Q1 if i == j else Q0 for j in range(DIM)] for i in range(DIM)])

    @classmethod
    def diagonal(cls, entries):
        return cls([[entries[i] if i == j else Q0 for j in range(DIM)] for i in range(DIM)])

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        if not isinstance(other, MetricMatrix):
            return NotImplemented
        for i in range(DIM):
            for j in range(DIM):
                if not scalar_is_zero(self.rows[i][j] - other.rows[i][j], Fraction(0)):
                    return False
        return True

    def __hash__(self):
        return hash(str(self.rows))

    def __repr__(self):
        return "MetricMatrix(%s)" % (self.rows,)


def jensen_metric():
    """The second known Einstein inner product on su(2)+su(2)."""
    a = Surd({3: Fraction(2, 3)})
    b = Surd({3: Fraction(-1, 3)})
    rows = [[Q0] * DIM for _ in range(DIM)]
    for i in range(3):
        rows[i][i] = a
        rows[i + 3][i + 3] = a
        rows[i][i + 3] = b
        rows[i + 3][i] = b
    return MetricMatrix(rows)


# -- catalog ----------------------------------------------------------------


def _rt(n):
    return Surd.sqrt_int(n)


def _check_r(params):
    r = params.get("r", Q1)
    if isinstance(r, (int, float)):
        r = Fraction(r)
    if is_exact(r):
        if not r > 0:
            raise ParamOutOfRange("parameter r must be positive")
    elif isinstance(r, BigFloat):
        if not r.value > 0:
            raise ParamOutOfRange("parameter r must be positive")
    return r


def _terms_to_diffs(rows):
    diffs = []
    for i in range(1, DIM + 1):
        terms = rows.get(i, [])
        out = {}
        for c, w in terms:
            out[w] = out.get(w, Q0) + c
        diffs.append(KForm(2, out))
    return diffs


def _s1(r):
    a = scalar_div(r, 2 * _rt(2))
    b = scalar_div(r, _rt(2))
    return {
        1: [(a, (1, 6))],
        2: [(a, (2, 6))],
        3: [(a, (3, 6))],
        4: [(a, (4, 6))],
        5: [(-b, (1, 2)), (-b, (3, 4)), (b, (5, 6))],
    }


def _s2(r):
    return {
        1: [(2 * r * _sqf(2, 105), (1, 6))],
        2: [(r * _sqf(3, 70), (2, 6))],
        3: [(scalar_div(-2 * r, _rt(7)), (1, 2)), (r * _sqf(7, 30), (3, 6))],
        4: [(2 * r * _sqf(3, 70), (4, 6))],
        5: [
            (-r * _sqf(2, 7), (1, 4)),
            (scalar_div(-2 * r, _rt(7)), (2, 3)),
            (r * _sqf(10, 21), (5, 6)),
        ],
    }


def _s3(r):
    w = _rt(55)
    return {
        1: [(scalar_div(r, w), (1, 6))],
        2: [(scalar_div(2 * r, w), (2, 6))],
        3: [(-r * _sqf(6, 11), (1, 2)), (scalar_div(3 * r, w), (3, 6))],
        4: [(-r * _sqf(6, 11), (1, 3)), (scalar_div(4 * r, w), (4, 6))],
        5: [
            (scalar_div(-2 * r, _rt(11)), (1, 4)),
            (scalar_div(-2 * r, _rt(11)), (2, 3)),
            (scalar_div(5 * r, w), (5, 6)),
        ],
    }


def _s4(r):
    s6 = _rt(6)
    return {
        1: [(r * s6 * Fraction(1, 30), (1, 6))],
        2: [(r * s6 * Fraction(3, 20), (2, 6))],
        3: [(scalar_div(-r, _rt(2)), (1, 2)), (r * s6 * Fraction(11, 60), (3, 6))],
        4: [(-r * _sqf(2, 3), (1, 3)), (r * s6 * Fraction(13, 60), (4, 6))],
        5: [(scalar_div(-r, _rt(2)), (1, 4)), (r * s6 * Fraction(1, 4), (5, 6))],
    }


def _s5(r):
    return {
        1: [(scalar_div(r, 3 * _rt(2)), (1, 6))],
        2: [(scalar_div(r, 2 * _rt(2)), (2, 6))],
        3: [(scalar_div(r, 2 * _rt(2)), (3, 6))],
        4: [(scalar_div(-r, _rt(2)), (1, 2)), (scalar_div(5 * r, 6 * _rt(2)), (4, 6))],
        5: [(scalar_div(-r, _rt(2)), (1, 3)), (scalar_div(5 * r, 6 * _rt(2)), (5, 6))],
    }


def _s6(r):
    return {
        1: [(scalar_div(r, 2 * _rt(6)), (1, 6))],
        2: [(scalar_div(r, 2 * _rt(6)), (2, 6))],
        3: [(-r * _sqf(2, 3), (1, 2)), (scalar_div(r, _rt(6)), (3, 6))],
        4: [(scalar_div(-r, _rt(2)), (1, 3)), (r * _rt(6) * Fraction(1, 4), (4, 6))],
        5: [(scalar_div(-r, _rt(2)), (2, 3)), (r * _rt(6) * Fraction(1, 4), (5, 6))],
    }


def _s7(r):
    w = _rt(39)
    return {
        1: [(scalar_div(r, w), (1, 6))],
        2: [(scalar_div(2 * r, w), (2, 6))],
        3: [(-r * _sqf(2, 3), (1, 2)), (scalar_div(3 * r, w), (3, 6))],
        4: [(-r * _sqf(2, 3), (1, 3)), (scalar_div(4 * r, w), (4, 6))],
        5: [(scalar_div(3 * r, w), (5, 6))],
    }


def _s8(r):
    return {
        1: [(r * _sqf(2, 21), (1, 6))],
        2: [(r * _sqf(2, 21), (2, 6))],
        3: [(-r * _sqf(2, 3), (1, 2)), (2 * r * _sqf(2, 21), (3, 6))],
        4: [(r * _sqf(3, 14), (4, 6))],
        5: [(r * _sqf(3, 14), (5, 6))],
    }


def _s9(r):
    a = scalar_div(r, _rt(5))
    return {i: [(a, (i, 6))] for i in range(1, 6)}


def _s10(r, t):
    if isinstance(t, (int, float)):
        t = Fraction(t)
    _require_range(t, Q0, scalar_div(1, _rt(22)), "t")
    tt = t * t
    u = scalar_sqrt(Fraction(1, 2) - 11 * tt)
    a = scalar_div(2 * r, _rt(33))
    return {
        1: [(a, (1, 5)), (r * t, (1, 6)), (r * u, (2, 6))],
        2: [(a, (2, 5)), (r * u, (1, 6)), (r * t, (2, 6))],
        3: [(-r * _sqf(2, 3), (1, 2)), (scalar_div(4 * r, _rt(33)), (3, 5)), (2 * r * t, (3, 6))],
        4: [(scalar_div(3 * r, _rt(33)), (4, 5)), (-4 * r * t, (4, 6))],
    }


def _s11(r):
    w = _rt(30)
    return {
        1: [(scalar_div(r, w), (1, 5)), (scalar_div(3 * r, w), (1, 6))],
        2: [(scalar_div(2 * r, w), (2, 5)), (scalar_div(-4 * r, w), (2, 6))],
        3: [(-r * _sqf(2, 3), (1, 2)), (scalar_div(3 * r, w), (3, 5)), (scalar_div(-r, w), (3, 6))],
        4: [(-r * _sqf(2, 3), (1, 3)), (scalar_div(4 * r, w), (4, 5)), (scalar_div(2 * r, w), (4, 6))],
    }


def _s12(r, s, t):
    if isinstance(s, (int, float)):
        s = Fraction(s)
    if isinstance(t, (int, float)):
        t = Fraction(t)
    _require_range(s, Q0, t, "s")
    _require_range(t, s, Q1, "t")
    w = scalar_sqrt(1 + s * s + t * t)
    half = r * Fraction(1, 2)
    ks = [1 + s + t, 1 - s - t, t - s - 1, s - t - 1]
    rows = {}
    for i, k in enumerate(ks, start=1):
        rows[i] = [(half, (i, 5)), (scalar_div(r * k, 2 * w), (i, 6))]
    return rows


def _s13(r):
    a = scalar_div(r, _rt(3))
    b = scalar_div(r, _rt(2))
    c = scalar_div(r, _rt(6))
    return {
        1: [(a, (1, 4)), (scalar_div(-2 * r, _rt(6)), (1, 6))],
        2: [(a, (2, 4)), (b, (2, 5)), (c, (2, 6))],
        3: [(a, (3, 4)), (-b, (3, 5)), (c, (3, 6))],
    }


def _sqf(p, q):
    """sqrt(p/q) as an exact surd."""
    return scalar_sqrt(Fraction(p, q))


def _require_range(x, lo, hi, name):
    # mixed Fraction/Surd/BigFloat comparisons resolve through reflected dunders
    if x < lo or x > hi:
        raise ParamOutOfRange("parameter %s out of range" % name)


def _su2su2(_params):
    return {
        1: [(Q1, (2, 3))],
        2: [(-Q1, (1, 3))],
        3: [(Q1, (1, 2))],
        4: [(Q1, (5, 6))],
        5: [(-Q1, (4, 6))],
        6: [(Q1, (4, 5))],
    }


def _a6_99(_params):
    return {
        1: [(Fraction(5), (1, 6)), (Q1, (2, 5)), (Q1, (3, 4))],
        2: [(Fraction(4), (2, 6)), (Q1, (3, 5))],
        3: [(Fraction(3), (3, 6)), (Q1, (4, 5))],
        4: [(Fraction(2), (4, 6))],
        5: [(Q1, (5, 6))],
    }


_SOLVABLE = {
    "s1": (_s1, ()),
    "s2": (_s2, ()),
    "s3": (_s3, ()),
    "s4": (_s4, ()),
    "s5": (_s5, ()),
    "s6": (_s6, ()),
    "s7": (_s7, ()),
    "s8": (_s8, ()),
    "s9": (_s9, ()),
    "s10": (_s10, ("t",)),
    "s11": (_s11, ()),
    "s12": (_s12, ("s", "t")),
    "s13": (_s13, ()),
}

CATALOG_NAMES = tuple(sorted(_SOLVABLE)) + ("su2su2", "a6_99", "abelian")

CATALOG_PARAMS = {
    "s1": "r > 0",
    "s2": "r > 0",
    "s3": "r > 0",
    "s4": "r > 0",
    "s5": "r > 0",
    "s6": "r > 0",
    "s7": "r > 0",
    "s8": "r > 0",
    "s9": "r > 0",
    "s10": "r > 0; 0 <= t <= 1/sqrt(22)",
    "s11": "r > 0",
    "s12": "r > 0; 0 <= s <= t <= 1",
    "s13": "r > 0",
    "su2su2": "none",
    "a6_99": "none",
    "abelian": "none",
}


def catalog(name, params=None):
    """Instantiate a named catalog algebra; raises UnknownName / ParamOutOfRange."""
    params = dict(params or {})
    if name in _SOLVABLE:
        builder, extra = _SOLVABLE[name]
        r = _check_r(params)
        for key in params:
            if key not in ("r",) + extra:
                raise UnknownName("algebra %s takes no parameter %r" % (name, key))
        if name == "s10":
            rows = builder(r, params.get("t", Q0))
        elif name == "s12":
            rows = builder(r, params.get("s", Q0), params.get("t", Q0))
        else:
            rows = builder(r)
        shown = {"r": r}
        for key in extra:
            shown[key] = params.get(key, Q0)
        return LieAlgebra(name, _terms_to_diffs(rows), shown)
    if name == "su2su2":
        if params:
            raise UnknownName("algebra su2su2 takes no parameters")
        return LieAlgebra(name, _terms_to_diffs(_su2su2({})))
    if name == "a6_99":
        if params:
            raise UnknownName("algebra a6_99 takes no parameters")
        return LieAlgebra(name, _terms_to_diffs(_a6_99({})))
    if name == "abelian":
        if params:
            raise UnknownName("algebra abelian takes no parameters")
        return LieAlgebra(name, [KForm(2) for _ in range(DIM)])
    raise UnknownName("unknown catalog algebra %r" % name)


# -- text format -------------------------------------------------------------


def parse_algebra(text):
    """Parse the algebra file format:

        algebra <name>
        dim 6
        de1 = <2-form or 0>
        ...
        de6 = 0
    """
    name = None
    dim = None
    diffs = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("algebra "):
            name = line[len("algebra ") :].strip()
        elif line.startswith("dim "):
            try:
                dim = int(line[4:].strip())
            except ValueError as exc:
                raise ParseError("bad dim line %r" % raw) from exc
        elif line.startswith("de") and "=" in line:
            head, rhs = line.split("=", 1)
            head = head.strip()
            try:
                idx = int(head[2:])
            except ValueError as exc:
                raise ParseError("bad differential label %r" % head) from exc
            if not 1 <= idx <= DIM:
                raise ParseError("differential index %d out of range" % idx)
            if idx in diffs:
                raise ParseError("duplicate differential de%d" % idx)
            diffs[idx] = parse_form(rhs.strip(), degree=2)
        else:
            raise ParseError("unrecognized line %r" % raw)
    if name is None:
        raise ParseError("missing 'algebra <name>' line")
    if dim != DIM:
        raise ParseError("missing or unsupported 'dim' line (need dim 6)")
    forms = [diffs.get(i, KForm(2)) for i in range(1, DIM + 1)]
    return LieAlgebra(name, forms, check=False)


def format_algebra(alg):
    lines = ["algebra %s" % alg.name, "dim %d" % DIM]
    for i in range(1, DIM + 1):
        f = alg.differentials[i - 1]
        lines.append("de%d = %s" % (i, format_form(f) if not f.is_zero() else "0"))
    return "\n".join(lines) + "\n"
