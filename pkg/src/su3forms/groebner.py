"""Sparse multivariate polynomials over Q and Groebner-basis machinery.

Polynomials are immutable: an ordered tuple of variable names plus a sparse
map from exponent vectors to nonzero Fractions.  The ideal toolkit (Buchberger
with sugar selection and Gebauer-Moeller pair pruning, normal forms, principal
ideal quotients, saturation, ideal equality) is enough to replay the
elimination arguments used in the classification computations.
"""

from __future__ import annotations

import heapq
import time
from fractions import Fraction
from math import gcd

from .errors import ParseError, ResourceBudgetExceeded

DEFAULT_BUDGET_SECONDS = 1800.0
DEFAULT_BUDGET_MIB = 4096

_PAGE_SIZE = 4096


def _current_rss_mib():
    """Resident set size of this process in MiB (Linux), or 0 if unknown."""
    try:
        with open("/proc/self/statm", "rb") as fh:
            pages = int(fh.read().split()[1])
        return pages * _PAGE_SIZE / (1024.0 * 1024.0)
    except (OSError, ValueError, IndexError):
        return 0.0


class Budget:
    """Wall-clock and memory caps enforced during a basis computation."""

    __slots__ = ("seconds", "mib", "_deadline")

    def __init__(self, seconds=DEFAULT_BUDGET_SECONDS, mib=DEFAULT_BUDGET_MIB):
        self.seconds = float(seconds)
        self.mib = float(mib)
        self._deadline = None

    def start(self):
        self._deadline = time.monotonic() + self.seconds
        return self

    def check(self):
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise ResourceBudgetExceeded(
                "time budget of %.1f s exhausted" % self.seconds
            )
        rss = _current_rss_mib()
        if rss > self.mib:
            raise ResourceBudgetExceeded(
                "memory budget of %.0f MiB exceeded (rss %.0f MiB)" % (self.mib, rss)
            )


class MonomialOrder:
    """Term order: grevlex, lex, or a block elimination order.

    A block order block(k) eliminates the first k variables: monomials are
    compared grevlex on the first block, ties broken grevlex on the rest.
    """

    __slots__ = ("kind", "split")

    def __init__(self, kind, split=0):
        if kind not in ("grevlex", "lex", "block"):
            raise ValueError("unknown order kind %r" % kind)
        if kind == "block" and split <= 0:
            raise ValueError("block order needs a positive split")
        self.kind = kind
        self.split = split

    @staticmethod
    def grevlex():
        return MonomialOrder("grevlex")

    @staticmethod
    def lex():
        return MonomialOrder("lex")

    @staticmethod
    def block(split):
        return MonomialOrder("block", split)

    def key(self, exp):
        """Sort key: larger key = larger monomial in this order."""
        if self.kind == "lex":
            return exp
        if self.kind == "grevlex":
            return _grevlex_key(exp)
        k = self.split
        return (_grevlex_key(exp[:k]), _grevlex_key(exp[k:]))

    def token(self):
        return self.kind if self.kind != "block" else "block:%d" % self.split

    def __repr__(self):
        return "MonomialOrder(%s)" % self.token()

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.split == other.split
        )

    def __hash__(self):
        return hash((self.kind, self.split))


def _grevlex_key(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


def _heapkey_fn(order):
    """Flat integer tuple whose ascending order is descending monomial order.

    Used to drive max-term extraction through heapq's min-heap.
    """
    if order.kind == "lex":
        def hk(exp):
            return tuple(-e for e in exp)
    elif order.kind == "grevlex":
        def hk(exp):
            return (-sum(exp),) + exp[::-1]
    else:
        k = order.split

        def hk(exp):
            a, b = exp[:k], exp[k:]
            return (-sum(a),) + a[::-1] + (-sum(b),) + b[::-1]
    return hk


def parse_order(text):
    """Order from CLI syntax: 'grevlex', 'lex', or 'block:<k>'."""
    if text == "grevlex":
        return MonomialOrder.grevlex()
    if text == "lex":
        return MonomialOrder.lex()
    if text.startswith("block:"):
        try:
            return MonomialOrder.block(int(text[6:]))
        except ValueError:
            raise ParseError("bad block split in %r" % text)
    raise ParseError("unknown monomial order %r" % text)


class Poly:
    """Immutable sparse polynomial over Q in a fixed ordered variable list."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        clean = {}
        if terms:
            n = len(self.variables)
            for exp, c in terms.items():
                if len(exp) != n:
                    raise ValueError("exponent vector length mismatch")
                if c == 0:
                    continue
                c = c if isinstance(c, Fraction) else Fraction(c)
                clean[tuple(exp)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(variables):
        return Poly(variables)

    @staticmethod
    def constant(variables, c):
        v = tuple(variables)
        return Poly(v, {(0,) * len(v): Fraction(c)})

    @staticmethod
    def variable(variables, name):
        v = tuple(variables)
        i = v.index(name)
        exp = [0] * len(v)
        exp[i] = 1
        return Poly(v, {tuple(exp): Fraction(1)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def is_homogeneous(self):
        degs = {sum(exp) for exp in self.terms}
        return len(degs) <= 1

    def leading(self, order):
        """(exponent, coefficient) of the leading term under order."""
        exp = max(self.terms, key=order.key)
        return exp, self.terms[exp]

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), Fraction(0))

    # -- arithmetic ----------------------------------------------------------

    def _check_vars(self, other):
        if self.variables != other.variables:
            raise ValueError("polynomials over different variable lists")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.variables, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_vars(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        return Poly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.variables, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                return Poly(self.variables)
            return Poly(self.variables, {e: c * q for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_vars(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Poly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- structural helpers --------------------------------------------------

    def monic(self, order):
        if not self.terms:
            return self
        _, lc = self.leading(order)
        if lc == 1:
            return self
        return Poly(self.variables, {e: c / lc for e, c in self.terms.items()})

    def primitive(self):
        """Scale to integer coefficients with content 1 and positive leading sign."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator * (den // c.denominator)))
        scale = Fraction(den, num) if num else Fraction(1)
        if self.terms[max(self.terms)] < 0:
            scale = -scale
        out = {e: c * scale for e, c in self.terms.items()}
        return Poly(self.variables, out)

    def substitute(self, name, value):
        """Replace one variable by a Fraction or a Poly over the same list."""
        i = self.variables.index(name)
        if isinstance(value, (int, Fraction)):
            value = Poly.constant(self.variables, value)
        out = Poly(self.variables)
        powers = {0: Poly.constant(self.variables, 1)}
        for exp, c in self.terms.items():
            k = exp[i]
            if k not in powers:
                powers[k] = value ** k
            rest = list(exp)
            rest[i] = 0
            out = out + powers[k] * Poly(self.variables, {tuple(rest): c})
        return out

    def evaluate(self, point):
        """Evaluate at a dict name -> scalar; scalars may be exact or floats."""
        missing = [v for v in self.variables if v not in point]
        if missing:
            raise ValueError("no value for %s" % ", ".join(missing))
        vals = [point[v] for v in self.variables]
        total = 0
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(vals, exp):
                for _ in range(e):
                    term = term * v
            total = total + term
        return total

    def rename(self, variables):
        """Same terms over a new variable list containing the old one."""
        newv = tuple(variables)
        pos = [newv.index(v) for v in self.variables]
        out = {}
        for exp, c in self.terms.items():
            e = [0] * len(newv)
            for p, k in zip(pos, exp):
                e[p] = k
            out[tuple(e)] = c
        return Poly(newv, out)

    def __repr__(self):
        return "Poly(%s)" % format_poly(self)

    def __str__(self):
        return format_poly(self)


# -- text form -------------------------------------------------------------


def format_poly(p, order=None):
    """Render as `a^2*b - 2/3*c + 1`, terms sorted by the given order."""
    if not p.terms:
        return "0"
    order = order or MonomialOrder.grevlex()
    items = sorted(p.terms.items(), key=lambda t: order.key(t[0]), reverse=True)
    parts = []
    for exp, c in items:
        factors = []
        for v, e in zip(p.variables, exp):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append("%s^%d" % (v, e))
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def parse_poly(text, variables):
    """Parse `a14^3 + 2*a15*a24*a25 - 3` over the declared variables."""
    v = tuple(variables)
    index = {name: i for i, name in enumerate(v)}
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial text")
    if s == "0":
        return Poly(v)
    terms = {}
    i, n = 0, len(s)
    first = True
    while i < n:
        while i < n and s[i] in " \t":
            i += 1
        if i >= n:
            break
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-' at position %d of %r" % (i, text))
        first = False
        while i < n and s[i] in " \t":
            i += 1
        coef = Fraction(1)
        exp = [0] * len(v)
        saw_factor = False
        while True:
            j = i
            while j < n and (s[j].isalnum() or s[j] == "_"):
                j += 1
            if j == i:
                break
            tok = s[i:j]
            i = j
            if tok[0].isdigit():
                num = int(tok)
                den = 1
                if i < n and s[i] == "/":
                    k = i + 1
                    while k < n and s[k].isdigit():
                        k += 1
                    if k == i + 1:
                        raise ParseError("bad rational at position %d of %r" % (i, text))
                    den = int(s[i + 1 : k])
                    i = k
                coef *= Fraction(num, den)
            else:
                if tok not in index:
                    raise ParseError("unknown variable %r in %r" % (tok, text))
                power = 1
                if i < n and s[i] == "^":
                    k = i + 1
                    while k < n and s[k].isdigit():
                        k += 1
                    if k == i + 1:
                        raise ParseError("bad exponent at position %d of %r" % (i, text))
                    power = int(s[i + 1 : k])
                    i = k
                exp[index[tok]] += power
            saw_factor = True
            while i < n and s[i] in " \t":
                i += 1
            if i < n and s[i] == "*":
                i += 1
                while i < n and s[i] in " \t":
                    i += 1
                continue
            break
        if not saw_factor:
            raise ParseError("expected a term at position %d of %r" % (i, text))
        key = tuple(exp)
        c = terms.get(key, Fraction(0)) + sign * coef
        if c == 0:
            terms.pop(key, None)
        else:
            terms[key] = c
    return Poly(v, terms)


# -- division and Buchberger -------------------------------------------------


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _exp_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _mul_term(p, exp, coef):
    """coef * x^exp * p as a raw term dict."""
    out = {}
    for e, c in p.terms.items():
        out[tuple(x + y for x, y in zip(e, exp))] = c * coef
    return out


def _int_reducer(g, order):
    """(lead_exp, int lead coef, integer tail items) for a nonzero poly.

    The poly is cleared of denominators first; scaling a divisor leaves the
    division remainder unchanged.
    """
    den = 1
    for c in g.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    le, lc = g.leading(order)
    head = lc.numerator * (den // lc.denominator)
    tail = [
        (e, c.numerator * (den // c.denominator))
        for e, c in g.terms.items()
        if e != le
    ]
    return le, head, tail


def reduce_poly(f, basis, order, budget=None):
    """Full remainder of f on division by the list basis (may be empty).

    Runs fraction-free: the working polynomial carries integer coefficients
    plus one rational multiplier, and terms are scanned through a max-heap.
    """
    if f.is_zero() or not basis:
        return f
    reducers = [_int_reducer(g, order) for g in basis if not g.is_zero()]
    if not reducers:
        return f
    key = order.key
    reducers.sort(key=lambda r: (abs(r[1]) != 1, len(r[2]), key(r[0])))
    hk = _heapkey_fn(order)
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    mult = Fraction(den)
    work = {e: c.numerator * (den // c.denominator) for e, c in f.terms.items()}
    heap = [(hk(e), e) for e in work]
    heapq.heapify(heap)
    remainder = {}
    steps = 0
    while heap:
        _, exp = heapq.heappop(heap)
        coef = work.get(exp)
        if coef is None:
            continue
        del work[exp]
        hit = None
        for le, head, tail in reducers:
            if _divides(le, exp):
                hit = (le, head, tail)
                break
        if hit is None:
            remainder[exp] = (coef, mult)
            continue
        le, head, tail = hit
        d = gcd(coef, head)
        scale = head // d
        factor = coef // d
        if scale < 0:
            scale, factor = -scale, -factor
        if scale != 1:
            for e in work:
                work[e] *= scale
            mult *= scale
        shift = _exp_sub(exp, le)
        for e, c in tail:
            e2 = tuple(x + y for x, y in zip(e, shift))
            v = work.get(e2)
            if v is None:
                v = -factor * c
                if v:
                    work[e2] = v
                    heapq.heappush(heap, (hk(e2), e2))
            else:
                v -= factor * c
                if v:
                    work[e2] = v
                else:
                    del work[e2]
        steps += 1
        if steps & 63 == 0:
            if budget is not None:
                budget.check()
            if work:
                g0 = 0
                for v in work.values():
                    g0 = gcd(g0, v)
                    if g0 == 1:
                        break
                if g0 > 1:
                    for e in work:
                        work[e] //= g0
                    mult /= g0
    out = {e: Fraction(c) / m for e, (c, m) in remainder.items()}
    return Poly(f.variables, out)


def _s_poly(f, g, order):
    (fe, fc) = f.leading(order)
    (ge, gc) = g.leading(order)
    l = _exp_lcm(fe, ge)
    if fc.denominator == 1 and gc.denominator == 1:
        d = gcd(fc.numerator, gc.numerator)
        ca, cb = Fraction(gc.numerator // d), Fraction(fc.numerator // d)
    else:
        ca, cb = Fraction(1) / fc, Fraction(1) / gc
    a = Poly(f.variables, _mul_term(f, _exp_sub(l, fe), ca))
    b = Poly(g.variables, _mul_term(g, _exp_sub(l, ge), cb))
    return a - b


def _gb_push_pairs(t, leads, sugars, alive, pair_heap, order):
    """Gebauer-Moeller pair update after appending basis element t."""
    lt = leads[t]
    # prune surviving older pairs made redundant by the new leading term
    dead = [
        ij
        for ij, l in alive.items()
        if _divides(lt, l)
        and _exp_lcm(leads[ij[0]], lt) != l
        and _exp_lcm(leads[ij[1]], lt) != l
    ]
    for ij in dead:
        del alive[ij]
    cand = [(_exp_lcm(leads[i], lt), i) for i in range(t)]
    # criterion M: drop (i,t) when some lcm(j,t) properly divides lcm(i,t)
    kept = []
    for l, i in cand:
        if any(l2 != l and _divides(l2, l) for l2, _ in cand):
            continue
        kept.append((l, i))
    # criterion F: among equal lcms keep the earliest partner
    seen = set()
    uniq = []
    for l, i in kept:
        if l in seen:
            continue
        seen.add(l)
        uniq.append((l, i))
    # criterion B: drop pairs with coprime leading monomials
    for l, i in uniq:
        if all(min(x, y) == 0 for x, y in zip(leads[i], lt)):
            continue
        sugar = max(
            sugars[i] + sum(_exp_sub(l, leads[i])), sugars[t] + sum(_exp_sub(l, lt))
        )
        alive[(i, t)] = l
        heapq.heappush(pair_heap, ((sugar, order.key(l)), i, t))


def groebner_basis(gens, order, budget=None, stop=None):
    """Reduced Groebner basis (list of monic Polys) of the given generators.

    `stop(basis, frontier)`, when given, is invoked each time the smallest
    sugar value in the pair queue strictly increases; every queued pair then
    has sugar >= frontier, so for homogeneous generators the basis built so
    far already decides ideal membership in every degree below `frontier`.
    Returning True aborts the run and yields the current partial basis,
    which is NOT inter-reduced and need not be a Groebner basis.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    variables = gens[0].variables
    for g in gens:
        if g.variables != variables:
            raise ValueError("generators over different variable lists")
    if budget is None:
        budget = Budget().start()
    basis = []
    leads = []
    sugars = []
    alive = {}
    pair_heap = []
    frontier = None
    for g in gens:
        g = g.primitive()
        basis.append(g)
        leads.append(g.leading(order)[0])
        sugars.append(g.total_degree())
        _gb_push_pairs(len(basis) - 1, leads, sugars, alive, pair_heap, order)
    while pair_heap:
        budget.check()
        # sugar strategy: smallest sugar first, ties by smallest lcm
        (sugar, _), i, j = heapq.heappop(pair_heap)
        if stop is not None and (frontier is None or sugar > frontier):
            frontier = sugar
            if stop(basis, sugar):
                return list(basis)
        if alive.pop((i, j), None) is None:
            continue
        s = _s_poly(basis[i], basis[j], order)
        r = reduce_poly(s, basis, order, budget)
        if r.is_zero():
            continue
        r = r.primitive()
        basis.append(r)
        leads.append(r.leading(order)[0])
        sugars.append(max(sugar, r.total_degree()))
        _gb_push_pairs(len(basis) - 1, leads, sugars, alive, pair_heap, order)
    return _reduce_basis(basis, order, budget)


def _reduce_basis(basis, order, budget=None):
    """Minimal, fully inter-reduced, monic basis."""
    heads = [g.leading(order)[0] for g in basis]
    keep = []
    for i, g in enumerate(basis):
        hi = heads[i]
        dominated = False
        for j, hj in enumerate(heads):
            if i == j:
                continue
            if _divides(hj, hi) and (hj != hi or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        r = reduce_poly(g, others, order, budget)
        if not r.is_zero():
            out.append(r.monic(order))
    out.sort(key=lambda g: order.key(g.leading(order)[0]))
    return out


# -- ideals ------------------------------------------------------------------


class Ideal:
    """Finitely generated ideal with cached reduced bases per term order."""

    __slots__ = ("variables", "generators", "_cache")

    def __init__(self, generators, variables=None):
        gens = list(generators)
        if variables is None:
            if not gens:
                raise ValueError("an ideal needs generators or a variable list")
            variables = gens[0].variables
        self.variables = tuple(variables)
        for g in gens:
            if g.variables != self.variables:
                raise ValueError("generators over different variable lists")
        self.generators = tuple(gens)
        self._cache = {}

    def groebner(self, order, budget=None):
        tok = order.token()
        if tok not in self._cache:
            self._cache[tok] = groebner_basis(list(self.generators), order, budget)
        return self._cache[tok]

    def normal_form(self, f, order, budget=None):
        return reduce_poly(f, self.groebner(order, budget), order, budget)

    def contains(self, f, order=None, budget=None):
        order = order or MonomialOrder.grevlex()
        return self.normal_form(f, order, budget).is_zero()

    def is_unit(self, order=None, budget=None):
        order = order or MonomialOrder.grevlex()
        gb = self.groebner(order, budget)
        return len(gb) == 1 and gb[0].is_constant() and not gb[0].is_zero()

    def __repr__(self):
        return "Ideal(%d generators over %s)" % (
            len(self.generators),
            ",".join(self.variables),
        )


def buchberger(gens, order, budget=None):
    """Ideal with its reduced Groebner basis computed for the given order."""
    if not gens:
        raise ValueError("buchberger needs at least one generator")
    ideal = Ideal(gens)
    ideal.groebner(order, budget)
    return ideal


def normal_form(f, ideal, order, budget=None):
    return ideal.normal_form(f, order, budget)


def ideal_equal(I, J, order=None, budget=None):
    """True iff both ideals have the same reduced basis in the given order."""
    if I.variables != J.variables:
        raise ValueError("ideals over different variable lists")
    order = order or MonomialOrder.grevlex()
    return I.groebner(order, budget) == J.groebner(order, budget)


def _with_aux(polys, variables, aux):
    """Lift polys to aux-first variable list; returns (new_vars, lifted)."""
    newv = (aux,) + tuple(variables)
    return newv, [p.rename(newv) for p in polys]


def _drop_aux(gb, variables):
    """Keep basis members free of the first variable; project them down."""
    out = []
    for g in gb:
        if any(exp[0] for exp in g.terms):
            continue
        out.append(
            Poly(variables, {exp[1:]: c for exp, c in g.terms.items()})
        )
    return out


def _fresh_aux(variables, stem):
    name = stem
    while name in variables:
        name += "_"
    return name


def divide_exact(g, f, order=None):
    """Quotient g/f when f divides g exactly; raises on nonzero remainder."""
    order = order or MonomialOrder.grevlex()
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    work = dict(g.terms)
    out = {}
    key = order.key
    fe, fc = f.leading(order)
    while work:
        exp = max(work, key=key)
        coef = work[exp]
        if not _divides(fe, exp):
            raise ValueError("inexact polynomial division")
        shift = _exp_sub(exp, fe)
        factor = coef / fc
        out[shift] = factor
        for e, c in f.terms.items():
            e2 = tuple(x + y for x, y in zip(e, shift))
            s = work.get(e2, Fraction(0)) - factor * c
            if s == 0:
                work.pop(e2, None)
            else:
                work[e2] = s
    return Poly(g.variables, out)


def intersect_principal(I, f, budget=None):
    """I ∩ ⟨f⟩ by eliminating t from ⟨t·I, (1−t)·f⟩."""
    aux = _fresh_aux(I.variables, "t")
    newv, lifted = _with_aux(list(I.generators) + [f], I.variables, aux)
    t = Poly.variable(newv, aux)
    gens = [t * p for p in lifted[:-1]]
    gens.append((Poly.constant(newv, 1) - t) * lifted[-1])
    order = MonomialOrder.block(1)
    gb = groebner_basis(gens, order, budget)
    return Ideal(_drop_aux(gb, I.variables), I.variables)


def ideal_quotient_principal(Q, f, budget=None):
    """The ideal quotient Q : ⟨f⟩ for nonzero f."""
    if f.is_zero():
        raise ValueError("quotient by the zero polynomial")
    inter = intersect_principal(Q, f, budget)
    gens = [divide_exact(g, f) for g in inter.generators]
    if not gens:
        gens = [Poly.zero(Q.variables)]
    return Ideal(gens, Q.variables)


def saturate(I, f, budget=None):
    """I : f^∞ by eliminating y from I + ⟨1 − y·f⟩."""
    if f.is_zero():
        raise ValueError("saturation by the zero polynomial")
    aux = _fresh_aux(I.variables, "y")
    newv, lifted = _with_aux(list(I.generators) + [f], I.variables, aux)
    y = Poly.variable(newv, aux)
    gens = list(lifted[:-1])
    gens.append(Poly.constant(newv, 1) - y * lifted[-1])
    order = MonomialOrder.block(1)
    gb = groebner_basis(gens, order, budget)
    gens2 = _drop_aux(gb, I.variables)
    if not gens2:
        gens2 = [Poly.zero(I.variables)]
    return Ideal(gens2, I.variables)
