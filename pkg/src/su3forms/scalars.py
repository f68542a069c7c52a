"""Exact scalar arithmetic: rationals, quadratic surds and arbitrary-precision floats.

A scalar is one of
  * fractions.Fraction (exact rational),
  * Surd (exact finite sum q_0 + q_1*sqrt(d_1) + ... with squarefree d_i),
  * BigFloat (mpmath float carrying its working precision).
Mixed arithmetic promotes Fraction -> Surd -> BigFloat.
"""

from fractions import Fraction

import mpmath

from .errors import NotExactSqrt, ParseError

DEFAULT_DPS = 64
MIN_DPS = 32
ZERO_TOL = Fraction(1, 10 ** 40)

Q0 = Fraction(0)
Q1 = Fraction(1)


def squarefree_decompose(n):
    """Write n = m^2 * d with d squarefree; return (m, d).  Requires n >= 1."""
    m, d, p = 1, 1, 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            m *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    return m, d * n


def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


class Surd:
    """Element of a real multi-quadratic field, kept in canonical form.

    terms maps a squarefree positive radicand d to a nonzero Fraction q,
    standing for sum of q*sqrt(d).  The rational part uses d = 1.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for d, q in terms.items():
                q = Fraction(q)
                if q:
                    clean[d] = clean.get(d, Q0) + q
                    if not clean[d]:
                        del clean[d]
        self.terms = clean

    @classmethod
    def from_rational(cls, q):
        return cls({1: Fraction(q)})

    @classmethod
    def sqrt_int(cls, n):
        """sqrt(n) for integer n >= 0."""
        if n < 0:
            raise NotExactSqrt("negative radicand")
        if n == 0:
            return cls()
        m, d = squarefree_decompose(n)
        return cls({d: Fraction(m)})

    # -- ring structure -------------------------------------------------

    def _coerced(self, other):
        if isinstance(other, Surd):
            return other
        if isinstance(other, (int, Fraction)):
            return Surd.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for d, q in o.terms.items():
            out[d] = out.get(d, Q0) + q
        return Surd(out)

    __radd__ = __add__

    def __neg__(self):
        return Surd({d: -q for d, q in self.terms.items()})

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        out = {}
        for d1, q1 in self.terms.items():
            for d2, q2 in o.terms.items():
                if d1 == d2:
                    m, d = d1, 1
                else:
                    g = _gcd(d1, d2)
                    m, d = g, (d1 // g) * (d2 // g)
                q = q1 * q2 * m
                out[d] = out.get(d, Q0) + q
        return Surd(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def inverse(self):
        """Exact inverse by clearing one radicand prime at a time."""
        if not self.terms:
            raise ZeroDivisionError("surd division by zero")
        x, acc = self, Surd.from_rational(1)
        while True:
            primes = set()
            for d in x.terms:
                primes.update(_prime_factors(d))
            if not primes:
                break
            p = max(primes)
            conj = Surd({d: (-q if d % p == 0 else q) for d, q in x.terms.items()})
            acc = acc * conj
            x = x * conj
        return acc * (Q1 / _as_fraction(x))

    # -- order structure ------------------------------------------------

    def _split(self, p):
        """Write self = a + sqrt(p)*b with all radicands of a, b coprime to p."""
        a, b = {}, {}
        for d, q in self.terms.items():
            if d % p == 0:
                b[d // p] = q
            else:
                a[d] = q
        return Surd(a), Surd(b)

    def sign(self):
        """Exact sign in {-1, 0, 1}."""
        if not self.terms:
            return 0
        if set(self.terms) == {1}:
            q = self.terms[1]
            return -1 if q < 0 else 1
        p = max(max(_prime_factors(d)) for d in self.terms if d > 1)
        a, b = self._split(p)
        sa, sb = a.sign(), b.sign()
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # opposite signs: |a| vs |b|sqrt(p) decided by a^2 - p b^2
        s = (a * a - b * b * p).sign()
        return s if sa > 0 else -s

    def __eq__(self, other):
        o = self._coerced(other)
        if o is None:
            if isinstance(other, BigFloat):
                return NotImplemented
            return NotImplemented
        return self.terms == o.terms

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __lt__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __hash__(self):
        if self.is_rational():
            return hash(self.to_fraction())
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- queries ----------------------------------------------------------

    def is_rational(self):
        return set(self.terms) <= {1}

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("surd %s is irrational" % self)
        return self.terms.get(1, Q0)

    def sqrt(self):
        """Exact square root, or NotExactSqrt if it leaves the representable set."""
        s = self.sign()
        if s < 0:
            raise NotExactSqrt("negative scalar")
        if s == 0:
            return Surd()
        if self.is_rational():
            q = self.to_fraction()
            m, d = squarefree_decompose(q.numerator * q.denominator)
            return Surd({d: Fraction(m, q.denominator)})
        if len(self.terms) == 2 and 1 in self.terms:
            # sqrt(u + v*sqrt(d)) = sqrt(a) +- sqrt(b) with a + b = u and
            # 4ab = v^2 d, whenever the discriminant is a rational square
            (d,) = [k for k in self.terms if k != 1]
            u, v = self.terms[1], self.terms[d]
            disc = u * u - v * v * d
            w = _fraction_sqrt(disc)
            if w is not None:
                a, b = (u + w) / 2, (u - w) / 2
                if a >= 0 and b >= 0:
                    ra = Surd.from_rational(a).sqrt()
                    rb = Surd.from_rational(b).sqrt()
                    cand = ra + rb if v > 0 else ra - rb
                    if cand * cand == self:
                        return cand
        raise NotExactSqrt("no exact square root for %s" % self)

    def to_mpf(self, dps=DEFAULT_DPS):
        with mpmath.workdps(dps + 10):
            total = mpmath.mpf(0)
            for d, q in self.terms.items():
                t = mpmath.mpf(q.numerator) / q.denominator
                if d != 1:
                    t *= mpmath.sqrt(d)
                total += t
            return +total

    def __repr__(self):
        return "Surd(%s)" % format_scalar(self)

    def __str__(self):
        return format_scalar(self)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Surd):
        return x.to_fraction()
    raise TypeError(type(x))


def _fraction_sqrt(q):
    """Exact sqrt of a Fraction if it is a perfect square, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    rn = _isqrt_exact(q.numerator)
    rd = _isqrt_exact(q.denominator)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def _isqrt_exact(n):
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


class BigFloat:
    """Arbitrary-precision real number; carries decimal working precision.

    Results of arithmetic keep the larger precision of the operands and are
    always flagged inexact.
    """

    __slots__ = ("value", "dps")
    inexact = True

    def __init__(self, value, dps=DEFAULT_DPS):
        if dps < MIN_DPS:
            raise ValueError("precision below %d digits" % MIN_DPS)
        self.dps = dps
        with mpmath.workdps(dps + 10):
            if isinstance(value, BigFloat):
                value = value.value
            elif isinstance(value, Fraction):
                value = mpmath.mpf(value.numerator) / value.denominator
            elif isinstance(value, Surd):
                value = value.to_mpf(dps)
            elif isinstance(value, str):
                value = mpmath.mpf(value)
            else:
                value = mpmath.mpf(value)
            self.value = +value

    def _coerced(self, other):
        if isinstance(other, BigFloat):
            return other
        if isinstance(other, (int, Fraction, Surd)):
            return BigFloat(other, self.dps)
        return None

    def _binop(self, other, fn):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        dps = max(self.dps, o.dps)
        with mpmath.workdps(dps + 10):
            return BigFloat(fn(self.value, o.value), dps)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError("float division by zero")
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        with mpmath.workdps(self.dps + 10):
            return BigFloat(-self.value, self.dps)

    def sqrt(self):
        if self.value < 0:
            raise NotExactSqrt("negative scalar")
        with mpmath.workdps(self.dps + 10):
            return BigFloat(mpmath.sqrt(self.value), self.dps)

    def sign(self):
        return int(mpmath.sign(self.value))

    def __eq__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __lt__(self, other):
        o = self._coerced(other)
        return NotImplemented if o is None else self.value < o.value

    def __le__(self, other):
        o = self._coerced(other)
        return NotImplemented if o is None else self.value <= o.value

    def __gt__(self, other):
        o = self._coerced(other)
        return NotImplemented if o is None else self.value > o.value

    def __ge__(self, other):
        o = self._coerced(other)
        return NotImplemented if o is None else self.value >= o.value

    def __bool__(self):
        return self.value != 0

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "BigFloat(%s, dps=%d)" % (mpmath.nstr(self.value, 17), self.dps)

    def __str__(self):
        with mpmath.workdps(self.dps):
            return mpmath.nstr(self.value, min(self.dps, 24))


# -- generic helpers ------------------------------------------------------


def is_exact(x):
    return isinstance(x, (int, Fraction, Surd))


def scalar_is_zero(x, tol=ZERO_TOL):
    """Zero test: exact for exact scalars, |x| <= tol for floats."""
    if isinstance(x, (int, Fraction)):
        return x == 0
    if isinstance(x, Surd):
        return not x.terms
    if isinstance(x, BigFloat):
        with mpmath.workdps(x.dps + 10):
            return abs(x.value) <= mpmath.mpf(tol.numerator) / tol.denominator
    return x == 0


def scalar_sign(x):
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    return x.sign()


def scalar_div(a, b):
    """Total division within the tower; ZeroDivisionError on zero divisor."""
    if isinstance(a, int):
        a = Fraction(a)
    if isinstance(b, int):
        b = Fraction(b)
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        if not b:
            raise ZeroDivisionError("rational division by zero")
        return a / b
    if isinstance(b, Fraction) and not isinstance(a, (Surd, BigFloat)):
        # generic ring element (e.g. a polynomial) divided by a rational
        if not b:
            raise ZeroDivisionError("rational division by zero")
        return a * (Fraction(1) / b)
    if isinstance(a, BigFloat) or isinstance(b, BigFloat):
        a = a if isinstance(a, BigFloat) else BigFloat(a)
        return a / b
    a = a if isinstance(a, Surd) else Surd.from_rational(a)
    return a / b


def scalar_sqrt(x, dps=DEFAULT_DPS):
    """Exact sqrt when representable, BigFloat fallback otherwise."""
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        x = Surd.from_rational(x)
    if isinstance(x, Surd):
        try:
            r = x.sqrt()
            return r.to_fraction() if r.is_rational() else r
        except NotExactSqrt:
            if x.sign() < 0:
                raise
            return BigFloat(x, dps).sqrt()
    return x.sqrt()


def to_bigfloat(x, dps=DEFAULT_DPS):
    return x if isinstance(x, BigFloat) and x.dps == dps else BigFloat(x, dps)


def as_surd(x):
    if isinstance(x, Surd):
        return x
    if isinstance(x, (int, Fraction)):
        return Surd.from_rational(x)
    raise TypeError("cannot express %r as a surd" % (x,))


# -- text format -----------------------------------------------------------
#
#   scalar  := term (('+' | '-') term)*
#   term    := rational ['*' 'sqrt(' int ')'] | 'sqrt(' int ')'
#   rational:= ['-'] digits ['/' digits]


def parse_scalar(text):
    """Parse the exact scalar grammar; returns Fraction or Surd."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty scalar")
    terms = {}
    i, n = 0, len(s)
    first = True
    while i < n:
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-' in %r" % text)
        first = False
        coef, rad = Q1, 1
        have_num = False
        j = i
        while j < n and (s[j].isdigit() or s[j] == "/"):
            j += 1
        if j > i:
            try:
                coef = Fraction(s[i:j])
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError("bad rational in %r" % text) from exc
            have_num = True
            i = j
        if i < n and s[i] == "*":
            if not have_num:
                raise ParseError("dangling '*' in %r" % text)
            i += 1
        if s.startswith("sqrt(", i):
            i += 5
            j = i
            while j < n and s[j].isdigit():
                j += 1
            if j == i or j >= n or s[j] != ")":
                raise ParseError("bad sqrt() in %r" % text)
            rad = int(s[i:j])
            i = j + 1
            have_num = True
        if not have_num:
            raise ParseError("expected term at position %d of %r" % (i, text))
        m, d = squarefree_decompose(rad) if rad > 0 else (0, 1)
        terms[d] = terms.get(d, Q0) + sign * coef * m
    out = Surd(terms)
    return out.to_fraction() if out.is_rational() else out


def format_scalar(x):
    """Canonical text for an exact scalar (radicands descending, rational last)."""
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, BigFloat):
        return str(x)
    if not x.terms:
        return "0"
    parts = []
    for d in sorted(x.terms, reverse=True):
        q = x.terms[d]
        sgn = "-" if q < 0 else "+"
        q = abs(q)
        if d == 1:
            body = str(q)
        elif q == 1:
            body = "sqrt(%d)" % d
        else:
            body = "%s*sqrt(%d)" % (q, d)
        parts.append((sgn, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sgn, body in parts[1:]:
        out += sgn + body
    return out
