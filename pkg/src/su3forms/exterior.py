"""Sparse exterior algebra on a fixed six-dimensional vector space.

A k-form is a dict from strictly increasing index words (tuples of ints in
1..6) to scalar coefficients.  Coefficients may be Fraction, Surd, BigFloat
or any ring element supporting +, -, * and equality with 0 (polynomials).
"""

from fractions import Fraction
from itertools import combinations

from .errors import DegreeError, ParseError
from .scalars import format_scalar, parse_scalar, scalar_is_zero

DIM = 6

TOP_WORD = (1, 2, 3, 4, 5, 6)


def basis_words(k):
    """All strictly increasing words of length k, lexicographic order."""
    return list(combinations(range(1, DIM + 1), k))


def merge_sign(u, v):
    """Sign of sorting the concatenation u+v, or 0 if an index repeats.

    u and v must themselves be strictly increasing.  Returns (sign, word).
    """
    if set(u) & set(v):
        return 0, ()
    # inversions = pairs (x in u, y in v) with x > y, since u precedes v
    inv = 0
    j = 0
    for x in u:
        while j < len(v) and v[j] < x:
            j += 1
        inv += j
    word = tuple(sorted(u + v))
    return (-1) ** (inv & 1), word


class KForm:
    """Alternating k-form with sparse scalar coefficients."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs=None):
        if not 0 <= degree <= DIM:
            raise DegreeError("degree %d out of range" % degree)
        self.degree = degree
        clean = {}
        if coeffs:
            for word, c in coeffs.items():
                word = tuple(word)
                if len(word) != degree:
                    raise ValueError("word %r has wrong length" % (word,))
                if list(word) != sorted(set(word)) or (word and not (1 <= word[0] and word[-1] <= DIM)):
                    raise ValueError("word %r is not strictly increasing in 1..6" % (word,))
                if not _is_zero_coeff(c):
                    if word in clean:
                        clean[word] = clean[word] + c
                        if _is_zero_coeff(clean[word]):
                            del clean[word]
                    else:
                        clean[word] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, degree):
        return cls(degree)

    @classmethod
    def basis(cls, *indices):
        """e^{i1...ik} for strictly increasing indices."""
        return cls(len(indices), {tuple(indices): Fraction(1)})

    def __add__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeError("cannot add forms of degree %d and %d" % (self.degree, other.degree))
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            if w in out:
                s = out[w] + c
                if _is_zero_coeff(s):
                    del out[w]
                else:
                    out[w] = s
            else:
                out[w] = c
        return KForm(self.degree, out)

    def __sub__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return KForm(self.degree, {w: -c for w, c in self.coeffs.items()})

    def scale(self, s):
        if _is_zero_coeff(s):
            return KForm(self.degree)
        return KForm(self.degree, {w: s * c for w, c in self.coeffs.items()})

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def wedge(self, other):
        k = self.degree + other.degree
        if k > DIM:
            raise DegreeError("wedge degree %d exceeds %d" % (k, DIM))
        out = {}
        for u, a in self.coeffs.items():
            for v, b in other.coeffs.items():
                sgn, w = merge_sign(u, v)
                if sgn == 0:
                    continue
                c = a * b if sgn > 0 else -(a * b)
                if w in out:
                    out[w] = out[w] + c
                    if _is_zero_coeff(out[w]):
                        del out[w]
                else:
                    out[w] = c
        return KForm(k, out)

    def __xor__(self, other):
        return self.wedge(other)

    def interior(self, v):
        """Contraction with vector v (sequence of six scalars) in the first slot."""
        if self.degree == 0:
            raise DegreeError("cannot contract a 0-form")
        out = {}
        for w, c in self.coeffs.items():
            for pos, idx in enumerate(w):
                vi = v[idx - 1]
                if _is_zero_coeff(vi):
                    continue
                sub = w[:pos] + w[pos + 1 :]
                term = vi * c if pos % 2 == 0 else -(vi * c)
                if sub in out:
                    out[sub] = out[sub] + term
                    if _is_zero_coeff(out[sub]):
                        del out[sub]
                else:
                    out[sub] = term
        return KForm(self.degree - 1, out)

    def evaluate(self, vectors):
        """Value on k vectors, each a sequence of six scalars."""
        k = self.degree
        if len(vectors) != k:
            raise ValueError("need %d vectors" % k)
        total = Fraction(0)
        for w, c in self.coeffs.items():
            rows = [[vectors[s][w[r] - 1] for s in range(k)] for r in range(k)]
            total = total + c * _det(rows)
        return total

    def pullback(self, matrix):
        """(A^* form) for the linear map with columns A[:,j]: form(Ax, Ay, ...)."""
        k = self.degree
        out = {}
        for w in basis_words(k):
            acc = Fraction(0)
            for wp, c in self.coeffs.items():
                minor = [[matrix[wp[r] - 1][w[s] - 1] for s in range(k)] for r in range(k)]
                acc = acc + c * _det(minor)
            if not _is_zero_coeff(acc):
                out[w] = acc
        return KForm(k, out)

    def top_coefficient(self):
        if self.degree != DIM:
            raise DegreeError("not a top form")
        return self.coeffs.get(TOP_WORD, Fraction(0))

    def map_coeffs(self, fn):
        return KForm(self.degree, {w: fn(c) for w, c in self.coeffs.items()})

    def coefficient(self, word):
        return self.coeffs.get(tuple(word), Fraction(0))

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return self.degree == other.degree and (self - other).is_zero()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.degree, tuple(sorted(map(str, self.coeffs)))))

    def __repr__(self):
        return "KForm(%d, %s)" % (self.degree, format_form(self))

    def __str__(self):
        return format_form(self)


def _is_zero_coeff(c):
    if isinstance(c, (int, Fraction)):
        return c == 0
    z = getattr(c, "is_zero", None)
    if callable(z):
        return z()
    return scalar_is_zero(c, tol=Fraction(0))


def _det(rows):
    """Determinant by Laplace expansion; fine for the k <= 6 sizes used here."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        a = rows[0][j]
        if _is_zero_coeff(a):
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = a * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return Fraction(0)
    return total


def five_form_iso(gamma):
    """Invert v -> interior(v, top) on 5-forms against the standard volume.

    Returns the unique vector v with interior(v, e^{123456}) == gamma.
    """
    if gamma.degree != DIM - 1:
        raise DegreeError("expected a 5-form")
    v = [Fraction(0)] * DIM
    for j in range(1, DIM + 1):
        word = tuple(i for i in range(1, DIM + 1) if i != j)
        c = gamma.coeffs.get(word)
        if c is None:
            continue
        v[j - 1] = c if (j - 1) % 2 == 0 else -c
    return v


# -- text format -----------------------------------------------------------
#
#   form  := term (('+' | '-') term)*
#   term  := [scalar '*'] 'e^{' idx (',' idx)* '}'
#   Indices must be strictly increasing within each word.


def parse_form(text, degree=None):
    """Parse the textual form grammar into a KForm."""
    s = text.strip()
    if not s:
        raise ParseError("empty form")
    if s == "0":
        if degree is None:
            raise ParseError("bare 0 needs an expected degree")
        return KForm(degree)
    terms = []
    i, n = 0, len(s)
    first = True
    while i < n:
        while i < n and s[i] == " ":
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
        while i < n and s[i] == " ":
            i += 1
        j = s.find("e^{", i)
        if j < 0:
            raise ParseError("missing e^{...} in %r" % text)
        coef_text = s[i:j].strip()
        if coef_text.endswith("*"):
            coef_text = coef_text[:-1].strip()
        coef = parse_scalar(coef_text) if coef_text else Fraction(1)
        k = s.find("}", j)
        if k < 0:
            raise ParseError("unterminated e^{ in %r" % text)
        idx_text = s[j + 3 : k]
        try:
            if "," in idx_text:
                word = tuple(int(p) for p in idx_text.split(","))
            else:
                word = tuple(int(ch) for ch in idx_text.strip())
        except ValueError as exc:
            raise ParseError("bad indices %r" % idx_text) from exc
        if list(word) != sorted(set(word)) or not word or word[0] < 1 or word[-1] > DIM:
            raise ParseError("indices %r not strictly increasing in 1..6" % (idx_text,))
        terms.append((word, coef if sign > 0 else -coef))
        i = k + 1
    if not terms:
        raise ParseError("no terms in %r" % text)
    deg = len(terms[0][0])
    if any(len(w) != deg for w, _ in terms):
        raise ParseError("mixed degrees in %r" % text)
    if degree is not None and deg != degree:
        raise ParseError("expected degree %d, found %d" % (degree, deg))
    out = {}
    for w, c in terms:
        out[w] = out.get(w, Fraction(0)) + c
    return KForm(deg, out)


def format_form(form):
    """Canonical text: words in lexicographic order, exact coefficients."""
    if not form.coeffs:
        return "0"
    parts = []
    for w in sorted(form.coeffs):
        c = form.coeffs[w]
        word = "e^{" + ",".join(str(i) for i in w) + "}"
        text = format_scalar(c) if not hasattr(c, "variables") else str(c)
        if text == "1":
            body, neg = word, False
        elif text == "-1":
            body, neg = word, True
        else:
            neg = text.startswith("-")
            if neg:
                text = text[1:]
            if "+" in text or (text.count("-") > 0):
                text = "(" + text + ")"
            body = text + "*" + word
        parts.append(("-" if neg else "+", body))
    sgn, body = parts[0]
    out = ("-" if sgn == "-" else "") + body
    for sgn, body in parts[1:]:
        out += " " + sgn + " " + body
    return out
