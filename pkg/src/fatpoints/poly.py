"""Exact sparse multivariate polynomial arithmetic over the rationals.

Polynomials live in the standard graded ring Q[X_0, ..., X_n].  Terms are
stored sparsely as a dict mapping exponent tuples to nonzero
``fractions.Fraction`` coefficients.  All values are immutable after
construction and every operation is a pure function of its inputs, so
polynomials can be shared freely between workers.

The text grammar (parse/print, bit-exact round trip)::

    term  = [sign] [coeff] ["*"] (var ("^" exp)?)*
    coeff = integer | integer "/" positive-integer
    var   = "X" index

Whitespace is insignificant.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

Monomial = tuple  # exponent tuple, one entry per variable


# ---------------------------------------------------------------------------
# monomial helpers
# ---------------------------------------------------------------------------

def mono_degree(m):
    return sum(m)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True if monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponent-wise quotient a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@lru_cache(maxsize=None)
def monomials_of_degree(nvars, d):
    """All degree-d monomials in nvars variables, largest first (degrevlex)."""
    if d < 0:
        return ()
    monos = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        monos.append(tuple(e))
    order = DegRevLex(nvars)
    monos.sort(key=order.key, reverse=True)
    return tuple(monos)


@lru_cache(maxsize=None)
def monomial_index(nvars, d):
    """Map degree-d monomial -> position in monomials_of_degree(nvars, d)."""
    return {m: i for i, m in enumerate(monomials_of_degree(nvars, d))}


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

class DegRevLex:
    """Degree-reverse-lexicographic order with X_0 > X_1 > ... > X_n."""

    __slots__ = ("nvars",)

    def __init__(self, nvars):
        self.nvars = nvars

    def key(self, m):
        return (sum(m), tuple(-e for e in reversed(m)))

    def __eq__(self, other):
        return type(other) is DegRevLex and other.nvars == self.nvars

    def __hash__(self):
        return hash(("degrevlex", self.nvars))

    def __repr__(self):
        return f"DegRevLex({self.nvars})"


class BlockElimination:
    """Block order: degrevlex on the first nfirst variables, then degrevlex
    on the rest.  Monomials containing a first-block variable beat all
    monomials that do not, which is what elimination needs."""

    __slots__ = ("nfirst", "nvars")

    def __init__(self, nfirst, nvars):
        self.nfirst = nfirst
        self.nvars = nvars

    def key(self, m):
        a = m[:self.nfirst]
        b = m[self.nfirst:]
        return (sum(a), tuple(-e for e in reversed(a)),
                sum(b), tuple(-e for e in reversed(b)))

    def __eq__(self, other):
        return (type(other) is BlockElimination and
                other.nfirst == self.nfirst and other.nvars == self.nvars)

    def __hash__(self):
        return hash(("blockelim", self.nfirst, self.nvars))

    def __repr__(self):
        return f"BlockElimination({self.nfirst}, {self.nvars})"


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class PolynomialSyntaxError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class Polynomial:
    """Sparse polynomial over Q.  Treat instances as immutable."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(c, Fraction):
                    c = Fraction(c)
                if c != 0:
                    if len(m) != nvars:
                        raise ValueError("monomial length does not match ambient")
                    clean[m] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def constant(cls, c, nvars):
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, i, nvars):
        if not 0 <= i < nvars:
            raise ValueError("variable index out of range")
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def from_monomial(cls, m, c=1):
        return cls(len(m), {tuple(m): Fraction(c)})

    @classmethod
    def parse(cls, text, nvars):
        return parse_polynomial(text, nvars)

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self):
        """Split into homogeneous parts, as a dict degree -> Polynomial."""
        parts = {}
        for m, c in self.terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: Polynomial(self.nvars, t) for d, t in sorted(parts.items())}

    def leading_monomial(self, order=None):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        order = order or DegRevLex(self.nvars)
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order=None):
        return self.terms[self.leading_monomial(order)]

    def sorted_terms(self, order=None):
        order = order or DegRevLex(self.nvars)
        return [(m, self.terms[m])
                for m in sorted(self.terms, key=order.key, reverse=True)]

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("ambient mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return Polynomial.zero(self.nvars)
            return Polynomial(self.nvars,
                              {m: v * c for m, v in self.terms.items()})
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                v = terms.get(m, 0) + c1 * c2
                if v:
                    terms[m] = v
                else:
                    terms.pop(m, None)
        return Polynomial(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and other.nvars == self.nvars
                and other.terms == self.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- calculus -------------------------------------------------------------

    def diff(self, i):
        """Formal partial derivative with respect to X_i."""
        if not 0 <= i < self.nvars:
            raise ValueError("variable index out of range")
        terms = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                m2 = m[:i] + (e - 1,) + m[i + 1:]
                terms[m2] = terms.get(m2, 0) + c * e
        return Polynomial(self.nvars, terms)

    def evaluate(self, point):
        """Exact evaluation at a point given as n+1 rationals."""
        if len(point) != self.nvars:
            raise ValueError("point length does not match ambient")
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x ** e
            total += v
        return total

    # -- printing -------------------------------------------------------------

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r}, nvars={self.nvars})"

    def to_str(self, order=None):
        if not self.terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms(order)):
            factors = []
            for v, e in enumerate(m):
                if e == 1:
                    factors.append(f"X{v}")
                elif e > 1:
                    factors.append(f"X{v}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/^":
            tokens.append((ch, None, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", int(text[i:j]), i))
            i = j
            continue
        if ch == "X":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise PolynomialSyntaxError("variable needs an index", i)
            tokens.append(("var", int(text[i + 1:j]), i))
            i = j
            continue
        raise PolynomialSyntaxError(f"unexpected character {ch!r}", i)
    return tokens


def parse_polynomial(text, nvars):
    """Parse the text grammar into a Polynomial in nvars variables."""
    tokens = _tokenize(text)
    pos = 0
    terms = {}

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    first = True
    while pos < len(tokens) or first:
        if pos >= len(tokens):
            raise PolynomialSyntaxError("empty polynomial", 0)
        sign = 1
        kind = peek()
        if kind in ("+", "-"):
            if kind == "-":
                sign = -1
            pos += 1
        elif not first:
            raise PolynomialSyntaxError("expected '+' or '-' between terms",
                                        tokens[pos][2])
        first = False
        if pos >= len(tokens):
            raise PolynomialSyntaxError("dangling sign", tokens[-1][2])

        coeff = Fraction(1)
        have_coeff = False
        if peek() == "num":
            num = tokens[pos][1]
            pos += 1
            if peek() == "/":
                pos += 1
                if peek() != "num":
                    raise PolynomialSyntaxError(
                        "expected denominator",
                        tokens[pos][2] if pos < len(tokens) else tokens[-1][2])
                den = tokens[pos][1]
                if den <= 0:
                    raise PolynomialSyntaxError("denominator must be positive",
                                                tokens[pos][2])
                pos += 1
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            have_coeff = True
            if peek() == "*":
                pos += 1
                if peek() != "var":
                    raise PolynomialSyntaxError(
                        "expected variable after '*'",
                        tokens[pos][2] if pos < len(tokens) else tokens[-1][2])

        exps = [0] * nvars
        have_var = False
        while peek() in ("var", "*"):
            if peek() == "*":
                pos += 1
                if peek() != "var":
                    raise PolynomialSyntaxError(
                        "expected variable after '*'",
                        tokens[pos][2] if pos < len(tokens) else tokens[-1][2])
                continue
            idx = tokens[pos][1]
            at = tokens[pos][2]
            if idx >= nvars:
                raise PolynomialSyntaxError(
                    f"variable index {idx} out of range for ambient {nvars}", at)
            pos += 1
            e = 1
            if peek() == "^":
                pos += 1
                if peek() != "num":
                    raise PolynomialSyntaxError(
                        "expected exponent after '^'",
                        tokens[pos][2] if pos < len(tokens) else tokens[-1][2])
                e = tokens[pos][1]
                pos += 1
            exps[idx] += e
            have_var = True

        if not have_coeff and not have_var:
            raise PolynomialSyntaxError(
                "expected a term",
                tokens[pos][2] if pos < len(tokens) else tokens[-1][2])

        m = tuple(exps)
        v = terms.get(m, 0) + sign * coeff
        if v:
            terms[m] = v
        else:
            terms.pop(m, None)

    return Polynomial(nvars, terms)
