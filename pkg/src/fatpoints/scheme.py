"""Projective rational points, fat point schemes, their vanishing ideals,
degrees, slimmings/fattenings, and minimal sets of separators.

The vanishing ideal of W = m_1 P_1 + ... + m_s P_s is cut out degree by
degree by exact integer linear algebra: for a point ideal generated by
linear forms, the m-th power equals {F : all order-(m-1) partials of F
vanish at P} (characteristic zero), so the degree-d piece of the
intersection is the kernel of one integer conditions matrix.  Minimal
generators are collected up to degree r_W + 1, where fat point ideals are
generated.  The elimination-order intersection route in the groebner
module computes the same ideal and the two are compared in the tests.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .groebner import Ideal
from .hilbert import HilbertFunction
from .linalg import RowSpace, int_rank, int_nullspace
from .poly import Polynomial, monomials_of_degree


class ProjectivePoint:
    """Point of P^n with rational coordinates, normalized so the first
    nonzero coordinate is 1 (canonical representative)."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(Fraction(c) for c in coords)
        pivot = None
        for i, c in enumerate(coords):
            if c != 0:
                pivot = i
                break
        if pivot is None:
            raise ValueError("projective point needs a nonzero coordinate")
        scale = coords[pivot]
        self.coords = tuple(c / scale for c in coords)

    @property
    def nvars(self):
        return len(self.coords)

    @property
    def dim(self):
        return len(self.coords) - 1

    @property
    def pivot_index(self):
        for i, c in enumerate(self.coords):
            if c != 0:
                return i
        raise AssertionError("unreachable")

    def integer_coords(self):
        """Primitive integer representative (row scaling only)."""
        den = 1
        for c in self.coords:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coords]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        return tuple(v // g for v in ints)

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and other.coords == self.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjectivePoint{self.coords}"


class FatPointScheme:
    """W = m_1 P_1 + ... + m_s P_s: distinct points with positive
    multiplicities in P^n.  The empty scheme (s = 0) is allowed; its ideal
    is the unit ideal and its degree is 0."""

    __slots__ = ("n", "points", "multiplicities")

    def __init__(self, n, points, multiplicities):
        points = tuple(points)
        multiplicities = tuple(int(m) for m in multiplicities)
        if len(points) != len(multiplicities):
            raise ValueError("points/multiplicities length mismatch")
        for p in points:
            if p.dim != n:
                raise ValueError("point dimension does not match ambient")
        if len(set(points)) != len(points):
            raise ValueError("points must be pairwise distinct")
        if any(m < 1 for m in multiplicities):
            raise ValueError("multiplicities must be positive")
        self.n = n
        self.points = points
        self.multiplicities = multiplicities

    @classmethod
    def from_coords(cls, n, data):
        """data: iterable of (coords, multiplicity)."""
        pts = [ProjectivePoint(c) for c, _ in data]
        return cls(n, pts, [m for _, m in data])

    @property
    def nvars(self):
        return self.n + 1

    @property
    def size(self):
        return len(self.points)

    def degree(self):
        n = self.n
        return sum(comb(m + n - 1, n) for m in self.multiplicities)

    def is_equimultiple(self):
        return len(set(self.multiplicities)) <= 1

    def support(self):
        return FatPointScheme(self.n, self.points, (1,) * self.size)

    def slimming(self):
        """Every multiplicity decreased by one; points dropping to 0 leave
        the support."""
        pts, ms = [], []
        for p, m in zip(self.points, self.multiplicities):
            if m > 1:
                pts.append(p)
                ms.append(m - 1)
        return FatPointScheme(self.n, pts, ms)

    def fattening(self, j=1):
        if j < 1:
            raise ValueError("fattening step must be >= 1")
        return FatPointScheme(self.n, self.points,
                              tuple(m + j for m in self.multiplicities))

    def reduce_at(self, j):
        """Lower the multiplicity of the j-th point (1-based) by one."""
        if not 1 <= j <= self.size:
            raise ValueError("point index out of range")
        pts, ms = [], []
        for i, (p, m) in enumerate(zip(self.points, self.multiplicities), 1):
            m2 = m - 1 if i == j else m
            if m2 > 0:
                pts.append(p)
                ms.append(m2)
        return FatPointScheme(self.n, pts, ms)

    def __eq__(self, other):
        return (isinstance(other, FatPointScheme) and other.n == self.n
                and other.points == self.points
                and other.multiplicities == self.multiplicities)

    def __hash__(self):
        return hash((self.n, self.points, self.multiplicities))

    def __str__(self):
        if not self.points:
            return "0 (empty scheme)"
        return " + ".join(
            (f"{m}*{p}" if m > 1 else str(p))
            for p, m in zip(self.points, self.multiplicities))

    def __repr__(self):
        return f"FatPointScheme({self})"


# ---------------------------------------------------------------------------
# vanishing ideals
# ---------------------------------------------------------------------------

def point_vanishing_ideal(point, order=None):
    """The prime of a rational point: n linear forms X_j - a_j X_p for the
    pivot coordinate p (a complete intersection)."""
    nv = point.nvars
    p = point.pivot_index
    a = point.coords
    gens = []
    for j in range(nv):
        if j == p:
            continue
        terms = {}
        ej = [0] * nv
        ej[j] = 1
        terms[tuple(ej)] = a[p]
        ep = [0] * nv
        ep[p] = 1
        terms[tuple(ep)] = terms.get(tuple(ep), 0) - a[j]
        gens.append(Polynomial(nv, terms))
    return Ideal(nv, gens, order)


def _falling(b, a):
    out = 1
    for i in range(a):
        out *= b - i
    return out


def vanishing_conditions(scheme, d):
    """Integer conditions matrix whose kernel is the degree-d piece of the
    vanishing ideal: one row per point and per derivative multi-index of
    order m_i - 1.  Valid whenever d >= max(m_i) - 1."""
    nv = scheme.nvars
    monos = monomials_of_degree(nv, d)
    rows = []
    for point, m in zip(scheme.points, scheme.multiplicities):
        P = point.integer_coords()
        for alpha in monomials_of_degree(nv, m - 1):
            row = []
            for beta in monos:
                if all(b >= a for a, b in zip(alpha, beta)):
                    v = 1
                    for a, b, pc in zip(alpha, beta, P):
                        v *= _falling(b, a)
                        if v == 0:
                            break
                        if b - a:
                            v *= pc ** (b - a)
                    row.append(v)
                else:
                    row.append(0)
            rows.append(row)
    return rows


@lru_cache(maxsize=None)
def _scheme_hf_data(scheme):
    """(values tuple, regularity index); exact per-degree codimensions."""
    if scheme.size == 0:
        return (0,), 0
    deg = scheme.degree()
    mmax = max(scheme.multiplicities)
    cap = sum(scheme.multiplicities) + scheme.n + 2
    values = []
    for d in range(cap + 1):
        full = len(monomials_of_degree(scheme.nvars, d))
        if d < mmax - 1:
            values.append(full)
        else:
            values.append(int_rank(vanishing_conditions(scheme, d)))
        if values[-1] == deg:
            return tuple(values), d
    raise AssertionError("Hilbert function failed to reach the scheme degree")


def scheme_hilbert_function(scheme):
    """Certified Hilbert function of the coordinate ring of the scheme.

    Exact per-degree codimension of the conditions kernel; stabilization
    is certified by reaching the closed-form degree (the Hilbert function
    of a fat point scheme increases strictly until it hits deg(W) and is
    constant afterwards).
    """
    values, r = _scheme_hf_data(scheme)
    return HilbertFunction.from_values(list(values), r, values[-1],
                                       certified=True)


def scheme_regularity(scheme):
    return _scheme_hf_data(scheme)[1]


def _kernel_polynomials(scheme, d):
    """Canonical basis of the degree-d piece of the vanishing ideal, as
    primitive integer polynomials."""
    nv = scheme.nvars
    monos = monomials_of_degree(nv, d)
    if scheme.size == 0:
        return [Polynomial(nv, {m: 1}) for m in monos]
    if d < max(scheme.multiplicities) - 1:
        return []
    rows = vanishing_conditions(scheme, d)
    kernel = int_nullspace(rows, len(monos))
    out = []
    for vec in kernel:
        den = 1
        for c in vec:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in vec]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        if g > 1:
            ints = [v // g for v in ints]
        out.append(Polynomial(nv, {m: c for m, c in zip(monos, ints) if c}))
    return out


def _vectorize(poly, index, ncols):
    row = [Fraction(0)] * ncols
    for m, c in poly.terms.items():
        row[index[m]] = c
    return row


@lru_cache(maxsize=None)
def fat_scheme_ideal(scheme):
    """The saturated vanishing ideal of the scheme, with a minimal
    generating set collected degree by degree up to r_W + 1."""
    nv = scheme.nvars
    if scheme.size == 0:
        return Ideal(nv, [Polynomial.constant(1, nv)])
    _, r = _scheme_hf_data(scheme)
    gens = []
    prev = []
    from .poly import monomial_index
    for d in range(r + 2):
        kernel = _kernel_polynomials(scheme, d)
        if not kernel:
            prev = []
            continue
        monos = monomials_of_degree(nv, d)
        index = monomial_index(nv, d)
        space = RowSpace()
        for b in prev:
            for v in range(nv):
                xb = Polynomial.variable(v, nv) * b
                space.add(_vectorize(xb, index, len(monos)))
        for vec_poly in kernel:
            if space.add(_vectorize(vec_poly, index, len(monos))):
                gens.append(vec_poly)
        prev = kernel
    return Ideal(nv, gens)


def separators(scheme, j):
    """A minimal set of separators for lowering the multiplicity of the
    j-th point (1-based): nu_j = deg(W) - deg(W_j) homogeneous polynomials
    F_1, ..., F_nu of nondecreasing degree with I_{W_j} = I_W + <F_1...>.

    Greedy choice, degree by degree, from a complement basis of the
    degree-d piece of I_W (plus the separators already chosen) inside the
    degree-d piece of I_{W_j}.  The produced set is not canonical beyond
    that rule; only the separator contracts are promised.
    """
    if not 1 <= j <= scheme.size:
        raise ValueError("point index out of range")
    reduced = scheme.reduce_at(j)
    nu = scheme.degree() - reduced.degree()
    _, r_w = _scheme_hf_data(scheme)
    if reduced.size:
        _, r_wj = _scheme_hf_data(reduced)
    else:
        r_wj = 0
    nv = scheme.nvars
    from .poly import monomial_index
    chosen = []
    for d in range(max(r_w, r_wj) + 2):
        target = _kernel_polynomials(reduced, d)
        if not target:
            continue
        monos = monomials_of_degree(nv, d)
        index = monomial_index(nv, d)
        ncols = len(monos)
        space = RowSpace()
        for b in _kernel_polynomials(scheme, d):
            space.add(_vectorize(b, index, ncols))
        for f in chosen:
            df = f.degree()
            if df > d:
                continue
            for m in monomials_of_degree(nv, d - df):
                space.add(_vectorize(Polynomial.from_monomial(m) * f,
                                     index, ncols))
        for cand in target:
            if space.add(_vectorize(cand, index, ncols)):
                chosen.append(cand)
    if len(chosen) != nu:
        raise AssertionError(
            f"separator count {len(chosen)} != expected {nu}")
    return chosen


# ---------------------------------------------------------------------------
# scheme file format
# ---------------------------------------------------------------------------

def format_scheme(scheme):
    """Line-oriented text format; bit-exact round trip with parse_scheme."""
    lines = [f"n {scheme.n}"]
    for p, m in zip(scheme.points, scheme.multiplicities):
        coords = " ".join(str(c) for c in p.coords)
        lines.append(f"point {coords} mult {m}")
    return "\n".join(lines) + "\n"


def parse_scheme(text):
    n = None
    data = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate ambient line")
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'n <ambient>'")
            n = int(parts[1])
            continue
        if parts[0] == "point":
            if n is None:
                raise ValueError(f"line {lineno}: ambient line must come first")
            if len(parts) != n + 4 or parts[-2] != "mult":
                raise ValueError(
                    f"line {lineno}: expected 'point <c0> .. <c{n}> mult <m>'")
            coords = [Fraction(c) for c in parts[1:n + 2]]
            mult = int(parts[-1])
            data.append((coords, mult))
            continue
        raise ValueError(f"line {lineno}: unknown directive {parts[0]!r}")
    if n is None:
        raise ValueError("missing ambient line 'n <ambient>'")
    return FatPointScheme.from_coords(n, data)


def read_scheme(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scheme(fh.read())


def write_scheme(scheme, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_scheme(scheme))
