"""Exact dense linear algebra over the rationals, at desk scale.

Integer matrices go through a fraction-free row echelon with per-row
content stripping (keeps entries small without ever leaving Z); rational
data uses plain Gaussian elimination over Fraction.  Nothing here is
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _strip_row(row):
    g = 0
    for v in row:
        if v:
            g = gcd(g, abs(v))
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def int_echelon(rows):
    """Fraction-free row echelon of an integer matrix.

    Returns (echelon_rows, pivot_cols); the input list is not modified.
    """
    rows = [_strip_row(list(r)) for r in rows if any(r)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        best = None
        for i in range(r, len(rows)):
            v = rows[i][c]
            if v and (best is None or abs(v) < abs(rows[best][c])):
                best = i
                if abs(v) == 1:
                    break
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        piv_row = rows[r]
        a = piv_row[c]
        for i in range(r + 1, len(rows)):
            b = rows[i][c]
            if b:
                g = gcd(abs(a), abs(b))
                fa, fb = a // g, b // g
                cur = rows[i]
                rows[i] = _strip_row(
                    [fa * cur[t] - fb * piv_row[t] for t in range(ncols)])
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def int_rank(rows):
    return len(int_echelon(rows)[1])


def int_nullspace(rows, ncols):
    """Basis of the rational kernel of an integer matrix (list of Fraction
    vectors), one vector per free column, canonicalized by RREF."""
    ech, pivots = int_echelon(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = Fraction(0)
            row = ech[r]
            for c in range(pc + 1, ncols):
                if row[c] and x[c]:
                    s += row[c] * x[c]
            x[pc] = -s / row[pc]
        basis.append(x)
    rref_rows, _ = frac_rref(basis)
    return rref_rows


def frac_rref(rows):
    """Reduced row echelon form over Fraction.  Returns (rows, pivot_cols)
    with zero rows dropped; the result is the canonical basis of the row
    space."""
    rows = [[Fraction(v) for v in r] for r in rows]
    rows = [r for r in rows if any(r)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    rows = [row for row in rows if any(row)]
    return rows, pivots


class RowSpace:
    """Incrementally built triangular basis of a rational row space.

    Rows keep their leftmost nonzero entry (the pivot) normalized to 1 and
    are stored sorted by pivot; reduce/contains/add are exact.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows = []  # list of (pivot_col, row) sorted by pivot_col

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        v = list(vec)
        for pc, row in self.rows:
            c = v[pc]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def contains(self, vec):
        return not any(self.reduce(vec))

    def add(self, vec):
        """Reduce vec against the space; if independent, insert and return
        True, else return False."""
        v = self.reduce(vec)
        pc = None
        for i, a in enumerate(v):
            if a:
                pc = i
                break
        if pc is None:
            return False
        inv = Fraction(1) / Fraction(v[pc])
        v = [Fraction(a) * inv for a in v]
        lo = 0
        while lo < len(self.rows) and self.rows[lo][0] < pc:
            lo += 1
        self.rows.insert(lo, (pc, v))
        return True
