"""Exact Hilbert functions, series numerators, constant Hilbert polynomials
and regularity indices for quotients S/I and graded free-module quotients.

Everything is certified through the Hilbert series of the leading-term
data: the numerator of HS(z) over (1-z)^(n+1) is computed exactly by a
pivot-variable recursion on the monomial ideal, the (1-z) factors are
cancelled, and the stabilization degree and eventual value are read off.
A per-degree exact row-reduction path is kept as an independent
cross-check oracle for module quotients.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .linalg import int_rank
from .poly import (mono_degree, mono_divides, mono_mul, monomial_index,
                   monomials_of_degree)


class NonConstantHilbertPolynomial(ValueError):
    """The quotient's Hilbert polynomial is not a constant."""


# ---------------------------------------------------------------------------
# series numerator of a monomial ideal
# ---------------------------------------------------------------------------

def minimalize_monomials(gens):
    """Minimal generating set of the monomial ideal, sorted."""
    gens = sorted(set(gens), key=lambda m: (mono_degree(m), m))
    out = []
    for m in gens:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return tuple(out)


def _poly_add(a, b):
    n = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n))


def _poly_shift(a, k):
    return (0,) * k + tuple(a)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return tuple(out)


def _trim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


_numer_cache = {}


def hilbert_numerator(lt_gens, nvars):
    """Numerator of HS_{S/LT}(z) over (1-z)^nvars for the monomial ideal LT.

    Pivot recursion on the short exact sequence for multiplication by a
    variable, with pairwise-coprime products as base cases.
    """
    gens = minimalize_monomials(tuple(tuple(m) for m in lt_gens))
    return _numerator(gens, nvars)


def _numerator(gens, nvars):
    key = (gens, nvars)
    hit = _numer_cache.get(key)
    if hit is not None:
        return hit
    if not gens:
        result = (1,)
    elif any(mono_degree(m) == 0 for m in gens):
        result = ()
    else:
        coprime = True
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if not all(a == 0 or b == 0
                           for a, b in zip(gens[i], gens[j])):
                    coprime = False
                    break
            if not coprime:
                break
        if coprime:
            result = (1,)
            for m in gens:
                result = _poly_mul(result, _one_minus_z_power(mono_degree(m)))
        else:
            counts = [0] * nvars
            for m in gens:
                for v, e in enumerate(m):
                    if e:
                        counts[v] += 1
            pivot = max(range(nvars), key=lambda v: counts[v])
            # I + <x>: generators untouched by x, plus x itself
            x = tuple(1 if v == pivot else 0 for v in range(nvars))
            plus = minimalize_monomials(
                [m for m in gens if m[pivot] == 0] + [x])
            # I : x: lower the pivot exponent by one where present
            colon = minimalize_monomials(
                [m[:pivot] + (max(m[pivot] - 1, 0),) + m[pivot + 1:]
                 for m in gens])
            result = _trim(_poly_add(_numerator(plus, nvars),
                                     _poly_shift(_numerator(colon, nvars), 1)))
    _numer_cache[key] = result
    return result


def _one_minus_z_power(d):
    out = [0] * (d + 1)
    out[0] = 1
    out[d] = -1
    return tuple(out)


# ---------------------------------------------------------------------------
# Hilbert functions
# ---------------------------------------------------------------------------

class HilbertFunction:
    """Degree-indexed dimension sequence with certified stabilization data.

    For a quotient with constant Hilbert polynomial, ``stable_from`` is the
    regularity index and ``stable_value`` the polynomial's value.  Values
    are stored up to stable_from + 2; queries beyond return the constant.
    Quotients with non-constant Hilbert polynomial (e.g. a free module) are
    supported through the series backing; their stable data is None.
    """

    def __init__(self, values, stable_from, stable_value, certified,
                 numer=None, denom_exp=None):
        self.values = dict(values)
        self.stable_from = stable_from
        self.stable_value = stable_value
        self.certified = certified
        self._numer = tuple(numer) if numer is not None else None
        self._denom_exp = denom_exp

    @classmethod
    def from_values(cls, values_list, stable_from, stable_value,
                    certified=True):
        values = {d: v for d, v in enumerate(values_list)}
        for d in range(stable_from, stable_from + 3):
            values.setdefault(d, stable_value)
        return cls(values, stable_from, stable_value, certified)

    def value(self, d):
        if d < 0:
            return 0
        v = self.values.get(d)
        if v is not None:
            return v
        if self.stable_from is not None and d >= self.stable_from:
            return self.stable_value
        if self._numer is not None:
            return _series_value(self._numer, self._denom_exp, d)
        raise KeyError(f"degree {d} outside the stored range")

    def values_upto(self, d):
        return [self.value(i) for i in range(d + 1)]

    @property
    def is_constant_eventually(self):
        return self.stable_from is not None

    @property
    def regularity_index(self):
        """Least degree from which the values equal the eventual constant."""
        if not self.certified:
            raise ValueError("regularity index requires a certified "
                             "Hilbert function")
        if self.stable_from is None:
            raise NonConstantHilbertPolynomial(
                "Hilbert polynomial is not constant")
        return self.stable_from

    @property
    def hilbert_polynomial(self):
        if self.stable_from is None:
            raise NonConstantHilbertPolynomial(
                "Hilbert polynomial is not constant")
        return self.stable_value

    def format_row(self):
        """Golden print format: values from degree 0 through stable_from+1,
        then the ... marker."""
        if self.stable_from is None:
            raise NonConstantHilbertPolynomial(
                "Hilbert polynomial is not constant")
        upto = max(self.stable_from + 1, 1)
        vals = " ".join(str(self.value(d)) for d in range(upto + 1))
        return vals + " ..."

    def shift(self, k):
        """The Hilbert function of the same module shifted into degree +k."""
        values = {d + k: v for d, v in self.values.items()}
        for d in range(k):
            values[d] = 0
        numer = _poly_shift(self._numer, k) if self._numer is not None else None
        sf = self.stable_from + k if self.stable_from is not None else None
        return HilbertFunction(values, sf, self.stable_value, self.certified,
                               numer=numer, denom_exp=self._denom_exp)

    def __eq__(self, other):
        if not isinstance(other, HilbertFunction):
            return NotImplemented
        if (self.stable_from is None) != (other.stable_from is None):
            return False
        if self.stable_from is None:
            hi = 0
        else:
            hi = max(self.stable_from, other.stable_from) + 2
        return (self.stable_from == other.stable_from
                and self.stable_value == other.stable_value
                and self.values_upto(hi) == other.values_upto(hi))

    def __repr__(self):
        if self.stable_from is not None:
            return f"HilbertFunction({self.format_row()!r})"
        return "HilbertFunction(<nonconstant>)"


def _series_value(numer, denom_exp, d):
    if denom_exp == 0:
        return numer[d] if d < len(numer) else 0
    total = 0
    for j, c in enumerate(numer):
        if c and d >= j:
            total += c * comb(d - j + denom_exp - 1, denom_exp - 1)
    return total


def _divide_one_minus_z(numer):
    """Quotient of numer by (1-z); caller guarantees numer(1) == 0."""
    out = []
    acc = 0
    for c in numer[:-1] if numer else []:
        acc += c
        out.append(acc)
    return _trim(out)


def hf_from_numerator(numer, nvars, certified=True):
    """HilbertFunction of a quotient with series numer / (1-z)^nvars."""
    numer = _trim(numer)
    exp = nvars
    while numer and sum(numer) == 0:
        numer = _divide_one_minus_z(numer)
        exp -= 1
    if not numer:
        hf = HilbertFunction({0: 0, 1: 0, 2: 0}, 0, 0, certified,
                             numer=(), denom_exp=0)
        return hf
    if exp == 0:
        stable_from = len(numer)
        stable_value = 0
    elif exp == 1:
        stable_from = len(numer) - 1
        stable_value = sum(numer)
    else:
        values = {d: _series_value(numer, exp, d) for d in range(8)}
        return HilbertFunction(values, None, None, certified,
                               numer=numer, denom_exp=exp)
    values = {d: _series_value(numer, exp, d)
              for d in range(stable_from + 3)}
    return HilbertFunction(values, stable_from, stable_value, certified,
                           numer=numer, denom_exp=exp)


def ideal_hilbert_function(ideal):
    """Certified Hilbert function of S/I from the leading-term staircase."""
    numer = hilbert_numerator(ideal.leading_monomials, ideal.nvars)
    return hf_from_numerator(numer, ideal.nvars, certified=True)


def module_hilbert_function(submodule):
    """Certified Hilbert function of the graded free-module quotient
    F / M, counting standard monomial * component pairs outside the
    leading-term submodule."""
    total = ()
    for j, lms in enumerate(submodule.component_leading_monomials()):
        numer = hilbert_numerator(lms, submodule.nvars)
        total = _poly_add(total, _poly_shift(numer, submodule.shifts[j]))
    return hf_from_numerator(_trim(total), submodule.nvars, certified=True)


def regularity_index(hf):
    """Spec-level accessor; rejects uncertified input."""
    return hf.regularity_index


# ---------------------------------------------------------------------------
# independent per-degree oracle (exact row reduction)
# ---------------------------------------------------------------------------

def module_graded_dims_by_row_reduction(rank, shifts, relation_gens, degrees,
                                        nvars=None):
    """Per-degree dimensions of the free-module quotient by exact row
    reduction of the relation span.  Independent of the Groebner path;
    intended as a cross-check oracle (certified = False semantics).
    """
    if nvars is None:
        nvars = relation_gens[0].nvars
    out = {}
    for d in degrees:
        cols = []
        offsets = []
        for j in range(rank):
            offsets.append(sum(cols))
            cols.append(len(monomials_of_degree(nvars, d - shifts[j])))
        ncols = sum(cols)
        indexers = [monomial_index(nvars, d - shifts[j]) for j in range(rank)]
        rows = []
        for rel in relation_gens:
            rd = rel.degree()
            if rd is None or rd > d:
                continue
            dens = 1
            for compo in rel.components:
                for c in compo.terms.values():
                    dens = dens * c.denominator
            for m in monomials_of_degree(nvars, d - rd):
                row = [0] * ncols
                for j, compo in enumerate(rel.components):
                    base = offsets[j]
                    for m2, c in compo.terms.items():
                        col = base + indexers[j][mono_mul(m, m2)]
                        row[col] += int(c * dens)
                rows.append(row)
        free_dim = ncols
        rank_rel = int_rank(rows) if rows else 0
        out[d] = free_dim - rank_rel
    return out


def ideal_graded_dims_by_conditions(rows_by_degree):
    """Helper kept for symmetry; ranks of exact integer condition matrices."""
    return {d: int_rank(rows) for d, rows in rows_by_degree.items()}
