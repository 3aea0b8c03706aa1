"""Jacobian ideals and the modules of Kaehler differential k-forms of fat
point schemes: graded free presentations, Hilbert functions, constant
Hilbert polynomials and regularity indices.

The k-form module of the coordinate ring is presented as the rank
C(n+1, k) free module with all generator degrees k (basis the wedge
products dX_{i_1}...dX_{i_k}, indices strictly increasing, in lex order)
modulo the submodule generated by

  * F times each basis element, and
  * dF wedged with each (k-1)-basis element, with dF expanded as
    sum_i (dF/dX_i) dX_i,

for F running over the generators of the vanishing ideal.  The certified
Hilbert data comes from the module Groebner basis of that submodule; for
k = n+1 an independent fast path reads the same data off S/dI_W shifted
by n+1, and the two must agree.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

from .groebner import Ideal, ModuleElement, Submodule
from .hilbert import ideal_hilbert_function, module_hilbert_function
from .poly import Polynomial
from .scheme import fat_scheme_ideal, scheme_regularity


def jacobian_ideal(ideal):
    """The ideal generated by all first partials of the generators.

    Contains the input ideal by Euler's relation (checked); only the given
    generating set's partials are used, which suffices for homogeneous
    ideals in characteristic zero.  The zero ideal is rejected; the unit
    ideal maps to itself.
    """
    if not ideal.gens:
        raise ValueError("the zero ideal has no Jacobian ideal here")
    if any(g.degree() == 0 for g in ideal.gens):
        return Ideal(ideal.nvars, [Polynomial.constant(1, ideal.nvars)],
                     ideal.order)
    partials = []
    for g in ideal.gens:
        for i in range(ideal.nvars):
            d = g.diff(i)
            if not d.is_zero():
                partials.append(d)
    out = Ideal(ideal.nvars, partials, ideal.order)
    for g in ideal.gens:
        if not out.contains(g):
            raise AssertionError("Euler containment I <= dI failed")
    return out


@lru_cache(maxsize=None)
def scheme_jacobian_ideal(scheme):
    return jacobian_ideal(fat_scheme_ideal(scheme))


class KaehlerPresentation:
    """Presentation data of the k-form module of a fat point scheme."""

    def __init__(self, scheme, k):
        nv = scheme.nvars
        if not 1 <= k <= nv:
            raise ValueError("form degree k out of range")
        self.scheme = scheme
        self.k = k
        self.nvars = nv
        self.ideal = fat_scheme_ideal(scheme)
        self.basis = tuple(combinations(range(nv), k))
        self.rank = comb(nv, k)
        self.shifts = (k,) * self.rank
        index = {T: i for i, T in enumerate(self.basis)}
        zero = Polynomial.zero(nv)
        rels = []
        for F in self.ideal.gens:
            for i in range(self.rank):
                comps = [zero] * self.rank
                comps[i] = F
                rels.append(ModuleElement(comps, self.shifts))
            partials = [F.diff(i) for i in range(nv)]
            for U in combinations(range(nv), k - 1):
                comps = [zero] * self.rank
                for i in range(nv):
                    if i in U:
                        continue
                    # move dX_i past the smaller wedge factors: sign flip each
                    sign = (-1) ** sum(1 for u in U if u < i)
                    T = tuple(sorted(U + (i,)))
                    comps[index[T]] = (partials[i] if sign > 0
                                       else -partials[i])
                rels.append(ModuleElement(comps, self.shifts))
        self.relation_generators = tuple(rels)
        self.relations = Submodule(self.rank, self.shifts,
                                   [r for r in rels if not r.is_zero()],
                                   nvars=nv)

    def __repr__(self):
        return (f"KaehlerPresentation(k={self.k}, rank={self.rank}, "
                f"shifts={self.shifts}, relations={len(self.relation_generators)})")


@lru_cache(maxsize=None)
def kaehler_presentation(scheme, k):
    return KaehlerPresentation(scheme, k)


@lru_cache(maxsize=None)
def kaehler_hilbert_function(scheme, k):
    """Certified Hilbert function of the k-form module, via the module
    Groebner basis of the presentation.  For k = n+1 the independent
    shifted S/dI_W path is computed as well and must agree.
    """
    pres = kaehler_presentation(scheme, k)
    hf = module_hilbert_function(pres.relations)
    if k == scheme.nvars:
        fast = kaehler_top_form_hf_fast(scheme)
        if hf != fast:
            raise AssertionError(
                "top-form fast path disagrees with the presentation path")
    return hf


@lru_cache(maxsize=None)
def kaehler_top_form_hf_fast(scheme):
    """HF of the (n+1)-form module as S/dI_W shifted into degree n+1."""
    base = ideal_hilbert_function(scheme_jacobian_ideal(scheme))
    if base.stable_value == 0 and base.stable_from == 0:
        return base
    return base.shift(scheme.nvars)


def kaehler_hp(scheme, k):
    """Constant Hilbert polynomial of the k-form module."""
    return kaehler_hilbert_function(scheme, k).hilbert_polynomial


def hp_bound_interval(scheme, k):
    """Closed-form lower/upper bounds for the k-form Hilbert polynomial."""
    n = scheme.n
    lo = sum(comb(n + 1, k) * comb(m + n - 2, n)
             for m in scheme.multiplicities)
    hi = sum(comb(n + 1, k) * comb(m + n - 1, n)
             for m in scheme.multiplicities)
    return lo, hi


def ri_bound(scheme, k):
    """Regularity index bound in terms of r_W and the first fattening."""
    n = scheme.n
    r_w = scheme_regularity(scheme)
    r_v = scheme_regularity(scheme.fattening(1))
    return min(max(r_w + k, r_v + k - 1), max(r_w + n, r_v + n - 1))


def kaehler_ri(scheme, k, check_bound=True):
    """Exact regularity index of the k-form module, checked against the
    closed-form bound."""
    ri = kaehler_hilbert_function(scheme, k).regularity_index
    if check_bound and scheme.size:
        bound = ri_bound(scheme, k)
        if ri > bound:
            raise AssertionError(
                f"regularity index {ri} exceeds the certified bound {bound}")
    return ri
