"""Buchberger Groebner bases for ideals and submodules of graded free
modules, plus the ideal calculus built on them (sum, product, power,
intersection, colon, saturation, graded pieces).

One engine serves both cases: terms are keyed by (component, monomial) and
an ideal is the rank-1 case.  Inside the engine coefficients are primitive
integer vectors and reduction is pseudo-division (scale, subtract, strip
content); the public reduced bases are monic over Fraction, which is the
unique reduced Groebner basis for the active order.

Pair selection is the normal strategy (lowest lcm degree first).  The
product (coprime) criterion is applied for ideals only -- it is not valid
for modules -- and the chain criterion is applied for both.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import gcd

from .poly import (BlockElimination, DegRevLex, Polynomial, mono_degree,
                   mono_div, mono_divides, mono_lcm, mono_mul,
                   monomials_of_degree, parse_polynomial)


# ---------------------------------------------------------------------------
# integer engine
# ---------------------------------------------------------------------------

def _poly_to_int(p):
    """Polynomial -> primitive integer dict keyed (0, monomial)."""
    if not p.terms:
        return {}
    den = 1
    for c in p.terms.values():
        d = c.denominator
        den = den * d // gcd(den, d)
    out = {}
    g = 0
    for m, c in p.terms.items():
        v = int(c * den)
        out[(0, m)] = v
        g = gcd(g, abs(v))
    if g > 1:
        out = {t: v // g for t, v in out.items()}
    return out


def _element_to_int(components):
    """Tuple of Polynomials -> primitive integer dict keyed (comp, mono)."""
    den = 1
    for p in components:
        for c in p.terms.values():
            d = c.denominator
            den = den * d // gcd(den, d)
    out = {}
    g = 0
    for j, p in enumerate(components):
        for m, c in p.terms.items():
            v = int(c * den)
            out[(j, m)] = v
            g = gcd(g, abs(v))
    if g > 1:
        out = {t: v // g for t, v in out.items()}
    return out


def _strip_content(d):
    g = 0
    for v in d.values():
        g = gcd(g, abs(v))
        if g == 1:
            return d
    if g > 1:
        return {t: v // g for t, v in d.items()}
    return d


def _lead(d, keyf):
    best = None
    bk = None
    for (j, m) in d:
        k = (-j, keyf(m))
        if bk is None or k > bk:
            best, bk = (j, m), k
    return best


def _normalize_int(d, keyf):
    """Strip content and make the leading coefficient positive."""
    if not d:
        return d
    d = _strip_content(d)
    if d[_lead(d, keyf)] < 0:
        d = {t: -v for t, v in d.items()}
    return d


def _nf_int(p, reducers_by_comp, keyf):
    """Pseudo normal form of the term dict p against the reducers.

    The result is a primitive scalar multiple of the true normal form,
    which is all the basis computation needs (zero iff the true normal
    form is zero).
    """
    if not p:
        return p
    p = dict(p)
    done = set()
    keycache = {}
    while True:
        cur = None
        ck = None
        for t in p:
            if t in done:
                continue
            k = keycache.get(t)
            if k is None:
                k = (-t[0], keyf(t[1]))
                keycache[t] = k
            if ck is None or k > ck:
                cur, ck = t, k
        if cur is None:
            break
        comp, mono = cur
        hit = None
        for red in reducers_by_comp.get(comp, ()):
            if mono_divides(red[0], mono):
                hit = red
                break
        if hit is None:
            done.add(cur)
            continue
        lm, lc, terms = hit
        a = p[cur]
        g = gcd(abs(a), lc)
        fp = lc // g
        fr = a // g
        if fp != 1:
            p = {t: fp * v for t, v in p.items()}
        shift = mono_div(mono, lm)
        for (j2, m2), v2 in terms.items():
            t2 = (j2, mono_mul(m2, shift))
            nv = p.get(t2, 0) - fr * v2
            if nv:
                p[t2] = nv
            else:
                p.pop(t2, None)
        p = _strip_content(p)
    return p


def _spair_int(f, f_lead, f_lc, g, g_lead, g_lc):
    """S-vector of two elements with the same leading component."""
    mf, mg = f_lead[1], g_lead[1]
    L = mono_lcm(mf, mg)
    uf = mono_div(L, mf)
    ug = mono_div(L, mg)
    cl = f_lc * g_lc // gcd(f_lc, g_lc)
    cf = cl // f_lc
    cg = cl // g_lc
    s = {}
    for (j, m), v in f.items():
        t = (j, mono_mul(m, uf))
        s[t] = s.get(t, 0) + cf * v
    for (j, m), v in g.items():
        t = (j, mono_mul(m, ug))
        nv = s.get(t, 0) - cg * v
        if nv:
            s[t] = nv
        else:
            s.pop(t, None)
    return s


def _buchberger_int(gens, keyf, use_product_criterion):
    """Reduced Groebner basis of the submodule generated by the integer
    term dicts, as a list of primitive dicts sorted by leading term."""
    G = []
    leads = []   # (comp, mono)
    lcs = []
    red_by_comp = {}
    pairs = {}

    def add_element(h):
        t = len(G)
        lead = _lead(h, keyf)
        G.append(h)
        leads.append(lead)
        lcs.append(h[lead])
        red_by_comp.setdefault(lead[0], []).append((lead[1], h[lead], h))
        for i in range(t):
            if leads[i][0] != lead[0]:
                continue
            L = mono_lcm(leads[i][1], lead[1])
            pairs[(i, t)] = (mono_degree(L), lead[0], keyf(L), t, i)

    for g in gens:
        g = {t: v for t, v in g.items() if v}
        if not g:
            continue
        h = _nf_int(g, red_by_comp, keyf)
        if h:
            add_element(_normalize_int(h, keyf))

    while pairs:
        ij = min(pairs, key=pairs.get)
        del pairs[ij]
        i, j = ij
        comp = leads[i][0]
        L = mono_lcm(leads[i][1], leads[j][1])
        if use_product_criterion and L == mono_mul(leads[i][1], leads[j][1]):
            continue
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if leads[k][0] == comp and mono_divides(leads[k][1], L):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a not in pairs and b not in pairs:
                    skip = True
                    break
        if skip:
            continue
        s = _spair_int(G[i], leads[i], lcs[i], G[j], leads[j], lcs[j])
        h = _nf_int(s, red_by_comp, keyf)
        if h:
            add_element(_normalize_int(h, keyf))

    return _autoreduce_int(G, keyf)


def _autoreduce_int(G, keyf):
    """Minimalize and tail-reduce a Groebner basis given as integer dicts."""
    items = [(h, _lead(h, keyf)) for h in G if h]
    items.sort(key=lambda p: (-p[1][0], keyf(p[1][1])))
    kept = []
    for h, lead in items:
        if not any(kl[0] == lead[0] and mono_divides(kl[1], lead[1])
                   for _, kl in kept):
            kept.append((h, lead))
    changed = True
    while changed:
        changed = False
        for idx in range(len(kept)):
            h, lead = kept[idx]
            red_by_comp = {}
            for idx2, (h2, lead2) in enumerate(kept):
                if idx2 == idx:
                    continue
                red_by_comp.setdefault(lead2[0], []).append(
                    (lead2[1], h2[lead2], h2))
            r = _normalize_int(_nf_int(h, red_by_comp, keyf), keyf)
            if r != h:
                kept[idx] = (r, _lead(r, keyf))
                changed = True
    kept.sort(key=lambda p: (-p[1][0], keyf(p[1][1])))
    return [h for h, _ in kept]


# ---------------------------------------------------------------------------
# public reduction (exact Fraction arithmetic)
# ---------------------------------------------------------------------------

def normal_form(p, basis, order=None):
    """Remainder of p on multivariate division by the (ordered) basis list.

    No term of the result is divisible by any basis leading term, and
    p - result lies in the span of the basis with polynomial coefficients.
    """
    order = order or DegRevLex(p.nvars)
    reds = []
    for b in basis:
        if b.is_zero():
            continue
        if b.nvars != p.nvars:
            raise ValueError("ambient mismatch")
        lm = b.leading_monomial(order)
        reds.append((lm, b.terms[lm], b.terms))
    work = dict(p.terms)
    done = set()
    keyf = order.key
    while True:
        cur = None
        ck = None
        for m in work:
            if m in done:
                continue
            k = keyf(m)
            if ck is None or k > ck:
                cur, ck = m, k
        if cur is None:
            break
        hit = None
        for red in reds:
            if mono_divides(red[0], cur):
                hit = red
                break
        if hit is None:
            done.add(cur)
            continue
        lm, lc, terms = hit
        f = work[cur] / lc
        shift = mono_div(cur, lm)
        for m2, c2 in terms.items():
            mm = mono_mul(m2, shift)
            nv = work.get(mm, 0) - f * c2
            if nv:
                work[mm] = nv
            else:
                work.pop(mm, None)
    return Polynomial(p.nvars, work)


def exact_div(p, g, order=None):
    """Quotient p / g when g divides p exactly; raises ValueError if not."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    order = order or DegRevLex(p.nvars)
    lm = g.leading_monomial(order)
    lc = g.terms[lm]
    work = dict(p.terms)
    quot = {}
    keyf = order.key
    while work:
        cur = max(work, key=keyf)
        if not mono_divides(lm, cur):
            raise ValueError("polynomial is not divisible")
        f = work[cur] / lc
        shift = mono_div(cur, lm)
        quot[shift] = f
        for m2, c2 in g.terms.items():
            mm = mono_mul(m2, shift)
            nv = work.get(mm, 0) - f * c2
            if nv:
                work[mm] = nv
            else:
                work.pop(mm, None)
    return Polynomial(p.nvars, quot)


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

def _int_to_poly(d, nvars):
    """Polynomial from an integer dict keyed (0, mono)."""
    return Polynomial(nvars, {m: v for (_, m), v in d.items()})


def _monic(p, order):
    lc = p.leading_coefficient(order)
    if lc == 1:
        return p
    inv = 1 / lc
    return Polynomial(p.nvars, {m: c * inv for m, c in p.terms.items()})


class Ideal:
    """Homogeneous ideal given by generators, with a lazily cached reduced
    Groebner basis for its (fixed) monomial order.

    The cache is keyed by the order at construction; computing under a
    different order means constructing a new Ideal.
    """

    def __init__(self, nvars, gens, order=None):
        self.nvars = nvars
        self.order = order or DegRevLex(nvars)
        out = []
        for g in gens:
            if isinstance(g, str):
                g = parse_polynomial(g, nvars)
            if g.nvars != nvars:
                raise ValueError("ambient mismatch")
            if not g.is_zero():
                out.append(g)
        self.gens = tuple(out)

    @classmethod
    def from_groebner(cls, nvars, gb_polys, order=None):
        """Wrap polynomials already known to be a Groebner basis; only the
        (cheap) autoreduction is performed."""
        order = order or DegRevLex(nvars)
        ints = [_poly_to_int(p) for p in gb_polys]
        reduced = _autoreduce_int([d for d in ints if d], order.key)
        polys = tuple(_monic(_int_to_poly(d, nvars), order) for d in reduced)
        ideal = cls(nvars, polys, order)
        ideal.__dict__["groebner_basis"] = polys
        return ideal

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.gens)
        return f"Ideal<{inner}>"

    # -- Groebner data ------------------------------------------------------

    @cached_property
    def groebner_basis(self):
        """The unique reduced Groebner basis: monic, autoreduced, sorted by
        increasing leading term."""
        ints = [_poly_to_int(g) for g in self.gens]
        gb = _buchberger_int(ints, self.order.key, use_product_criterion=True)
        return tuple(_monic(_int_to_poly(d, self.nvars), self.order)
                     for d in gb)

    @cached_property
    def leading_monomials(self):
        """Minimal generators of the leading term ideal."""
        return tuple(g.leading_monomial(self.order)
                     for g in self.groebner_basis)

    def is_zero(self):
        return not self.groebner_basis

    def is_unit(self):
        gb = self.groebner_basis
        return len(gb) == 1 and gb[0].degree() == 0

    # -- membership and equality --------------------------------------------

    def normal_form(self, p):
        return normal_form(p, self.groebner_basis, self.order)

    def contains(self, p):
        return self.normal_form(p).is_zero()

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.gens)

    def equals(self, other):
        return (self.nvars == other.nvars
                and self.order == other.order
                and self.groebner_basis == other.groebner_basis)

    # -- calculus -------------------------------------------------------------

    def sum_with(self, other):
        self._same_ambient(other)
        return Ideal(self.nvars, self.gens + other.gens, self.order)

    def product(self, other):
        """Ideal generated by the pairwise products of the generators."""
        self._same_ambient(other)
        gens = []
        seen = set()
        for f in self.gens:
            for g in other.gens:
                h = f * g
                if not h.is_zero() and h not in seen:
                    seen.add(h)
                    gens.append(h)
        return Ideal(self.nvars, gens, self.order)

    def power(self, k):
        if k < 0:
            raise ValueError("negative ideal power")
        result = Ideal(self.nvars, [Polynomial.constant(1, self.nvars)],
                       self.order)
        for _ in range(k):
            result = result.product(self)
        return result

    def intersect(self, other):
        """Exact intersection via one auxiliary variable and elimination.

        Forms t*I + (1-t)*J in Q[t, X_0..X_n], computes a Groebner basis
        for the block order eliminating t, and keeps the t-free part.
        """
        self._same_ambient(other)
        nv = self.nvars + 1
        keyf = BlockElimination(1, nv).key
        lifted = []
        for f in self.gens:
            d = _poly_to_int(f)
            lifted.append({(0, (1,) + m): v for (_, m), v in d.items()})
        for g in other.gens:
            d = _poly_to_int(g)
            e = {}
            for (_, m), v in d.items():
                e[(0, (0,) + m)] = v
                e[(0, (1,) + m)] = -v
            lifted.append(e)
        gb = _buchberger_int(lifted, keyf, use_product_criterion=True)
        kept = []
        for d in gb:
            if all(m[0] == 0 for (_, m) in d):
                kept.append({(0, m[1:]): v for (_, m), v in d.items()})
        reduced = _autoreduce_int(kept, self.order.key)
        polys = [_monic(_int_to_poly(d, self.nvars), self.order)
                 for d in reduced]
        ideal = Ideal(self.nvars, polys, self.order)
        ideal.__dict__["groebner_basis"] = tuple(polys)
        return ideal

    def colon_poly(self, g):
        """I : <g> computed as (I intersect <g>) divided by g."""
        if g.is_zero():
            raise ValueError("colon by zero polynomial")
        inter = self.intersect(Ideal(self.nvars, [g], self.order))
        quots = [exact_div(h, g, self.order) for h in inter.gens]
        return Ideal(self.nvars, quots, self.order)

    def colon(self, other):
        """Colon ideal I : J, as the intersection over the generators of J."""
        self._same_ambient(other)
        gens = [g for g in other.gens if not g.is_zero()]
        if not gens:
            raise ValueError("colon by the zero ideal")
        result = None
        for g in gens:
            q = self.colon_poly(g)
            result = q if result is None else result.intersect(q)
        return result

    def saturate(self, other):
        """I : J^infinity, by iterating the colon until the chain stops."""
        current = self
        while True:
            nxt = current.colon(other)
            if nxt.equals(current):
                return current
            current = nxt

    # -- graded pieces ---------------------------------------------------------

    def graded_basis(self, d):
        """Canonical vector-space basis of the degree-d piece, as polynomials."""
        from .linalg import frac_rref
        from .poly import monomial_index
        if d < 0:
            return []
        monos = monomials_of_degree(self.nvars, d)
        index = monomial_index(self.nvars, d)
        rows = []
        for g in self.groebner_basis:
            dg = g.degree()
            if dg < 0 or dg > d:
                continue
            for m in monomials_of_degree(self.nvars, d - dg):
                row = [Fraction(0)] * len(monos)
                for m2, c in g.terms.items():
                    row[index[mono_mul(m, m2)]] = c
                rows.append(row)
        reduced, _ = frac_rref(rows)
        out = []
        for row in reduced:
            terms = {monos[i]: c for i, c in enumerate(row) if c}
            out.append(Polynomial(self.nvars, terms))
        return out

    def graded_dim(self, d):
        """dim of the degree-d piece, counted from the leading-term staircase."""
        if d < 0:
            return 0
        lms = self.leading_monomials
        total = len(monomials_of_degree(self.nvars, d))
        standard = 0
        for m in monomials_of_degree(self.nvars, d):
            if not any(mono_divides(lm, m) for lm in lms):
                standard += 1
        return total - standard

    def _same_ambient(self, other):
        if self.nvars != other.nvars:
            raise ValueError("ambient mismatch")


# ---------------------------------------------------------------------------
# free module elements and submodules
# ---------------------------------------------------------------------------

class ModuleElement:
    """Element of a graded free module with component degree shifts."""

    __slots__ = ("nvars", "shifts", "components")

    def __init__(self, components, shifts):
        components = tuple(components)
        shifts = tuple(shifts)
        if len(components) != len(shifts):
            raise ValueError("rank/shift mismatch")
        if not components:
            raise ValueError("rank must be positive")
        nv = components[0].nvars
        for c in components:
            if c.nvars != nv:
                raise ValueError("ambient mismatch")
        self.nvars = nv
        self.shifts = shifts
        self.components = components

    @property
    def rank(self):
        return len(self.components)

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def degree(self):
        degs = {c.degree() + s
                for c, s in zip(self.components, self.shifts)
                if not c.is_zero()}
        if not degs:
            return None
        return max(degs)

    def is_homogeneous(self):
        degs = set()
        for c, s in zip(self.components, self.shifts):
            if c.is_zero():
                continue
            if not c.is_homogeneous():
                return False
            degs.add(c.degree() + s)
        return len(degs) <= 1

    def __add__(self, other):
        self._check(other)
        return ModuleElement(
            tuple(a + b for a, b in zip(self.components, other.components)),
            self.shifts)

    def __sub__(self, other):
        self._check(other)
        return ModuleElement(
            tuple(a - b for a, b in zip(self.components, other.components)),
            self.shifts)

    def __neg__(self):
        return ModuleElement(tuple(-a for a in self.components), self.shifts)

    def scale(self, p):
        """Multiply by a polynomial (or scalar)."""
        return ModuleElement(tuple(p * c for c in self.components), self.shifts)

    def _check(self, other):
        if self.shifts != other.shifts or self.nvars != other.nvars:
            raise ValueError("module mismatch")

    def __eq__(self, other):
        return (isinstance(other, ModuleElement)
                and other.shifts == self.shifts
                and other.components == self.components)

    def __hash__(self):
        return hash((self.shifts, self.components))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    def __repr__(self):
        return f"ModuleElement{self}"


class Submodule:
    """Submodule of a graded free module, with a cached reduced module
    Groebner basis for the position-over-term refinement of the order."""

    def __init__(self, rank, shifts, gens, nvars=None, order=None):
        self.rank = rank
        self.shifts = tuple(shifts)
        if len(self.shifts) != rank:
            raise ValueError("rank/shift mismatch")
        out = []
        for g in gens:
            if g.rank != rank or g.shifts != self.shifts:
                raise ValueError("rank/shift mismatch")
            if not g.is_zero():
                out.append(g)
        self.gens = tuple(out)
        if nvars is None:
            if not out:
                raise ValueError("nvars required for an empty submodule")
            nvars = out[0].nvars
        self.nvars = nvars
        self.order = order or DegRevLex(nvars)

    @cached_property
    def groebner_basis(self):
        ints = [_element_to_int(g.components) for g in self.gens]
        gb = _buchberger_int(ints, self.order.key, use_product_criterion=False)
        out = []
        for d in gb:
            comps = [{} for _ in range(self.rank)]
            for (j, m), v in d.items():
                comps[j][m] = Fraction(v)
            lead = _lead(d, self.order.key)
            lc = Fraction(d[lead])
            polys = tuple(
                Polynomial(self.nvars, {m: c / lc for m, c in comp.items()})
                for comp in comps)
            out.append(ModuleElement(polys, self.shifts))
        return tuple(out)

    @cached_property
    def leading_terms(self):
        """Minimal leading (component, monomial) pairs of the module GB."""
        keyf = self.order.key
        out = []
        for g in self.groebner_basis:
            d = _element_to_int(g.components)
            out.append(_lead(d, keyf))
        return tuple(out)

    def component_leading_monomials(self):
        """Leading monomials bucketed per component (for Hilbert data)."""
        buckets = [[] for _ in range(self.rank)]
        for (j, m) in self.leading_terms:
            buckets[j].append(m)
        return buckets

    def normal_form(self, elem):
        """Exact remainder of elem against the module Groebner basis."""
        if elem.rank != self.rank or elem.shifts != self.shifts:
            raise ValueError("rank/shift mismatch")
        keyf = self.order.key
        reds = {}
        for g in self.groebner_basis:
            d = {(j, m): c
                 for j, comp in enumerate(g.components)
                 for m, c in comp.terms.items()}
            lead = max(d, key=lambda t: (-t[0], keyf(t[1])))
            reds.setdefault(lead[0], []).append((lead[1], d[lead], d))
        work = {(j, m): c
                for j, comp in enumerate(elem.components)
                for m, c in comp.terms.items()}
        done = set()
        while True:
            cur = None
            ck = None
            for t in work:
                if t in done:
                    continue
                k = (-t[0], keyf(t[1]))
                if ck is None or k > ck:
                    cur, ck = t, k
            if cur is None:
                break
            hit = None
            for red in reds.get(cur[0], ()):
                if mono_divides(red[0], cur[1]):
                    hit = red
                    break
            if hit is None:
                done.add(cur)
                continue
            lm, lc, terms = hit
            f = work[cur] / lc
            shift = mono_div(cur[1], lm)
            for (j2, m2), c2 in terms.items():
                t2 = (j2, mono_mul(m2, shift))
                nv = work.get(t2, 0) - f * c2
                if nv:
                    work[t2] = nv
                else:
                    work.pop(t2, None)
        comps = [{} for _ in range(self.rank)]
        for (j, m), c in work.items():
            comps[j][m] = c
        return ModuleElement(
            tuple(Polynomial(self.nvars, c) for c in comps), self.shifts)

    def contains(self, elem):
        return self.normal_form(elem).is_zero()
