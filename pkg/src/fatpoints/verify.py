"""Machine checks of the propositions and the main theorem on given or
random schemes, plus a registry reproducing the bundled numeric tables.

Every check returns a VerificationReport.  A report with status ``fails``
always carries a concrete witness (degree plus the two graded dimensions).
Checks of "for all large degrees" statements scan a window derived from
certified regularity data and say so via ``holds-from-degree``; purely
windowed containment scans are flagged heuristic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .groebner import Ideal, _nf_int, _poly_to_int
from .hilbert import ideal_hilbert_function
from .kaehler import (hp_bound_interval, jacobian_ideal, kaehler_hilbert_function,
                      kaehler_hp, kaehler_ri, ri_bound, scheme_jacobian_ideal)
from .poly import Polynomial, monomials_of_degree
from .scheme import (FatPointScheme, ProjectivePoint, fat_scheme_ideal,
                     scheme_hilbert_function, scheme_regularity)

DEFAULT_SEED = 20240
DEFAULT_WINDOW = None  # checker default: ambient n + 3


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    subject: str
    status: str                      # holds | fails | holds-from-degree(d)
    witness: tuple | None = None     # (degree, lhs, rhs)
    details: dict = field(default_factory=dict)
    heuristic: bool = False

    @property
    def ok(self):
        return self.status != "fails"

    def line(self):
        out = f"claim {self.claim_id} status {self.status}"
        if self.witness is not None:
            d, lhs, rhs = self.witness
            out += f" witness d={d} lhs={lhs} rhs={rhs}"
        if self.heuristic:
            out += " heuristic"
        return out

    def to_json(self):
        data = {
            "claim": self.claim_id,
            "subject": self.subject,
            "status": self.status,
            "heuristic": self.heuristic,
        }
        if self.witness is not None:
            d, lhs, rhs = self.witness
            data["witness"] = {"degree": d, "lhs": lhs, "rhs": rhs}
        if self.details:
            data["details"] = self.details
        return data


def holds_from(d):
    return f"holds-from-degree({d})"


# ---------------------------------------------------------------------------
# Theorem: HP of the top form module equals the slimming degree
# ---------------------------------------------------------------------------

def verify_main_theorem(scheme):
    """HP of the (n+1)-form module = deg of the slimming = the closed-form
    binomial sum; the presentation path and the shifted S/dI_W path both
    feed the left-hand side."""
    n = scheme.n
    hp = kaehler_hp(scheme, scheme.nvars)
    slim_deg = scheme.slimming().degree()
    closed = sum(comb(m + n - 2, n) for m in scheme.multiplicities)
    hf = kaehler_hilbert_function(scheme, scheme.nvars)
    if hp == slim_deg == closed:
        return VerificationReport(
            "thm-3.7", str(scheme), "holds",
            details={"hp": hp, "slimming_degree": slim_deg, "closed_form": closed})
    return VerificationReport(
        "thm-3.7", str(scheme), "fails",
        witness=(hf.regularity_index, hp, closed),
        details={"hp": hp, "slimming_degree": slim_deg, "closed_form": closed})


def verify_hp_bounds(scheme, k):
    """HP of the k-form module lies in the closed-form interval and its
    regularity index meets the min-max bound."""
    lo, hi = hp_bound_interval(scheme, k)
    hp = kaehler_hp(scheme, k)
    ri = kaehler_ri(scheme, k, check_bound=False)
    bound = ri_bound(scheme, k) if scheme.size else 0
    ok = lo <= hp <= hi and ri <= bound
    details = {"k": k, "hp": hp, "lower": lo, "upper": hi,
               "ri": ri, "ri_bound": bound}
    if ok:
        return VerificationReport(f"prop-3.1-k{k}", str(scheme), "holds",
                                  details=details)
    if not lo <= hp <= hi:
        witness = (ri, hp, (lo, hi))
    else:
        witness = (ri, ri, bound)
    return VerificationReport(f"prop-3.1-k{k}", str(scheme), "fails",
                              witness=witness, details=details)


# ---------------------------------------------------------------------------
# product vs intersection, colon identity
# ---------------------------------------------------------------------------

def verify_product_intersection(scheme):
    """Graded pieces of I_W and I_X * I_Y agree from some degree on.

    Certified: the product is contained in I_W (generator-wise normal
    forms) and both Hilbert functions are certified, so per-degree dim
    equality is piece equality and the eventual agreement follows from the
    equal Hilbert polynomials.
    """
    ideal_w = fat_scheme_ideal(scheme)
    prod = fat_scheme_ideal(scheme.support()).product(
        fat_scheme_ideal(scheme.slimming()))
    for g in prod.gens:
        if not ideal_w.contains(g):
            raise AssertionError("product ideal not contained in I_W")
    hf_w = ideal_hilbert_function(ideal_w)
    hf_p = ideal_hilbert_function(prod)
    subject = str(scheme)
    if hf_w.hilbert_polynomial != hf_p.hilbert_polynomial:
        d = max(hf_w.regularity_index, hf_p.regularity_index)
        return VerificationReport(
            "prop-2.6b", subject, "fails",
            witness=(d, hf_w.value(d), hf_p.value(d)))
    hi = max(hf_w.regularity_index, hf_p.regularity_index)
    last_bad = None
    for d in range(hi + 1):
        if hf_w.value(d) != hf_p.value(d):
            last_bad = d
    i0 = 0 if last_bad is None else last_bad + 1
    witness = None
    if last_bad is not None:
        witness = (last_bad, hf_w.value(last_bad), hf_p.value(last_bad))
    return VerificationReport("prop-2.6b", subject, holds_from(i0),
                              witness=witness,
                              details={"i0": i0})


def verify_colon_identity(scheme):
    """I_W : I_Y = I_X, as reduced Groebner basis equality."""
    ideal_w = fat_scheme_ideal(scheme)
    ideal_y = fat_scheme_ideal(scheme.slimming())
    ideal_x = fat_scheme_ideal(scheme.support())
    colon = ideal_w.colon(ideal_y)
    subject = str(scheme)
    if colon.equals(ideal_x):
        return VerificationReport("prop-2.6a", subject, "holds")
    hf_c = ideal_hilbert_function(colon)
    hf_x = ideal_hilbert_function(ideal_x)
    d = 0
    hi = max(hf_c.regularity_index, hf_x.regularity_index) + 1
    for d in range(hi + 1):
        if hf_c.value(d) != hf_x.value(d):
            break
    return VerificationReport("prop-2.6a", subject, "fails",
                              witness=(d, hf_c.value(d), hf_x.value(d)))


# ---------------------------------------------------------------------------
# graded inclusion scans (derivative lemma and its chain generalization)
# ---------------------------------------------------------------------------

def _graded_inclusion_scan(lhs, rhs, cap):
    """Per-degree flags of (lhs)_d <= (rhs)_d for d = 0..cap, by reducing a
    spanning set of each graded piece of lhs against the GB of rhs."""
    keyf = rhs.order.key
    reducers = {}
    for g in rhs.groebner_basis:
        d = _poly_to_int(g)
        lead = max(d, key=lambda t: keyf(t[1]))
        reducers.setdefault(0, []).append((lead[1], d[lead], d))
    flags = {}
    gb_lhs = [( _poly_to_int(g), g.degree()) for g in lhs.groebner_basis]
    for d in range(cap + 1):
        ok = True
        for gd, dg in gb_lhs:
            if dg > d:
                continue
            for m in monomials_of_degree(lhs.nvars, d - dg):
                shifted = {(0, tuple(a + b for a, b in zip(m, mono))): v
                           for (_, mono), v in gd.items()}
                if _nf_int(shifted, reducers, keyf):
                    ok = False
                    break
            if not ok:
                break
        flags[d] = ok
    return flags


def _inclusion_report(claim_id, subject, lhs, rhs, window, extra):
    hf_l = ideal_hilbert_function(lhs)
    hf_r = ideal_hilbert_function(rhs)
    ext = window if window is not None else (lhs.nvars - 1) + 3
    start = max(hf_l.regularity_index, hf_r.regularity_index,
                max((g.degree() for g in lhs.gens), default=0),
                max((g.degree() for g in rhs.gens), default=0))
    cap = start + ext
    flags = _graded_inclusion_scan(lhs, rhs, cap)
    failing = [d for d, ok in flags.items() if not ok]
    details = dict(extra)
    details.update({"scanned_upto": cap, "failing_degrees": failing,
                    "hf_lhs": hf_l.values_upto(cap),
                    "hf_rhs": hf_r.values_upto(cap)})
    if failing:
        d0 = failing[0]
        witness = (d0, hf_l.value(d0), hf_r.value(d0))
        if flags[cap] and all(flags[d] for d in range(failing[-1] + 1, cap + 1)):
            status = holds_from(failing[-1] + 1)
        else:
            status = "fails"
        return VerificationReport(claim_id, subject, status, witness=witness,
                                  details=details, heuristic=True)
    return VerificationReport(claim_id, subject, holds_from(0),
                              details=details, heuristic=True)


def verify_derivative_inclusion(x_scheme, y_scheme, k, l, window=DEFAULT_WINDOW):
    """(I_X^k * I_Y^l)_i <= (d(I_X^{k+1} * I_Y^l))_i across a scan window.

    X and Y are reduced point sets.  Y being a subset of X is recorded in
    the report, not enforced: the bundled counterexample configuration
    must run and report its containment failure.
    """
    for s in (x_scheme, y_scheme):
        if any(m != 1 for m in s.multiplicities):
            raise ValueError("derivative inclusion takes reduced point sets")
    subset = set(y_scheme.points) <= set(x_scheme.points)
    ix = fat_scheme_ideal(x_scheme)
    iy = fat_scheme_ideal(y_scheme)
    lhs = ix.power(k).product(iy.power(l))
    rhs = jacobian_ideal(ix.power(k + 1).product(iy.power(l)))
    return _inclusion_report(
        "lem-3.3", f"X={x_scheme}; Y={y_scheme}", lhs, rhs, window,
        {"k": k, "l": l, "subset": subset})


def verify_chain_inclusion(chain, exponents, window=DEFAULT_WINDOW):
    """Chain version: Y_1 > Y_2 > ... > Y_t descending point sets with
    positive exponents; the first factor's exponent is raised under the
    Jacobian."""
    if len(chain) != len(exponents) or len(chain) < 2:
        raise ValueError("need a chain of length >= 2 with exponents")
    for s in chain:
        if any(m != 1 for m in s.multiplicities):
            raise ValueError("chain members must be reduced point sets")
    for a, b in zip(chain, chain[1:]):
        if not set(b.points) < set(a.points):
            raise ValueError("chain must be strictly descending")
    if any(e < 1 for e in exponents):
        raise ValueError("exponents must be positive")
    ideals = [fat_scheme_ideal(s) for s in chain]
    lhs = ideals[0].power(exponents[0])
    rhs_base = ideals[0].power(exponents[0] + 1)
    for ideal, e in zip(ideals[1:], exponents[1:]):
        lhs = lhs.product(ideal.power(e))
        rhs_base = rhs_base.product(ideal.power(e))
    rhs = jacobian_ideal(rhs_base)
    subject = "; ".join(str(s) for s in chain)
    return _inclusion_report("prop-3.5", subject, lhs, rhs, window,
                             {"exponents": list(exponents)})


def jacobian_stability_threshold(scheme, window=DEFAULT_WINDOW):
    """Least scanned degree from which the graded pieces of dI_W and of
    d(I_X * I_Y) agree (two-way containment + equal dimensions)."""
    jac_w = scheme_jacobian_ideal(scheme)
    prod = fat_scheme_ideal(scheme.support()).product(
        fat_scheme_ideal(scheme.slimming()))
    jac_p = jacobian_ideal(prod)
    hf_w = ideal_hilbert_function(jac_w)
    hf_p = ideal_hilbert_function(jac_p)
    ext = window if window is not None else scheme.n + 3
    start = max(hf_w.regularity_index, hf_p.regularity_index,
                max((g.degree() for g in jac_w.gens), default=0),
                max((g.degree() for g in jac_p.gens), default=0))
    cap = start + ext
    fwd = _graded_inclusion_scan(jac_w, jac_p, cap)
    bwd = _graded_inclusion_scan(jac_p, jac_w, cap)
    agree = {d: fwd[d] and bwd[d] for d in range(cap + 1)}
    if not agree[cap]:
        return None, cap
    d0 = cap
    while d0 > 0 and agree[d0 - 1]:
        d0 -= 1
    return d0, cap


# ---------------------------------------------------------------------------
# the P^2 complex and closed forms
# ---------------------------------------------------------------------------

def complex_exactness_rows(scheme, cap):
    """The four graded dimension rows of the fattening complex in P^2."""
    hf_w = scheme_hilbert_function(scheme)
    hf_w1 = scheme_hilbert_function(scheme.fattening(1))
    hf_w2 = scheme_hilbert_function(scheme.fattening(2))
    hf_o2 = kaehler_hilbert_function(scheme, 2)
    rows = {"A": [], "B": [], "C": [], "D": []}
    for i in range(cap + 1):
        rows["A"].append(hf_w2.value(i) - hf_w1.value(i))
        rows["B"].append(3 * (hf_w1.value(i - 1) - hf_w.value(i - 1)))
        rows["C"].append(3 * hf_w.value(i - 2))
        rows["D"].append(hf_o2.value(i))
    return rows


def verify_complex_exactness(scheme, margin=4):
    """Alternating sum A - B + C - D of the four graded dimensions of the
    fattening complex; zero in degree i means the complex is exact there.
    Must hold for all i >= t = max{r_{W^(2)}, r_{W^(1)}+1, r_W+2}."""
    if scheme.n != 2:
        raise ValueError("the fattening complex check lives in P^2")
    t = max(scheme_regularity(scheme.fattening(2)),
            scheme_regularity(scheme.fattening(1)) + 1,
            scheme_regularity(scheme) + 2)
    hf_o2 = kaehler_hilbert_function(scheme, 2)
    cap = max(t, hf_o2.regularity_index) + margin
    rows = complex_exactness_rows(scheme, cap)
    sums = [rows["A"][i] - rows["B"][i] + rows["C"][i] - rows["D"][i]
            for i in range(cap + 1)]
    exact = [i for i, s in enumerate(sums) if s == 0]
    failing = [i for i, s in enumerate(sums) if s != 0]
    details = {"t": t, "scanned_upto": cap, "exact_degrees": exact,
               "non_exact_degrees": failing, "rows": rows}
    subject = str(scheme)
    bad_tail = [i for i in failing if i >= t]
    if bad_tail:
        d = bad_tail[0]
        lhs = rows["A"][d] + rows["C"][d]
        rhs = rows["B"][d] + rows["D"][d]
        return VerificationReport("prop-4.3", subject, "fails",
                                  witness=(d, lhs, rhs), details=details)
    return VerificationReport("prop-4.3", subject, holds_from(t),
                              details=details)


def p2_hp_closed_forms(scheme):
    """Prop 4.1 closed forms for HP of the 1-, 2-, 3-form modules in P^2."""
    ms = scheme.multiplicities
    return (sum((3 * m - 2) * (m + 1) for m in ms) // 2,
            sum((3 * m + 2) * (m - 1) for m in ms) // 2,
            sum(m * (m - 1) for m in ms) // 2)


def verify_p2_formulas(scheme):
    """Computed HP of the k-form modules against the closed forms, k=1,2,3."""
    if scheme.n != 2:
        raise ValueError("the closed forms live in P^2")
    expected = p2_hp_closed_forms(scheme)
    computed = tuple(kaehler_hp(scheme, k) for k in (1, 2, 3))
    details = {"computed": list(computed), "closed_forms": list(expected)}
    subject = str(scheme)
    for k in (1, 2, 3):
        if computed[k - 1] != expected[k - 1]:
            ri = kaehler_ri(scheme, k, check_bound=False)
            return VerificationReport("prop-4.1", subject, "fails",
                                      witness=(ri, computed[k - 1],
                                               expected[k - 1]),
                                      details=details)
    return VerificationReport("prop-4.1", subject, "holds", details=details)


def verify_three_point_ri(scheme):
    """The bundled non-collinear triple: ri = (3, 4, 4) and HP = (3, 0, 0)."""
    ris = tuple(kaehler_ri(scheme, k) for k in (1, 2, 3))
    hps = tuple(kaehler_hp(scheme, k) for k in (1, 2, 3))
    details = {"ri": list(ris), "hp": list(hps)}
    if ris == (3, 4, 4) and hps == (3, 0, 0):
        return VerificationReport("rem-4.2", str(scheme), "holds",
                                  details=details)
    return VerificationReport("rem-4.2", str(scheme), "fails",
                              witness=(ris[0], list(ris), [3, 4, 4]),
                              details=details)


# ---------------------------------------------------------------------------
# random schemes
# ---------------------------------------------------------------------------

def random_scheme(rng, n=2, max_points=4, max_mult=3, coord_range=3):
    """Seeded random fat point scheme with small integer coordinates."""
    s = rng.randint(1, max_points)
    points = []
    seen = set()
    while len(points) < s:
        coords = tuple(rng.randint(0, coord_range) for _ in range(n + 1))
        if not any(coords):
            continue
        p = ProjectivePoint(coords)
        if p in seen:
            continue
        seen.add(p)
        points.append(p)
    points.sort(key=lambda p: p.coords)
    mults = tuple(rng.randint(1, max_mult) for _ in points)
    return FatPointScheme(n, points, mults)


def theorem_sweep(count=50, seed=DEFAULT_SEED):
    """Seeded sweep of the main theorem over random schemes in P^2 and P^3."""
    rng = random.Random(seed)
    reports = []
    for _ in range(count):
        n = rng.choice((2, 3))
        scheme = random_scheme(rng, n=n)
        reports.append(verify_main_theorem(scheme))
    return reports


# ---------------------------------------------------------------------------
# bundled examples
# ---------------------------------------------------------------------------

_EIGHT_POINTS = ((1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1),
                 (1, 2, 0), (1, 2, 1), (1, 3, 0), (1, 3, 1))
_EX27_MULTS = (1, 2, 1, 2, 2, 1, 5, 1)

# literature-reported variants of the two middle rows of the ex-4.4 table
# (they miss the rank-3 factor; the recomputed rows are also emitted)
_EX44_ROW2_PRINTED = (0, 0, 0, 0, 0, 0, 0, 2, 9, 15, 18, 21, 22, 23, 23)
_EX44_ROW3_PRINTED = (0, 0, 1, 3, 6, 10, 15, 21, 26, 27, 28, 28)


def _format_values(values, stable_from):
    return " ".join(str(v) for v in values[:stable_from + 2]) + " ..."


@lru_cache(maxsize=None)
def example_scheme(name):
    if name in ("ex-2.7", "ex-4.4"):
        return FatPointScheme.from_coords(
            2, list(zip(_EIGHT_POINTS, _EX27_MULTS)))
    if name == "ex-2.8":
        pts = [p for p in _EIGHT_POINTS if p != (1, 1, 1)]
        return FatPointScheme.from_coords(2, [(p, 2) for p in pts])
    if name == "rem-4.2":
        return FatPointScheme.from_coords(
            2, [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1)])
    if name == "ex-3.4":
        raise ValueError("ex-3.4 is a pair of point sets; "
                         "use example_scheme_pair")
    raise KeyError(name)


@lru_cache(maxsize=None)
def example_scheme_pair(name):
    if name != "ex-3.4":
        raise KeyError(name)
    x = FatPointScheme.from_coords(
        2, [((1, 0, 0), 1), ((1, 0, 1), 1), ((1, 1, 0), 1), ((1, 1, 1), 1)])
    y = FatPointScheme.from_coords(
        2, [((1, 0, 0), 1), ((1, 0, 1), 1), ((1, 2, 0), 1), ((1, 2, 1), 1)])
    return x, y


def example_names():
    return ["ex-2.7", "ex-2.8", "ex-3.4", "ex-4.4", "rem-4.2"]


@dataclass(frozen=True)
class ExampleResult:
    name: str
    rows: tuple       # (label, formatted row)
    reports: tuple    # VerificationReports

    def text(self):
        lines = [f"{label}: {row}" for label, row in self.rows]
        lines += [r.line() for r in self.reports]
        return "\n".join(lines)

    def to_json(self):
        return {
            "example": self.name,
            "rows": [{"label": label, "row": row} for label, row in self.rows],
            "claims": [r.to_json() for r in self.reports],
        }


@lru_cache(maxsize=None)
def paper_example(name):
    """All Hilbert function rows of the named bundled example, in the
    golden print format, plus the verification reports that go with it."""
    if name == "ex-2.7":
        w = example_scheme(name)
        x, y = w.support(), w.slimming()
        prod = fat_scheme_ideal(x).product(fat_scheme_ideal(y))
        rows = (
            ("HF_X", ideal_hilbert_function(fat_scheme_ideal(x)).format_row()),
            ("HF_Y", ideal_hilbert_function(fat_scheme_ideal(y)).format_row()),
            ("HF_W", ideal_hilbert_function(fat_scheme_ideal(w)).format_row()),
            ("HF_S/(IX*IY)", ideal_hilbert_function(prod).format_row()),
        )
        reports = (verify_product_intersection(w),
                   verify_colon_identity(w),
                   verify_main_theorem(w))
        return ExampleResult(name, rows, reports)
    if name == "ex-2.8":
        w = example_scheme(name)
        square = fat_scheme_ideal(w.support()).power(2)
        rows = (
            ("HF_W'", ideal_hilbert_function(fat_scheme_ideal(w)).format_row()),
            ("HF_S/IX'^2", ideal_hilbert_function(square).format_row()),
        )
        reports = (verify_product_intersection(w),
                   verify_main_theorem(w))
        return ExampleResult(name, rows, reports)
    if name == "ex-3.4":
        x, y = example_scheme_pair(name)
        ix, iy = fat_scheme_ideal(x), fat_scheme_ideal(y)
        prod = ix.product(iy)
        jac = jacobian_ideal(ix.power(2).product(iy))
        rows = (
            ("HF_S/(IX*IY)", ideal_hilbert_function(prod).format_row()),
            ("HF_S/d(IX^2*IY)", ideal_hilbert_function(jac).format_row()),
        )
        reports = (verify_derivative_inclusion(x, y, 1, 1),)
        return ExampleResult(name, rows, reports)
    if name == "ex-4.4":
        w = example_scheme(name)
        report = verify_complex_exactness(w)
        rows_data = report.details["rows"]
        def stable_from(vals):
            last = vals[-1]
            d = len(vals) - 1
            while d > 0 and vals[d - 1] == last:
                d -= 1
            return d
        rows = (
            ("I(W1)/I(W2)",
             _format_values(rows_data["A"], stable_from(rows_data["A"]))),
            ("IW*Omega1/I(W1)*Omega1 (recomputed)",
             _format_values(rows_data["B"], stable_from(rows_data["B"]))),
            ("IW*Omega1/I(W1)*Omega1 (printed)",
             _format_values(list(_EX44_ROW2_PRINTED), 13)),
            ("Omega2_S/IW*Omega2_S (recomputed)",
             _format_values(rows_data["C"], stable_from(rows_data["C"]))),
            ("Omega2_S/IW*Omega2_S (printed)",
             _format_values(list(_EX44_ROW3_PRINTED), 10)),
            ("Omega2", kaehler_hilbert_function(w, 2).format_row()),
        )
        reports = (report, verify_p2_formulas(w))
        return ExampleResult(name, rows, reports)
    if name == "rem-4.2":
        w = example_scheme(name)
        rows = tuple(
            (f"Omega{k}", kaehler_hilbert_function(w, k).format_row())
            for k in (1, 2, 3))
        reports = (verify_three_point_ri(w),)
        return ExampleResult(name, rows, reports)
    raise KeyError(name)
