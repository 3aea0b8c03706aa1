import random
from fractions import Fraction
from math import comb

import pytest

from fatpoints.groebner import Ideal
from fatpoints.hilbert import ideal_hilbert_function
from fatpoints.scheme import (FatPointScheme, ProjectivePoint,
                              fat_scheme_ideal, format_scheme, parse_scheme,
                              point_vanishing_ideal, scheme_hilbert_function,
                              scheme_regularity, separators)
from fatpoints.verify import random_scheme

from test_groebner import P

M3 = Ideal(3, [P("X0"), P("X1"), P("X2")])


class TestProjectivePoint:
    def test_normalization(self):
        assert ProjectivePoint((2, 4, 0)).coords == (1, 2, 0)
        assert ProjectivePoint((0, 0, 5)).coords == (0, 0, 1)
        assert ProjectivePoint((Fraction(1, 2), 1, 0)).coords == (1, 2, 0)

    def test_equality_after_scaling(self):
        assert ProjectivePoint((2, 6, 4)) == ProjectivePoint((1, 3, 2))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            ProjectivePoint((0, 0, 0))

    def test_integer_coords_primitive(self):
        assert ProjectivePoint((Fraction(2, 3), 2, 0)).integer_coords() == (1, 3, 0)


class TestVanishingIdeals:
    def test_origin_chart_point(self):
        ideal = point_vanishing_ideal(ProjectivePoint((1, 0, 0)))
        assert ideal.equals(Ideal(3, [P("X1"), P("X2")]))

    def test_affine_point(self):
        ideal = point_vanishing_ideal(ProjectivePoint((1, 2, 0)))
        assert ideal.equals(Ideal(3, [P("X1 - 2X0"), P("X2")]))
        for g in ideal.gens:
            assert g.evaluate([1, 2, 0]) == 0

    def test_point_at_infinity(self):
        ideal = point_vanishing_ideal(ProjectivePoint((0, 0, 1)))
        assert ideal.equals(Ideal(3, [P("X0"), P("X1")]))

    def test_generators_separate_other_points(self):
        rng = random.Random(501)
        for _ in range(60):
            w = random_scheme(rng, n=2, max_points=3, max_mult=1)
            for p in w.points:
                ideal = point_vanishing_ideal(p)
                for q in w.points:
                    vals = [g.evaluate(q.coords) for g in ideal.gens]
                    if q == p:
                        assert all(v == 0 for v in vals)
                    else:
                        assert any(v != 0 for v in vals)


class TestFatSchemeIdeal:
    def test_double_point(self):
        w = FatPointScheme.from_coords(2, [((1, 0, 0), 2)])
        ideal = fat_scheme_ideal(w)
        assert ideal.equals(Ideal(3, [P("X1^2"), P("X1*X2"), P("X2^2")]))

    def test_example_rows(self, ex27, ex28):
        assert ideal_hilbert_function(fat_scheme_ideal(ex27)).format_row() \
            == "1 3 6 10 15 21 26 27 28 28 ..."
        assert ideal_hilbert_function(fat_scheme_ideal(ex28)).format_row() \
            == "1 3 6 10 14 18 20 21 21 ..."

    def test_empty_scheme_is_unit(self):
        w = FatPointScheme(2, (), ())
        assert fat_scheme_ideal(w).is_unit()
        assert w.degree() == 0

    def test_matches_elimination_intersection(self):
        # the conditions-matrix route equals iterated elimination
        # intersections of the point-ideal powers
        rng = random.Random(502)
        for _ in range(15):
            w = random_scheme(rng, n=2, max_points=3, max_mult=2)
            expected = None
            for p, m in zip(w.points, w.multiplicities):
                power = point_vanishing_ideal(p).power(m)
                expected = power if expected is None \
                    else expected.intersect(power)
            assert fat_scheme_ideal(w).equals(expected)

    def test_saturated_on_examples(self, ex27, ex28):
        for w in (ex27, ex28):
            ideal = fat_scheme_ideal(w)
            assert ideal.saturate(M3).equals(ideal)

    def test_saturated_random(self):
        # >= 100 seeded random schemes: the ideal equals its saturation
        rng = random.Random(503)
        for _ in range(100):
            w = random_scheme(rng, n=2, max_points=2, max_mult=2)
            ideal = fat_scheme_ideal(w)
            assert ideal.saturate(M3).equals(ideal)

    def test_degree_equals_stable_value_random(self):
        # >= 100 seeded random schemes incl. P^3
        rng = random.Random(504)
        for _ in range(110):
            n = rng.choice((2, 3))
            w = random_scheme(rng, n=n, max_points=3, max_mult=3)
            hf = scheme_hilbert_function(w)
            assert hf.stable_value == w.degree()
            vals = hf.values_upto(hf.regularity_index + 2)
            assert all(a <= b for a, b in zip(vals, vals[1:]))

    def test_conditions_hf_matches_groebner_hf(self):
        rng = random.Random(505)
        for _ in range(20):
            w = random_scheme(rng, n=2, max_points=3, max_mult=3)
            assert scheme_hilbert_function(w) == \
                ideal_hilbert_function(fat_scheme_ideal(w))


class TestSchemeCombinatorics:
    def test_degree_examples(self, ex27):
        assert ex27.degree() == 28
        assert FatPointScheme.from_coords(2, [((1, 0, 0), 1)]).degree() == 1
        assert FatPointScheme.from_coords(2, [((1, 0, 0), 2)]).degree() == 3

    def test_slimming_of_example(self, ex27):
        y = ex27.slimming()
        assert y.degree() == 13
        assert [str(p) for p in y.points] == \
            ["(1:0:1)", "(1:1:1)", "(1:2:0)", "(1:3:0)"]
        assert y.multiplicities == (1, 1, 1, 4)

    def test_slimming_of_reduced_is_empty(self):
        x = FatPointScheme.from_coords(2, [((1, 0, 0), 1), ((0, 1, 0), 1)])
        y = x.slimming()
        assert y.size == 0 and y.degree() == 0
        assert fat_scheme_ideal(y).is_unit()

    def test_fattening(self):
        x = FatPointScheme.from_coords(
            2, [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1)])
        w = x.fattening(1)
        assert w.multiplicities == (2, 2, 2)
        assert w.degree() == 9

    def test_distinct_points_enforced(self):
        with pytest.raises(ValueError):
            FatPointScheme.from_coords(2, [((1, 0, 0), 1), ((2, 0, 0), 1)])

    def test_positive_multiplicities_enforced(self):
        with pytest.raises(ValueError):
            FatPointScheme.from_coords(2, [((1, 0, 0), 0)])


class TestSeparators:
    def test_two_point_linear_separator(self):
        x = FatPointScheme.from_coords(2, [((1, 0, 0), 1), ((1, 1, 1), 1)])
        seps = separators(x, 2)
        assert len(seps) == 1
        f = seps[0]
        assert f.degree() == 1
        # vanishes on the reduced scheme, not on the removed point
        assert f.evaluate([1, 0, 0]) == 0
        assert f.evaluate([1, 1, 1]) != 0

    def test_count_formula_large_multiplicity(self, ex27):
        # nu_j = C(m_j + n - 2, n - 1); the multiplicity-5 point gives 5
        j = 1 + list(ex27.multiplicities).index(5)
        assert len(separators(ex27, j)) == 5
        assert comb(5 + 2 - 2, 2 - 1) == 5

    def test_single_point_edge_case(self):
        w = FatPointScheme.from_coords(2, [((1, 0, 0), 1)])
        seps = separators(w, 1)
        assert len(seps) == 1
        # the reduced scheme is empty: I_W + <F> must be the unit ideal,
        # and I_W : <F> = I_P
        iw = fat_scheme_ideal(w)
        aug = iw.sum_with(Ideal(3, seps))
        assert aug.is_unit()
        assert iw.colon(Ideal(3, seps)).equals(iw)

    def test_contracts_random(self):
        # >= 100 seeded cases of the separator contracts:
        # F_k in I_{W_j} \ I_W; (I_W + <F_1..F_{k-1}>) : <F_k> = I_{P_j};
        # every augmented ideal is saturated; degrees nondecreasing
        rng = random.Random(506)
        cases = 0
        while cases < 100:
            w = random_scheme(rng, n=2, max_points=2, max_mult=2)
            j = rng.randint(1, w.size)
            seps = separators(w, j)
            assert len(seps) == w.degree() - w.reduce_at(j).degree()
            assert [f.degree() for f in seps] == \
                sorted(f.degree() for f in seps)
            iw = fat_scheme_ideal(w)
            iwj = fat_scheme_ideal(w.reduce_at(j))
            prime = point_vanishing_ideal(w.points[j - 1])
            current = iw
            for f in seps:
                assert iwj.contains(f)
                assert not current.contains(f)
                assert current.colon(Ideal(3, [f])).equals(prime)
                current = current.sum_with(Ideal(3, [f]))
                assert current.saturate(M3).equals(current)
                cases += 1
            assert current.equals(iwj)

    def test_colon_law_mixed_multiplicities(self):
        # I_W : I_Y = I_X on random schemes with mixed multiplicities
        rng = random.Random(507)
        for _ in range(25):
            w = random_scheme(rng, n=2, max_points=3, max_mult=3)
            iw = fat_scheme_ideal(w)
            iy = fat_scheme_ideal(w.slimming())
            ix = fat_scheme_ideal(w.support())
            assert iw.colon(iy).equals(ix)

    def test_colon_law_all_multiplicities_at_least_two(self):
        rng = random.Random(508)
        for _ in range(12):
            base = random_scheme(rng, n=2, max_points=3, max_mult=2)
            w = base.fattening(1)
            assert min(w.multiplicities) >= 2
            iw = fat_scheme_ideal(w)
            iy = fat_scheme_ideal(w.slimming())
            ix = fat_scheme_ideal(w.support())
            assert iw.colon(iy).equals(ix)

    def test_saturating_the_square_recovers_the_double_scheme(self, ex28):
        # I_{X'}^2 is not saturated; its saturation is the vanishing ideal
        # of the double scheme, detected by the degree-7 drop 22 -> 21
        square = fat_scheme_ideal(ex28.support()).power(2)
        saturated = square.saturate(M3)
        assert saturated.equals(fat_scheme_ideal(ex28))
        assert ideal_hilbert_function(square).value(7) == 22
        assert ideal_hilbert_function(saturated).value(7) == 21


class TestSchemeFiles:
    def test_roundtrip(self, ex27):
        assert parse_scheme(format_scheme(ex27)) == ex27

    def test_roundtrip_bit_exact(self, ex27):
        text = format_scheme(ex27)
        assert format_scheme(parse_scheme(text)) == text

    def test_rational_coordinates(self):
        w = FatPointScheme.from_coords(2, [((1, Fraction(2, 3), 0), 2)])
        assert parse_scheme(format_scheme(w)) == w
        assert "2/3" in format_scheme(w)

    def test_comments_and_blank_lines(self):
        text = "# heading\nn 2\n\npoint 1 0 0 mult 2  # the double point\n"
        w = parse_scheme(text)
        assert w.size == 1 and w.multiplicities == (2,)

    def test_missing_ambient(self):
        with pytest.raises(ValueError):
            parse_scheme("point 1 0 0 mult 1\n")

    def test_malformed_point_line(self):
        with pytest.raises(ValueError):
            parse_scheme("n 2\npoint 1 0 mult 1\n")

    def test_empty_scheme_file(self):
        w = parse_scheme("n 2\n")
        assert w.size == 0
