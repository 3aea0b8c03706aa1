import random
from fractions import Fraction

import pytest

from fatpoints.poly import (DegRevLex, Polynomial, PolynomialSyntaxError,
                            monomials_of_degree, parse_polynomial)


def rand_poly(rng, nvars=3, max_deg=4, max_terms=6, homogeneous=False):
    terms = {}
    deg = rng.randint(0, max_deg)
    for _ in range(rng.randint(0, max_terms)):
        if homogeneous:
            m = rng.choice(monomials_of_degree(nvars, deg))
        else:
            m = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if c:
            terms[m] = terms.get(m, 0) + c
    return Polynomial(nvars, terms)


class TestParsing:
    def test_conic_from_table(self):
        p = parse_polynomial("X0*X2 - X2^2", 3)
        assert len(p.terms) == 2
        assert p.is_homogeneous() and p.degree() == 2

    def test_zero(self):
        assert parse_polynomial("0", 3).is_zero()

    def test_quartic_from_table(self):
        p = parse_polynomial("6X0^3*X1 - 11X0^2*X1^2 + 6X0*X1^3 - X1^4", 3)
        assert len(p.terms) == 4
        assert p.is_homogeneous() and p.degree() == 4
        assert p.terms[(3, 1, 0)] == 6

    def test_rational_coefficient(self):
        p = parse_polynomial("3/2*X1^2 - 1/3", 3)
        assert p.terms[(0, 2, 0)] == Fraction(3, 2)
        assert p.terms[(0, 0, 0)] == Fraction(-1, 3)

    def test_juxtaposed_variables(self):
        assert parse_polynomial("X0X2", 3) == parse_polynomial("X0*X2", 3)

    def test_repeated_terms_accumulate(self):
        p = parse_polynomial("X1 + X1", 3)
        assert p.terms == {(0, 1, 0): 2}

    def test_syntax_error_reports_position(self):
        with pytest.raises(PolynomialSyntaxError) as err:
            parse_polynomial("X0 + ?", 3)
        assert err.value.pos == 5

    def test_variable_out_of_range(self):
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("X3", 3)

    def test_dangling_sign(self):
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("X0 +", 3)

    def test_roundtrip_random(self):
        rng = random.Random(101)
        for _ in range(150):
            p = rand_poly(rng)
            assert parse_polynomial(str(p), 3) == p


class TestArithmetic:
    def test_add_cancellation(self):
        p = parse_polynomial("X0*X2 - X2^2", 3)
        assert p + parse_polynomial("X2^2", 3) == parse_polynomial("X0*X2", 3)

    def test_add_identity(self):
        p = parse_polynomial("X0*X2 - X2^2", 3)
        assert p + Polynomial.zero(3) == p

    def test_mul_basic(self):
        assert (Polynomial.variable(1, 3) * Polynomial.variable(2, 3)
                == parse_polynomial("X1*X2", 3))

    def test_difference_of_squares(self):
        a = parse_polynomial("X1 - X0", 3)
        b = parse_polynomial("X1 + X0", 3)
        assert a * b == parse_polynomial("X1^2 - X0^2", 3)

    def test_mul_absorbing(self):
        p = parse_polynomial("X0 + X1", 3)
        assert (p * Polynomial.zero(3)).is_zero()

    def test_ambient_mismatch(self):
        with pytest.raises(ValueError):
            Polynomial.variable(0, 2) + Polynomial.variable(0, 3)

    def test_ring_axioms_random(self):
        rng = random.Random(102)
        for _ in range(120):
            p, q, r = (rand_poly(rng) for _ in range(3))
            assert (p + q) + r == p + (q + r)
            assert p * q == q * p
            assert p * (q + r) == p * q + p * r
            assert (p * q) * r == p * (q * r)

    def test_power(self):
        p = parse_polynomial("X0 + X1", 3)
        assert p ** 3 == p * p * p
        assert p ** 0 == Polynomial.constant(1, 3)


class TestCalculus:
    def test_partial_of_conic(self):
        p = parse_polynomial("X0*X2 - X2^2", 3)
        assert p.diff(2) == parse_polynomial("X0 - 2X2", 3)

    def test_partial_vanishes(self):
        assert Polynomial.variable(1, 3).diff(2).is_zero()

    def test_euler_on_conic(self):
        p = parse_polynomial("X0*X2 - X2^2", 3)
        total = sum((Polynomial.variable(i, 3) * p.diff(i) for i in range(3)),
                    Polynomial.zero(3))
        assert total == 2 * p

    def test_euler_random(self):
        # exact Euler relation on >= 100 random homogeneous polynomials
        rng = random.Random(103)
        checked = 0
        while checked < 120:
            p = rand_poly(rng, homogeneous=True)
            if p.is_zero():
                continue
            d = p.degree()
            total = sum(
                (Polynomial.variable(i, 3) * p.diff(i) for i in range(3)),
                Polynomial.zero(3))
            assert total == d * p
            checked += 1

    def test_homogeneity_preserved(self):
        rng = random.Random(104)
        for _ in range(100):
            p = rand_poly(rng, homogeneous=True)
            q = rand_poly(rng, homogeneous=True)
            assert (p * q).is_homogeneous()
            if not p.is_zero():
                for i in range(3):
                    assert p.diff(i).is_homogeneous()
            if p.degree() == q.degree():
                assert (p + q).is_homogeneous()

    def test_evaluate_on_example_points(self):
        conic = parse_polynomial("X0*X2 - X2^2", 3)
        assert conic.evaluate([1, 0, 1]) == 0
        assert Polynomial.variable(1, 3).evaluate([1, 0, 0]) == 0
        assert Polynomial.variable(0, 3).evaluate([1, 2, 3]) == 1


class TestOrdering:
    def test_degrevlex_degree_two(self):
        order = DegRevLex(3)
        monos = sorted(monomials_of_degree(3, 2), key=order.key, reverse=True)
        assert monos == [(2, 0, 0), (1, 1, 0), (0, 2, 0),
                         (1, 0, 1), (0, 1, 1), (0, 0, 2)]

    def test_leading_monomial(self):
        p = parse_polynomial("X1^2 + X0*X2", 3)
        # degrevlex prefers X1^2 over X0*X2
        assert p.leading_monomial() == (0, 2, 0)
