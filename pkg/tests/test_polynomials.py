import random

import pytest

from rslist.polynomials import (
    NEG_INF,
    BiPoly,
    DuplicateAbscissa,
    InexactDivision,
    MonomialOrder,
    UniPoly,
    ZeroPolynomial,
    lagrange_interpolate,
    reconstruct,
)

import properties
from conftest import parse_poly_text, random_bipoly, random_unipoly
from golden_tables import Q_DIRECT, Q_SHIFTED, H_REDUCED

FIELD_FIXTURES = ["gf8", "gf16"]


@pytest.fixture
def q31(gf8):
    return parse_poly_text(gf8, Q_DIRECT)


@pytest.fixture
def h63(gf8):
    return parse_poly_text(gf8, H_REDUCED)


class TestUniPoly:
    def test_canonical_and_degree(self, gf8):
        p = UniPoly(gf8, [1, 2, 0, 0])
        assert p.degree == 1
        z = UniPoly(gf8, [0, 0])
        assert z.is_zero and z.degree == NEG_INF
        assert UniPoly(gf8, [5]).degree == 0  # distinct from the zero polynomial

    def test_add_cancellation(self, gf8):
        p = UniPoly(gf8, [1, 2, 3])
        q = UniPoly(gf8, [0, 0, 3])
        assert (p + q).degree == 1

    def test_mul_and_eval(self, gf8):
        a = gf8.from_exponent
        p = UniPoly.x_plus(gf8, a(1)).mul(UniPoly.x_plus(gf8, a(2)))
        # (X - a)(X - a^2) = X^2 + a^4 X + a^3
        assert p.to_json() == [a(3), a(4), 1]
        assert p.eval_at(a(1)) == 0 and p.eval_at(a(2)) == 0
        assert p.eval_at(a(3)) == gf8.mul(a(3) ^ a(1), a(3) ^ a(2))

    def test_exact_div(self, gf8):
        a = gf8.from_exponent
        num = UniPoly(gf8, [a(4), 0, 1])  # X^2 + a^4 = (X + a^2)^2
        assert num.exact_div(UniPoly.x_plus(gf8, a(2))) == UniPoly.x_plus(gf8, a(2))
        p = UniPoly(gf8, [3, 1, 5])
        assert p.exact_div(UniPoly.one(gf8)) == p
        with pytest.raises(InexactDivision):
            UniPoly(gf8, [0, 1]).exact_div(UniPoly(gf8, [1, 1]))

    def test_formal_derivative(self, gf8):
        a = gf8.from_exponent
        g = UniPoly.x_plus(gf8, a(1)).mul(UniPoly.x_plus(gf8, a(2)))
        assert g.formal_derivative().eval_at(a(2)) == a(4)
        assert UniPoly.constant(gf8, a(5)).formal_derivative().is_zero
        sigma = UniPoly(gf8, [1, a(5)])
        assert sigma.formal_derivative() == UniPoly.constant(gf8, a(5))

    def test_taylor_shift_univariate(self, gf8):
        rng = random.Random(3)
        for _ in range(50):
            p = random_unipoly(gf8, rng, 6)
            x = rng.randrange(8)
            shifted = p.taylor_shift(x)
            for probe in gf8.all_elements():
                assert shifted.eval_at(probe) == p.eval_at(probe ^ x)


class TestLagrange:
    def test_reencoding_polynomial(self, gf8):
        a = gf8.from_exponent
        e = lagrange_interpolate(gf8, [(a(1), a(4)), (a(2), a(6))])
        assert e.to_json() == [a(5), a(6)]

    def test_single_point(self, gf8):
        assert lagrange_interpolate(gf8, [(3, 5)]) == UniPoly.constant(gf8, 5)

    def test_two_point_message(self, gf8):
        a = gf8.from_exponent
        p = lagrange_interpolate(gf8, [(a(2), a(3)), (a(1), a(4))])
        assert p.to_json() == [a(6), a(2)]

    def test_duplicate_abscissa(self, gf8):
        with pytest.raises(DuplicateAbscissa):
            lagrange_interpolate(gf8, [(1, 2), (1, 3)])


class TestWeightedDegree:
    def test_q31_total_degree(self, q31):
        assert q31.wdeg(1, 1) == 3

    def test_zero(self, gf8):
        assert BiPoly.zero(gf8).wdeg(1, 1) == NEG_INF
        assert BiPoly.zero(gf8).wdeg(1, -1) == NEG_INF

    def test_h63_reduced_weight(self, h63):
        assert h63.wdeg(1, -1) == 0

    def test_negative_weights_allowed(self, gf8):
        p = BiPoly.y_power(gf8, 2)
        assert p.wdeg(1, -1) == -2


class TestLeadingMonomial:
    def test_q31_under_total_order(self, q31):
        assert q31.leading_monomial(MonomialOrder.weighted(2)) == (1, 2, 1)

    def test_constant(self, gf8):
        assert BiPoly.from_arrays(gf8, [[1]]).leading_monomial(MonomialOrder(1, 1)) == (0, 0, 1)

    def test_reduced_order_table_row(self, gf8):
        from rslist.polynomials import ORDER_REDUCED

        g3 = parse_poly_text(
            gf8,
            "(a^5 + a^4*X + a*X^2 + X^3)*Y^3 + (a^5 + a^3*X)*Y^2 + (1 + X)*Y",
        )
        assert g3.leading_monomial(ORDER_REDUCED) == (3, 3, 1)

    def test_zero_raises(self, gf8):
        with pytest.raises(ZeroPolynomial):
            BiPoly.zero(gf8).leading_monomial(MonomialOrder(1, 1))


class TestTaylorShift:
    def test_xy_expansion(self, gf8):
        a = gf8.from_exponent
        p = BiPoly.from_arrays(gf8, [[0], [0, 1]])  # X*Y
        x, y = a(2), a(5)
        s = p.taylor_shift(x, y)
        # (X + x)(Y + y) = XY + yX + xY + xy
        assert s.coef(1, 1) == 1
        assert s.coef(1, 0) == y
        assert s.coef(0, 1) == x
        assert s.coef(0, 0) == gf8.mul(x, y)

    def test_identity_shift(self, q31):
        assert q31.taylor_shift(0, 0) == q31

    def test_q31_double_point(self, gf8, q31):
        a = gf8.from_exponent
        s = q31.taylor_shift(a(1), a(4))
        assert s.coef(0, 0) == 0 and s.coef(1, 0) == 0 and s.coef(0, 1) == 0

    def test_shifted_coef_matches_full_shift(self, gf8):
        rng = random.Random(11)
        for _ in range(60):
            p = random_bipoly(gf8, rng, 5, 3)
            x, y = rng.randrange(8), rng.randrange(8)
            full = p.taylor_shift(x, y)
            for a in range(4):
                for b in range(4):
                    assert p.shifted_coef(x, y, a, b) == full.coef(a, b)


class TestMultiplicity:
    def test_q31_points(self, gf8, q31):
        a = gf8.from_exponent
        assert q31.multiplicity_at(a(1), a(4)) == 2
        assert q31.multiplicity_at(1, 1) == 1

    def test_line_through_point(self, gf8):
        rng = random.Random(4)
        fpoly = random_unipoly(gf8, rng, 3)
        xi = 3
        line = BiPoly(gf8, [fpoly, UniPoly.one(gf8)])  # Y - f(X)
        assert line.multiplicity_at(xi, fpoly.eval_at(xi)) == 1

    def test_zero_raises(self, gf8):
        with pytest.raises(ZeroPolynomial):
            BiPoly.zero(gf8).multiplicity_at(0, 0)


class TestSubstitutions:
    def test_q31_shift_gives_q33(self, gf8, q31):
        a = gf8.from_exponent
        e = UniPoly(gf8, [a(5), a(6)])
        assert q31.sub_y_shift(e) == parse_poly_text(gf8, Q_SHIFTED)

    def test_zero_shift_identity(self, q31):
        assert q31.sub_y_shift(UniPoly.zero(q31.field)) == q31

    def test_y_plus_e(self, gf8):
        e = UniPoly(gf8, [3, 5])
        y = BiPoly.y_power(gf8, 1)
        assert y.sub_y_shift(e) == BiPoly(gf8, [e, UniPoly.one(gf8)])

    def test_scale_substitution(self, gf8):
        rng = random.Random(5)
        p = random_bipoly(gf8, rng, 3, 2)
        g = UniPoly(gf8, [3, 1])
        b = p.sub_y_scale(g)
        for x in gf8.all_elements():
            for y in gf8.all_elements():
                lhs = b.y_eval(UniPoly.constant(gf8, y)).eval_at(x)
                yg = gf8.mul(y, g.eval_at(x))
                rhs = p.y_eval(UniPoly.constant(gf8, yg)).eval_at(x)
                assert lhs == rhs


class TestReconstruct:
    def test_worked_reconstruction(self, gf8, h63, q31):
        a = gf8.from_exponent
        g = UniPoly.x_plus(gf8, a(1)).mul(UniPoly.x_plus(gf8, a(2)))
        psi = UniPoly.x_plus(gf8, a(1)).mul(UniPoly.x_plus(gf8, a(1))).mul(UniPoly.x_plus(gf8, a(2)))
        e = UniPoly(gf8, [a(5), a(6)])
        assert reconstruct(h63, psi, g, e) == q31
        assert reconstruct(h63, psi, g, UniPoly.zero(gf8)) == parse_poly_text(gf8, Q_SHIFTED)

    def test_zero(self, gf8):
        z = BiPoly.zero(gf8)
        one = UniPoly.one(gf8)
        assert reconstruct(z, one, one, one).is_zero

    def test_inexact_structure_rejected(self, gf8):
        a = gf8.from_exponent
        g = UniPoly.x_plus(gf8, a(1)).mul(UniPoly.x_plus(gf8, a(2)))
        psi = g
        # Y coefficient not divisible by g: psi*1/g^1 is not a polynomial
        h = BiPoly(gf8, [UniPoly.zero(gf8), UniPoly.constant(gf8, a(3))])
        bad = BiPoly(gf8, [UniPoly.zero(gf8), UniPoly.x_plus(gf8, a(4))])
        assert not reconstruct(h, psi, g, UniPoly.zero(gf8)).is_zero
        with pytest.raises(InexactDivision):
            reconstruct(bad, UniPoly.one(gf8), g, UniPoly.zero(gf8))


class TestTextForms:
    def test_roundtrip_golden(self, gf8, q31, h63):
        assert q31.to_text() == Q_DIRECT
        assert h63.to_text() == H_REDUCED
        assert parse_poly_text(gf8, q31.to_text()) == q31

    def test_json_roundtrip(self, gf8):
        rng = random.Random(9)
        p = random_bipoly(gf8, rng, 4, 3)
        assert BiPoly.from_json(gf8, p.to_json()) == p

    def test_zero_text(self, gf8):
        assert BiPoly.zero(gf8).to_text() == "0"
        assert UniPoly.zero(gf8).to_text() == "0"


class TestProperties:
    CASES = 80

    def fields(self, gf8, gf16):
        return [gf8, gf16]

    def test_shift_involution(self, gf8, gf16):
        properties.check_shift_involution(random.Random(101), [gf8, gf16], self.CASES)

    def test_scale_substitution_multiplicity(self, gf8, gf16):
        properties.check_scale_substitution_multiplicity(random.Random(102), [gf8, gf16], self.CASES)

    def test_shift_substitution_multiplicity(self, gf8, gf16):
        properties.check_shift_substitution_multiplicity(random.Random(103), [gf8, gf16], self.CASES)

    def test_zero_y_divisibility(self, gf8, gf16):
        properties.check_zero_y_multiplicity_divisibility(random.Random(104), [gf8, gf16], self.CASES)

    def test_multiplicity_valuation(self, gf8, gf16):
        properties.check_multiplicity_valuation(random.Random(105), [gf8, gf16], self.CASES)

    def test_wdeg_preserved_by_shift(self, gf8, gf16):
        properties.check_wdeg_preserved_by_shift(random.Random(106), [gf8, gf16], self.CASES)
