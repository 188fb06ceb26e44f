import json
import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import laurent_polys, sympy_x_coeff, t, to_sympy, from_sympy, x
from u21poincare.errors import NonZeroRemainder, TruncationExceeded
from u21poincare.poly import ONE, T, ZERO, LaurentPoly, SeriesX


def P(*coeffs, lo=0):
    return LaurentPoly(lo, coeffs)


def dict_product(a: LaurentPoly, b: LaurentPoly) -> dict[int, int]:
    out = {}
    for ea, ca in a.terms():
        for eb, cb in b.terms():
            out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


class TestCanonicalForm:
    def test_zero_is_unique(self):
        assert LaurentPoly(5, [0, 0, 0]) == ZERO
        assert ZERO.min_exp == 0 and ZERO.coeffs == ()

    def test_trims_both_ends(self):
        p = LaurentPoly(-3, [0, 0, 2, 0, 5, 0])
        assert p.min_exp == -1
        assert p.coeffs == (2, 0, 5)

    @given(laurent_polys(), laurent_polys())
    def test_closure(self, a, b):
        for r in (a + b, a - b, a * b, -a):
            assert r == LaurentPoly(r.min_exp, r.coeffs)
            if r.coeffs:
                assert r.coeffs[0] != 0 and r.coeffs[-1] != 0
            else:
                assert r.min_exp == 0


class TestRingOps:
    def test_difference_of_squares(self):
        assert P(1, 1) * P(1, -1) == P(1, 0, -1)

    @given(laurent_polys())
    def test_zero_absorbs(self, p):
        assert p * ZERO == ZERO
        assert ZERO * p == ZERO

    def test_exponent_shift(self):
        assert P(1, 0, 1, lo=-2) * T**2 == P(1, 0, 1)

    def test_int_coercion(self):
        assert 1 - T**2 == P(1, 0, -1)
        assert 3 * T == P(0, 3)

    def test_negative_power_of_monomial(self):
        assert T**-2 == LaurentPoly.monomial(-2)
        assert (-T) ** -3 == LaurentPoly.monomial(-3, -1)
        with pytest.raises(ValueError):
            P(1, 1) ** -1

    @given(laurent_polys(), laurent_polys())
    def test_product_matches_dict_oracle(self, a, b):
        assert (a * b).to_dict() == dict_product(a, b)

    @given(laurent_polys(), laurent_polys(), laurent_polys())
    @settings(max_examples=50)
    def test_ring_axioms(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) - b == a
        assert a + (-a) == ZERO

    def test_big_coefficients_do_not_overflow(self):
        p = LaurentPoly.binomial_power(200)
        assert p.coeff(100) == math.comb(200, 100)
        assert (p * p) == LaurentPoly.binomial_power(400)


class TestEval:
    def test_difference_of_squares(self):
        assert P(1, 0, -1).eval_int(-1) == 0

    def test_symmetric_product_value(self):
        assert P(1, 4, 7, 4, 1).eval_int(-1) == 1

    def test_negative_exponents(self):
        assert P(1, 1, lo=-3).eval_int(-1) == -1 + 1
        assert P(2, lo=-3).eval_int(-1) == -2
        with pytest.raises(ValueError):
            P(1, lo=-1).eval_int(0)

    def test_other_points_for_polynomials(self):
        assert P(1, 2, 3).eval_int(2) == 1 + 4 + 12
        assert P(1, 2, 3).eval_int(0) == 1

    @given(laurent_polys(), laurent_polys())
    def test_multiplicative(self, a, b):
        for t0 in (-1, 1):
            assert (a * b).eval_int(t0) == a.eval_int(t0) * b.eval_int(t0)

    @given(laurent_polys())
    def test_matches_sympy(self, p):
        assert p.eval_int(-1) == to_sympy(p).subs(t, -1)


class TestExactDiv:
    def test_examples(self):
        assert P(1, 0, -1).exact_div(P(1, 1)) == P(1, -1)
        assert P(1, 0, 0, -1).exact_div(P(1, -1)) == P(1, 1, 1)
        with pytest.raises(NonZeroRemainder):
            P(1, 1).exact_div(P(1, -1))

    def test_non_unit_leading_coefficient(self):
        assert P(2, 4, 2).exact_div(P(2, 2)) == P(1, 1)
        with pytest.raises(NonZeroRemainder):
            P(1, 1).exact_div(P(2, 2))

    def test_zero(self):
        assert ZERO.exact_div(P(1, 1)) == ZERO
        with pytest.raises(ZeroDivisionError):
            ONE.exact_div(ZERO)

    @given(laurent_polys(), laurent_polys())
    def test_inverts_multiplication(self, p, q):
        if q.is_zero():
            return
        assert (p * q).exact_div(q) == p

    @given(laurent_polys(max_len=5), laurent_polys(max_len=4))
    def test_remainder_detected(self, p, q):
        # agrees with sympy on whether q divides p; powers of t are units
        if q.is_zero() or p.is_zero():
            return
        num = sympy.expand(to_sympy(p) * t**-p.min_exp)
        den = sympy.expand(to_sympy(q) * t**-q.min_exp)
        quotient, rem = sympy.div(num, den, t)
        divisible = rem == 0 and all(c.is_integer for c in sympy.Poly(quotient, t).coeffs())
        if divisible:
            assert p.exact_div(q) * q == p
        else:
            with pytest.raises(NonZeroRemainder):
                p.exact_div(q)


class TestJson:
    def test_format(self):
        p = P(-5, 10**40, lo=-2)
        assert json.loads(p.to_json()) == {"min_exp": -2, "coeffs": ["-5", str(10**40)]}

    @given(laurent_polys())
    def test_round_trip(self, p):
        q = LaurentPoly.from_json(p.to_json())
        assert q == p
        assert q.to_json() == p.to_json()

    def test_rejects_non_canonical(self):
        with pytest.raises(ValueError):
            LaurentPoly.from_json_obj({"min_exp": 0, "coeffs": ["0", "1"]})


class TestRender:
    def test_text(self):
        assert str(P(1, -2, 0, 1)) == "1 - 2t + t^3"
        assert str(P(-1, lo=-2)) == "-t^-2"
        assert str(ZERO) == "0"

    def test_latex(self):
        assert P(1, 8, 29).render("latex") == "1 + 8\\,t + 29\\,t^{2}"


class TestSeries:
    def test_geometric_examples(self):
        assert SeriesX.geometric(ONE, 2).coeffs == (ONE, ONE, ONE)
        assert SeriesX.geometric(T**4, 2).coeffs == (ONE, T**4, T**8)
        assert SeriesX.geometric(T**-2, 2).coeffs == (ONE, T**-2, T**-4)

    def test_binom_power_examples(self):
        assert SeriesX.binom_power(T, 4, 2).coeffs == (ONE, 4 * T, 6 * T**2)
        assert SeriesX.binom_power(T, 0, 3).coeffs == (ONE, ZERO, ZERO, ZERO)
        assert SeriesX.binom_power(T, 2, 5).coeffs == (ONE, 2 * T, T**2, ZERO, ZERO, ZERO)

    def test_coeff_examples(self):
        assert SeriesX.geometric(ONE, 5).coeff(5) == ONE
        assert SeriesX.geometric(T**2, 3).coeff(3) == T**6
        s = SeriesX.binom_power(T, 4, 2) * SeriesX.geometric(ONE, 2) * SeriesX.geometric(T**2, 2)
        assert s.coeff(2) == P(1, 4, 7, 4, 1)

    def test_truncation(self):
        s = SeriesX.geometric(ONE, 3)
        with pytest.raises(TruncationExceeded):
            s.coeff(4)
        assert (s * SeriesX.geometric(T, 7)).trunc == 3
        assert len(SeriesX(4, [ONE]).coeffs) == 5

    def test_rational_factor_expansion_matches_sympy(self):
        # the two rational factors of the length-2 formula, expanded about x = 0
        a = SeriesX.geometric(T**4, 4) * -1
        b = SeriesX.geometric(T**-2, 4) * -(T**-2)
        for k in range(5):
            assert a.coeff(k) == from_sympy(sympy_x_coeff(1 / (x * t**4 - 1), k))
            assert b.coeff(k) == from_sympy(sympy_x_coeff(1 / (x - t**2), k))

    @given(st.lists(laurent_polys(max_len=3), min_size=4, max_size=4),
           st.lists(laurent_polys(max_len=3), min_size=4, max_size=4))
    @settings(max_examples=40)
    def test_linear_and_cauchy(self, ca, cb):
        a, b = SeriesX(3, ca), SeriesX(3, cb)
        ab = a * b
        for i in range(4):
            assert (a + b).coeff(i) == a.coeff(i) + b.coeff(i)
            expected = ZERO
            for j in range(i + 1):
                expected = expected + a.coeff(j) * b.coeff(i - j)
            assert ab.coeff(i) == expected
