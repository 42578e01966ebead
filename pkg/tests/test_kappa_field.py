from fractions import Fraction

import pytest
from hypothesis import assume, given

from conftest import fractions, kfields, nonzero_kfields
from errors import DivisionByZero, MalformedInput, NonGenericWarning, PoleAtPoint, ZeroDenominator
from kappa_field import (KAPPA, KField, ONE, RatPoly, ZERO, is_generic, kf_arith, kf_eval, kf_normalize, kf_rising,
                         to_qq)


class TestCanonicalForm:
    def test_common_factor_cancels(self):
        assert KField((0, 0, 2), (0, 4)) == KField((0, Fraction(1, 2)))
        assert KField((0, 0, 2), (0, 4)).is_polynomial()

    def test_nonconstant_common_factor_cancels(self):
        # (1 - 2k)(1 + k) / ((1 - 2k)(3 + k))
        f = KField((1, -1, -2), (3, -5, -2))
        assert f == KField((1, 1), (3, 1))
        assert f.den.coeffs == (3, 1)

    def test_product_cancels_against_denominator(self):
        factor = KField.linear(1, -2)
        assert (ONE / factor) * factor == ONE
        assert factor * (KField((1,), (1, 1)) / factor) == KField((1,), (1, 1))
        assert kf_normalize(RatPoly((0, 0, 2)), RatPoly((0, 4))) == KField((0, 1), (2,))

    def test_denominator_is_primitive_with_positive_leading_coefficient(self):
        f = KField((2,), (-4, 6))
        assert f.den.coeffs == (-2, 3)
        assert f.num.coeffs == (1,)

    def test_zero_has_unit_denominator(self):
        assert KField((0, 0), (1, 5)) == ZERO
        assert ZERO.den.coeffs == (1,)

    def test_zero_denominator_is_rejected(self):
        with pytest.raises(ZeroDenominator):
            KField((1,), (0,))

    def test_strings_and_fractions_are_accepted(self):
        assert KField(('1/2', 3)) == KField((Fraction(1, 2), 3))
        with pytest.raises(MalformedInput):
            to_qq('one half')

    @given(kfields(), nonzero_kfields())
    def test_equal_values_have_equal_representations(self, f, g):
        assert (f * g) / g == f
        assert hash((f * g) / g) == hash(f)


class TestArithmetic:
    @given(kfields(), kfields(), kfields())
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(kfields(), kfields())
    def test_subtraction_undoes_addition(self, a, b):
        assert (a + b) - b == a

    @given(nonzero_kfields())
    def test_inverse(self, a):
        assert a * a.inverse() == ONE

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            KAPPA / ZERO

    @given(kfields(), fractions())
    def test_mixed_with_rationals(self, a, r):
        assert a + r == a + KField.const(r)
        assert r * a == a * KField.const(r)

    def test_power(self):
        assert KField.linear(1, 1) ** 2 == KField((1, 2, 1))
        assert KAPPA ** -1 == KField((1,), (0, 1))

    def test_rising_factorial(self):
        assert kf_rising(KAPPA, 3) == KAPPA * (KAPPA + 1) * (KAPPA + 2)
        assert kf_rising(KAPPA, 0) == ONE

    @given(kfields())
    def test_neg_kappa_is_an_involution(self, a):
        assert a.neg_kappa().neg_kappa() == a

    def test_neg_kappa(self):
        assert KField((1,), (1, -2)).neg_kappa() == KField((1,), (1, 2))

    def test_normalize_and_named_operations(self):
        f = kf_normalize(RatPoly((2, 2)), RatPoly((4,)))
        assert f == KField((Fraction(1, 2), Fraction(1, 2)))
        assert kf_arith(f, KAPPA, 'div') == f / KAPPA
        assert kf_arith(f, ONE, 'sub') == KField((Fraction(-1, 2), Fraction(1, 2)))
        with pytest.raises(ZeroDenominator):
            kf_normalize(RatPoly((1,)), RatPoly())
        with pytest.raises(MalformedInput):
            kf_arith(f, f, 'pow')


class TestEvaluation:
    @given(kfields(), kfields(), fractions(max_value=3, max_denominator=11))
    def test_evaluation_is_a_ring_map(self, a, b, point):
        try:
            left = kf_eval(a * b, point)
            right = kf_eval(a, point) * kf_eval(b, point)
        except PoleAtPoint:
            assume(False)
        assert left == right

    def test_pole(self):
        with pytest.raises(PoleAtPoint):
            kf_eval(KField((1,), (1, -2)), Fraction(1, 2))

    def test_non_generic_point_warns(self):
        with pytest.warns(NonGenericWarning):
            assert KAPPA.eval(Fraction(1, 3), N=4) == Fraction(1, 3)

    def test_genericity(self):
        assert is_generic(Fraction(1, 7), 4)
        assert not is_generic(0, 4)
        assert not is_generic(Fraction(-3, 4), 4)


class TestSerialization:
    def test_json_lists_constant_term_first(self):
        assert KField((3, -9)).to_json() == {'num': ['3/1', '-9/1'], 'den': ['1/1']}

    @given(kfields())
    def test_json_round_trip(self, a):
        assert KField.from_json(a.to_json()) == a

    def test_malformed_json(self):
        with pytest.raises(MalformedInput):
            KField.from_json({'numerator': [1]})

    def test_content_is_pulled_out(self):
        assert str(KField((3, -9))) == '3(1 - 3κ)'
        assert str(KAPPA) == 'κ'
        assert str(ZERO) == '0'
