#!/usr/bin/env python

import os
import sys
import unittest

base = os.path.abspath(os.path.join(os.path.dirname(__file__), "../../.."))
sys.path.insert(0, base)

from mpmath import mpf, polyval

from PARRY.modules.parrycore import (
    INFINITE, affine_polynomial, beta_integer_word, beta_value, derive_params,
    gap_lengths, in_s_by_pattern, is_admissible, is_affine_family, oplus,
    parse_expansion, renyi_digits, t_oplus, validate)
from PARRY.modules.parryerrors import (
    AllZeroPeriod, InvalidDigit, ParseError, ParryConditionViolated,
    SimpleExpansion, TrivialBase, ValidationError, ZeroLeadDigit)
from PARRY.modules.randomexpansion import random_nonsimple, random_simple
from PARRY.modules.substitution import canonical_substitution, fixed_point_prefix
from test.propertycheck import check_unittest


class ValidateTest(unittest.TestCase):

    def test_golden_mean_is_simple(self):
        exp = parse_expansion("1,1")
        self.assertTrue(exp.is_simple)
        self.assertEqual(exp.m, 2)
        self.assertEqual(exp.to_text(), "1,1")

    def test_nonsimple_text(self):
        exp = parse_expansion(" 2 ( 0 , 1 ) ")
        self.assertFalse(exp.is_simple)
        self.assertEqual((exp.m, exp.p), (1, 2))
        self.assertEqual(exp.to_text(), "2(0,1)")

    def test_period_cut_to_minimal_length(self):
        exp = validate([2], [0, 1, 0, 1])
        self.assertEqual(exp.period, (0, 1))
        self.assertEqual(exp, parse_expansion("2(0,1)"))

    def test_trailing_zeros_of_simple_dropped(self):
        self.assertEqual(validate([2, 1, 0, 0]).preperiod, (2, 1))

    def test_parry_condition_shift(self):
        with self.assertRaises(ParryConditionViolated) as cm:
            parse_expansion("1(0,1)")
        self.assertEqual(cm.exception.shift, 3)

    def test_shift_two_violation(self):
        with self.assertRaises(ParryConditionViolated) as cm:
            validate([1, 2])
        self.assertEqual(cm.exception.shift, 2)

    def test_shifts_strictly_smaller(self):
        def ordered(exp):
            horizon = exp.m + 2 * exp.p + 1
            head = exp.digits(horizon)
            return all(tuple(exp.digit(j + i) for i in range(horizon)) < head
                       for j in range(2, exp.m + 2 * exp.p + 1))

        check_unittest(self, ordered, random_nonsimple(40, seed=23, max_digit=4))

    def test_mutations_rejected(self):
        def rejected(exp):
            try:
                validate((exp.digit(1) + 1,) + exp.preperiod[1:], (exp.digit(1) + 1,))
            except ParryConditionViolated:
                return True
            return False

        check_unittest(self, rejected, random_nonsimple(20, seed=29))

    def test_trivial_base(self):
        with self.assertRaises(TrivialBase):
            validate([1])

    def test_zero_lead_digit(self):
        with self.assertRaises(ZeroLeadDigit):
            validate([0, 1])

    def test_all_zero_period(self):
        with self.assertRaises(AllZeroPeriod):
            validate([2], [0])

    def test_invalid_digit(self):
        with self.assertRaises(InvalidDigit):
            validate([2, -1])
        with self.assertRaises(InvalidDigit):
            validate([2, 1.5])

    def test_parse_errors(self):
        for text in ("", "abc", "2(0,1", "2,(1)"):
            with self.assertRaises(ParseError):
                parse_expansion(text)

    def test_errors_share_a_base(self):
        self.assertTrue(issubclass(ParryConditionViolated, ValidationError))
        self.assertTrue(issubclass(ParseError, ValueError))


class BetaTest(unittest.TestCase):

    def test_golden_mean(self):
        beta = beta_value(parse_expansion("1,1"))
        self.assertAlmostEqual(float(beta), 1.6180339887, places=9)

    def test_integer_base(self):
        self.assertEqual(beta_value(parse_expansion("2")), 2)

    def test_affine_root(self):
        exp = parse_expansion("2(0,1)")
        beta = beta_value(exp)
        self.assertAlmostEqual(float(beta), 2.24697960, places=7)
        self.assertLess(abs(polyval([mpf(c) for c in affine_polynomial(exp)], beta)), 1e-10)

    def test_round_trip(self):
        def recovers(exp):
            found = renyi_digits(beta_value(exp), 20)
            expected = exp.digits(20)
            return all(found.digits[i] == expected[i] for i in found.safe_positions())

        check_unittest(self, recovers,
                       random_nonsimple(50, seed=7, max_digit=4) + random_simple(10, seed=7))

    def test_renyi_digits_of_integer(self):
        found = renyi_digits(2, 4)
        self.assertEqual(found.digits, (2, 0, 0, 0))
        self.assertEqual(found.unsafe, (False,) * 4)

    def test_renyi_digits_golden_mean(self):
        found = renyi_digits(beta_value(parse_expansion("1,1")), 4)
        self.assertEqual(found.digits, (1, 1, 0, 0))

    def test_renyi_digits_period(self):
        found = renyi_digits(beta_value(parse_expansion("2(0,1)")), 7)
        self.assertEqual(found.digits, (2, 0, 1, 0, 1, 0, 1))
        self.assertEqual(found.safe_positions(), list(range(7)))


class ParamsTest(unittest.TestCase):

    def test_affine_example(self):
        params = derive_params(parse_expansion("2(0,1)"))
        self.assertEqual(params.t, 1)
        self.assertEqual(params.z_table, {1: 0, 2: 1})
        self.assertEqual(params.ell0, 0)
        self.assertEqual(params.z_star, 2)
        self.assertTrue(params.in_s)
        self.assertEqual(params.k0, INFINITE)
        self.assertEqual(params.to_dict()['k0'], "inf")

    def test_outside_s(self):
        params = derive_params(parse_expansion("2,1(0,2)"))
        self.assertEqual(params.t, 1)
        self.assertEqual(params.z_star, 1)
        self.assertFalse(params.in_s)

    def test_ell0_counts_leading_zeros(self):
        self.assertEqual(derive_params(parse_expansion("1,0,1")).ell0, 2)

    def test_simple_has_no_t(self):
        params = derive_params(parse_expansion("1,1"))
        self.assertEqual(params.ell0, 1)
        with self.assertRaises(SimpleExpansion):
            params.t
        self.assertNotIn('t', params.to_dict())

    def test_s_membership_readings_agree(self):
        check_unittest(self,
                       lambda exp: derive_params(exp).in_s == in_s_by_pattern(exp),
                       random_nonsimple(40, seed=11))

    def test_wrapped_addition(self):
        exp = parse_expansion("2,1(0,2)")
        self.assertEqual(oplus(exp, 1, 1), 2)
        self.assertEqual(oplus(exp, 3, 1), 2)
        self.assertEqual(oplus(exp, 3, 4), 3)
        self.assertEqual(t_oplus(exp, 0, 4), 2)
        self.assertEqual(t_oplus(exp, 3, 2), 0)
        with self.assertRaises(SimpleExpansion):
            oplus(parse_expansion("1,1"), 0, 1)


class GapTest(unittest.TestCase):

    def test_golden_mean_gaps(self):
        gaps = gap_lengths(parse_expansion("1,1"))
        self.assertEqual(len(gaps), 2)
        self.assertAlmostEqual(float(gaps[0]), 1.0, places=10)
        self.assertAlmostEqual(float(gaps[1]), 0.6180339, places=6)

    def test_nonsimple_gap_count(self):
        gaps = gap_lengths(parse_expansion("2(0,1)"))
        self.assertEqual(len(gaps), 3)
        self.assertTrue(all(0 < g < 1 + 1e-12 for g in gaps))

    def test_admissible(self):
        exp = parse_expansion("1,1")
        self.assertTrue(is_admissible(exp, (1, 0, 1)))
        self.assertFalse(is_admissible(exp, (1, 1)))

    def test_gaps_below_one(self):
        def ordered(exp):
            gaps = gap_lengths(exp)
            return abs(gaps[0] - 1) < 1e-10 and all(0 < g < gaps[0] for g in gaps[1:])

        check_unittest(self, ordered, random_nonsimple(20, seed=13))

    def test_beta_integer_word(self):
        self.assertEqual(beta_integer_word(parse_expansion("1,1"), 5), (0, 1, 0, 0, 1))
        self.assertEqual(beta_integer_word(parse_expansion("2(0,1)"), 1), (0,))

    def test_beta_integers_follow_fixed_point(self):
        for text in ("1,1", "2(0,1)"):
            exp = parse_expansion(text)
            prefix = fixed_point_prefix(canonical_substitution(exp), 0, 500).word
            self.assertEqual(beta_integer_word(exp, 500), prefix)

    def test_affine_family(self):
        self.assertTrue(is_affine_family(parse_expansion("2(0,1)")))
        self.assertTrue(is_affine_family(parse_expansion("3(0,2)")))
        self.assertFalse(is_affine_family(parse_expansion("2,1(0,2)")))
        self.assertFalse(is_affine_family(parse_expansion("1,1")))
        self.assertEqual(affine_polynomial(parse_expansion("2(0,1)")), [1, -2, -1, 1])
        self.assertIsNone(affine_polynomial(parse_expansion("2,1(0,2)")))


if __name__ == '__main__':
    unittest.main(verbosity=2)
