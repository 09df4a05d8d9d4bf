#!/usr/bin/env python

import os
import sys
import unittest

base = os.path.abspath(os.path.join(os.path.dirname(__file__), "../../.."))
sys.path.insert(0, base)

import numpy as np

from PARRY.modules.parrycore import beta_value, parse_expansion
from PARRY.modules.parryerrors import (
    InvalidSubstitution, LetterOutOfRange, NotProlongable, ParseError, SimpleExpansion)
from PARRY.modules.randomexpansion import random_nonsimple
from PARRY.modules.substitution import (
    Substitution, canonical_substitution, dominant_eigenvalue, fixed_point_prefix,
    incidence_matrix, is_injective, is_primitive, is_suffix_free, parse_substitution,
    periodic_points, power_image, power_image_closed_form)
from test.propertycheck import check_unittest

FIVE_LETTER = "0>0100;1>200;2>1301;3>324;4>423"


class ParseTest(unittest.TestCase):

    def test_canonical_matches_text(self):
        sub = canonical_substitution(parse_expansion("2(0,1)"))
        self.assertEqual(sub, parse_substitution("0>001;1>2;2>01"))
        self.assertEqual(sub.to_text(), "0>001;1>2;2>01")

    def test_canonical_simple(self):
        self.assertEqual(canonical_substitution(parse_expansion("1,1")).images, ((0, 1), (0,)))
        self.assertEqual(canonical_substitution(parse_expansion("1,1,1")),
                         parse_substitution("0>01;1>02;2>0"))

    def test_canonical_outside_s(self):
        sub = canonical_substitution(parse_expansion("2,1(0,2)"))
        self.assertEqual(sub.images, ((0, 0, 1), (0, 2), (3,), (0, 0, 2)))

    def test_comma_images(self):
        sub = parse_substitution("0>0,1 ; 1>0")
        self.assertEqual(sub.images, ((0, 1), (0,)))

    def test_bad_text(self):
        for text in ("", "0>01;0>1", "1>0", "0>x", "0-01"):
            with self.assertRaises(ParseError):
                parse_substitution(text)

    def test_letter_outside_alphabet(self):
        with self.assertRaises(InvalidSubstitution):
            parse_substitution("0>01;1>3")
        with self.assertRaises(InvalidSubstitution):
            Substitution(((0,), ()))

    def test_from_dict(self):
        sub = Substitution.from_dict({'alphabetSize': 2, 'images': [[0, 1], [0]]})
        self.assertEqual(sub.to_dict(), {'alphabetSize': 2, 'images': [[0, 1], [0]]})
        with self.assertRaises(InvalidSubstitution):
            Substitution.from_dict({'alphabetSize': 3, 'images': [[0, 1], [0]]})
        with self.assertRaises(ParseError):
            Substitution.from_dict({'rules': []})

    def test_letter_out_of_range(self):
        with self.assertRaises(LetterOutOfRange):
            parse_substitution("0>01;1>0").apply((0, 2))


class IterationTest(unittest.TestCase):

    def test_fixed_point_prefix(self):
        sub = parse_substitution("0>001;1>2;2>01")
        prefix = fixed_point_prefix(sub, 0, 7)
        self.assertEqual(prefix.word, (0, 0, 1, 0, 0, 1, 2))
        self.assertEqual(len(prefix), 7)
        self.assertTrue(prefix.provenance.guaranteed)
        self.assertEqual(power_image(sub, 0, 2), prefix.word)

    def test_not_prolongable(self):
        sub = parse_substitution("0>001;1>2;2>01")
        with self.assertRaises(NotProlongable):
            fixed_point_prefix(sub, 1, 10)
        with self.assertRaises(NotProlongable):
            fixed_point_prefix(parse_substitution("0>0;1>10"), 0, 10)

    def test_power(self):
        sub = parse_substitution(FIVE_LETTER)
        self.assertEqual(sub.power(2).image(1), (1, 3, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0))
        self.assertEqual(sub.power(1), sub)

    def test_closed_form_power_image(self):
        def agrees(exp):
            sub = canonical_substitution(exp)
            return all(power_image_closed_form(exp, k, n) == power_image(sub, k, n)
                       for k in range(exp.alphabet_size) for n in range(6))

        check_unittest(self, agrees, random_nonsimple(20, seed=3))

    def test_closed_form_needs_period(self):
        with self.assertRaises(SimpleExpansion):
            power_image_closed_form(parse_expansion("1,1"), 0, 2)


class PropertiesTest(unittest.TestCase):

    def test_incidence_matrix(self):
        matrix = incidence_matrix(parse_substitution("0>001;1>2;2>01"))
        np.testing.assert_array_equal(matrix, [[2, 1, 0], [0, 0, 1], [1, 0, 1]])

    def test_dominant_eigenvalue_is_beta(self):
        def matches(exp):
            return abs(dominant_eigenvalue(canonical_substitution(exp)) - float(beta_value(exp))) < 1e-6

        check_unittest(self, matches, random_nonsimple(20, seed=5))

    def test_canonical_is_primitive_and_injective(self):
        def holds(exp):
            sub = canonical_substitution(exp)
            return is_primitive(sub) and is_injective(sub)

        check_unittest(self, holds, random_nonsimple(50, seed=19, max_digit=4))

    def test_prefix_stability(self):
        def nested(exp):
            sub = canonical_substitution(exp)
            return all(power_image(sub, 0, n + 1)[:len(power_image(sub, 0, n))]
                       == power_image(sub, 0, n) for n in range(7))

        check_unittest(self, nested, random_nonsimple(10, seed=31))

    def test_primitive(self):
        self.assertTrue(is_primitive(parse_substitution("0>01;1>0")))
        self.assertTrue(is_primitive(parse_substitution(FIVE_LETTER)))
        self.assertFalse(is_primitive(parse_substitution("0>01;1>1")))

    def test_injective(self):
        self.assertTrue(is_injective(parse_substitution("0>01;1>0")))
        self.assertTrue(is_injective(parse_substitution(FIVE_LETTER)))
        self.assertFalse(is_injective(parse_substitution("0>01;1>0;2>1")))
        self.assertFalse(is_injective(parse_substitution("0>01;1>01")))

    def test_suffix_free(self):
        self.assertTrue(is_suffix_free(parse_substitution("0>01;1>0")))
        self.assertFalse(is_suffix_free(parse_substitution("0>001;1>2;2>01")))

    def test_periodic_points(self):
        self.assertEqual(periodic_points(parse_substitution(FIVE_LETTER), 2),
                         [(0, 1), (3, 1), (4, 1), (1, 2), (2, 2)])
        self.assertEqual(periodic_points(parse_substitution("0>01;1>0")), [(0, 1)])
        self.assertEqual(periodic_points(parse_substitution("0>1;1>01")), [(0, 2), (1, 2)])


if __name__ == '__main__':
    unittest.main(verbosity=2)
