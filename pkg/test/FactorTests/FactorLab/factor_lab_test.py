#!/usr/bin/env python

import os
import sys
import unittest

base = os.path.abspath(os.path.join(os.path.dirname(__file__), "../../.."))
sys.path.insert(0, base)

from PARRY.modules.factorlab import (
    bilateral_order, bispecials, build_index, complexity, complexity_rows, deep_records,
    delta_complexity, first_deviation, is_ab_maximal, maximal_pairs, special_factors, stabilize,
    strong_bispecials, verify_connection, verify_difference_lemma)
from PARRY.modules.parrycore import parse_expansion
from PARRY.modules.parryerrors import (
    BudgetExceeded, NotLeftExtensions, OutOfRange, PrefixTooShort)
from PARRY.modules.randomexpansion import random_nonsimple
from PARRY.modules.substitution import (
    canonical_substitution, fixed_point_prefix, parse_substitution)
from test.propertycheck import check_unittest

FIBONACCI = parse_substitution("0>01;1>0")
TRIBONACCI = parse_substitution("0>01;1>02;2>0")


class SturmianTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.index = stabilize(FIBONACCI, 0, 12)

    def test_complexity(self):
        self.assertEqual([complexity(self.index, n) for n in range(13)],
                         [n + 1 for n in range(13)])
        self.assertEqual(complexity(self.index, 7), 8)

    def test_one_special_factor_per_side(self):
        for n in range(12):
            self.assertEqual(len(special_factors(self.index, n, 'left')), 1)
            self.assertEqual(len(special_factors(self.index, n, 'right')), 1)
        self.assertEqual(special_factors(self.index, 3), [((0, 1, 0), frozenset([0, 1]))])

    def test_no_strong_bispecials(self):
        for n in range(12):
            self.assertEqual(strong_bispecials(self.index, n), [])
        self.assertEqual(bilateral_order(self.index, ()), 0)

    def test_bispecial_quadruples(self):
        self.assertEqual(bispecials(self.index, 0), [((), ((0, 1, 0, 0), (0, 1, 1, 0)))])
        for n in range(12):
            self.assertEqual([v for v, _ in bispecials(self.index, n)],
                             [v for v, _ in special_factors(self.index, n)])

    def test_no_maximal_factors(self):
        self.assertEqual(maximal_pairs(self.index, (0, 1, 0)), [])
        self.assertFalse(is_ab_maximal(self.index, (0, 1, 0), 0, 1))
        with self.assertRaises(NotLeftExtensions):
            is_ab_maximal(self.index, (0, 1, 0), 0, 0)

    def test_connection_and_difference(self):
        report = verify_connection(self.index)
        self.assertTrue(report.passed)
        self.assertEqual(len(report.rows), 12)
        self.assertEqual(verify_difference_lemma(self.index), [])
        self.assertIsNone(first_deviation(self.index))

    def test_rows(self):
        rows = complexity_rows(self.index)
        self.assertEqual(rows[0], (0, 1, 1, 1, 1))
        self.assertEqual(rows[-1], (12, 13, None, None, None))

    def test_lookups_past_the_index_depth(self):
        long_prefix = fixed_point_prefix(FIBONACCI, 0, 20).word
        self.assertTrue(self.index.contains(long_prefix))
        self.assertFalse(self.index.contains((1, 1)))
        self.assertFalse(self.index.contains((0, 0, 0)))

    def test_length_errors(self):
        with self.assertRaises(OutOfRange):
            complexity(self.index, 13)
        with self.assertRaises(OutOfRange):
            delta_complexity(self.index, 12)
        with self.assertRaises(OutOfRange):
            is_ab_maximal(self.index, fixed_point_prefix(FIBONACCI, 0, 12).word, 0, 1)

    def test_deep_records_settle(self):
        word = fixed_point_prefix(FIBONACCI, 0, 60).word
        records = deep_records(self.index, [word[:n] for n in range(1, 61)])
        self.assertEqual(len(records), 60)
        for n in range(1, 61):
            self.assertEqual(records[word[:n]].left, frozenset([0, 1]), n)
            self.assertTrue(records[word[:n]].interior)
        self.assertIsNone(deep_records(self.index, [(1, 1) * 10])[(1, 1) * 10])

    def test_deep_records_budget(self):
        word = fixed_point_prefix(FIBONACCI, 0, 50).word
        with self.assertRaises(BudgetExceeded):
            deep_records(self.index, [word], budget=len(self.index))


class IndexTest(unittest.TestCase):

    def test_truncated_occurrences_give_no_extensions(self):
        prefix = fixed_point_prefix(FIBONACCI, 0, 21)
        index = build_index(prefix, 4)
        rec = index.record(prefix.word[1:])
        self.assertEqual(rec.occurrences, 1)
        self.assertEqual(rec.left, frozenset())
        self.assertEqual(rec.right, frozenset())
        self.assertTrue(rec.boundary_incomplete)
        self.assertFalse(rec.interior)

    def test_prefix_too_short(self):
        with self.assertRaises(PrefixTooShort):
            build_index(fixed_point_prefix(FIBONACCI, 0, 5), 5)

    def test_budget(self):
        with self.assertRaises(BudgetExceeded):
            stabilize(FIBONACCI, 0, 30, budget=64)

    def test_alphabet(self):
        index = stabilize(TRIBONACCI, 0, 4)
        self.assertEqual(index.alphabet, frozenset([0, 1, 2]))
        self.assertEqual(index.factors(2), [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)])


class ComplexityTest(unittest.TestCase):

    def test_tribonacci(self):
        index = stabilize(TRIBONACCI, 0, 15)
        self.assertEqual([complexity(index, n) for n in range(16)],
                         [2 * n + 1 for n in range(16)])
        self.assertEqual(bilateral_order(index, ()), 0)

    def test_fibonacci(self):
        index = stabilize(FIBONACCI, 0, 40, budget=2 ** 16)
        self.assertEqual([complexity(index, n) for n in range(41)], [n + 1 for n in range(41)])

    def test_affine_example(self):
        index = stabilize(canonical_substitution(parse_expansion("2(0,1)")), 0, 60)
        self.assertEqual(complexity(index, 10), 21)
        self.assertEqual([delta_complexity(index, n) for n in range(1, 60)], [2] * 59)
        self.assertIsNone(first_deviation(index))

    def test_three_letter_period(self):
        index = stabilize(canonical_substitution(parse_expansion("3(0,2)")), 0, 20)
        self.assertEqual([complexity(index, n) for n in range(1, 21)],
                         [2 * n + 1 for n in range(1, 21)])

    def test_not_affine(self):
        # 001 is the first strong bispecial factor
        index = stabilize(canonical_substitution(parse_expansion("2,1(0,2)")), 0, 30)
        self.assertEqual([complexity(index, n) for n in range(6)], [1, 4, 7, 10, 13, 17])
        self.assertEqual(first_deviation(index), 4)
        self.assertEqual(delta_complexity(index, 3), 3)
        self.assertEqual(delta_complexity(index, 4), 4)
        self.assertEqual(bilateral_order(index, (0, 0, 1)), 1)

    def test_connection_formula(self):
        def holds(exp):
            index = stabilize(canonical_substitution(exp), 0, 12)
            return verify_connection(index).passed

        check_unittest(self, holds, random_nonsimple(10, seed=17))


if __name__ == '__main__':
    unittest.main(verbosity=2)
