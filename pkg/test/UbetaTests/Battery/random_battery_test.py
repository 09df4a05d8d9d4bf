#!/usr/bin/env python

import os
import sys
import unittest
from dataclasses import replace

base = os.path.abspath(os.path.join(os.path.dirname(__file__), "../../.."))
sys.path.insert(0, base)

from PARRY.modules import ubeta
from PARRY.modules.battery import check_maximal, run_item, verify_battery
from PARRY.modules.batteryConfig import BatteryConfig
from PARRY.modules.factorlab import stabilize
from PARRY.modules.parrycore import parse_expansion
from PARRY.modules.randomexpansion import random_nonsimple
from PARRY.modules.substitution import canonical_substitution


def short_letter_extensions(exp):
    """ letter_extensions with one letter dropped from Lext(0) """
    ext = ubeta.letter_extensions(exp)
    ext[0] = ext[0] - {max(ext[0])}
    return ext


class RandomBatteryTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        items = [{'expansion': exp.to_text(), 'betaIntegers': 100}
                 for exp in random_nonsimple(25, seed=1999, max_digit=3, max_m=3, max_p=3)]
        cls.report = verify_battery(items, jobs=2)

    def test_all_items_pass(self):
        failures = ["%s: %s" % (item.expansion, item.failed_checks() or item.error)
                    for item in self.report.items if not item.passed]
        self.assertEqual(failures, [])
        self.assertEqual(self.report.to_dict()['count'], 25)

    def test_assumption_a_holds(self):
        for item in self.report.items:
            self.assertTrue(item.checks['assumptionA']['passed'], item.expansion)

    def test_connection_formula_everywhere(self):
        for item in self.report.items:
            self.assertEqual(item.checks['connection']['violations'], [], item.expansion)

    def test_sorted_by_expansion(self):
        names = [item.expansion for item in self.report.items]
        self.assertEqual(names, sorted(names))


class BatteryHooksTest(unittest.TestCase):

    def test_default_battery_passes(self):
        report = verify_battery(BatteryConfig().items)
        self.assertTrue(report.passed, report.to_text())
        self.assertTrue(report.to_text().endswith("6 item(s), 0 failed"))

    def test_corrupted_closed_form_reported(self):
        report = verify_battery([{'expansion': "2(0,1)"}],
                                closed_forms={'letter_extensions': short_letter_extensions})
        self.assertFalse(report.passed)
        item = report.items[0]
        self.assertEqual(item.failed_checks(), ['letterExtensions'])
        self.assertIn("Lext(0)", item.checks['letterExtensions']['diff'][0])
        self.assertIn("missing [2]", item.checks['letterExtensions']['diff'][0])
        self.assertIn("FAIL 2(0,1) letterExtensions", report.to_text())

    def test_unknown_closed_form(self):
        with self.assertRaises(ValueError):
            verify_battery([], closed_forms={'no_such_form': len})

    def test_empty_battery(self):
        report = verify_battery([])
        self.assertTrue(report.passed)
        self.assertEqual(report.to_dict(), {'passed': True, 'count': 0, 'failed': [], 'items': []})
        self.assertEqual(report.to_text(), "0 item(s), 0 failed")

    def test_invalid_item(self):
        item = run_item({'expansion': "1(0,1)"})
        self.assertFalse(item.passed)
        self.assertIn("shift j=3", item.error)

    def test_simple_item(self):
        item = run_item({'expansion': "2,1", 'maxN': 15, 'betaIntegers': 50})
        self.assertTrue(item.passed, item.to_dict())
        self.assertIn('simpleBounds', item.checks)
        self.assertNotIn('glGraph', item.checks)


class MaximalCheckTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.exp = parse_expansion("2,1(0,2)")
        cls.sub = canonical_substitution(cls.exp)
        cls.index = stabilize(cls.sub, 0, 30)
        cls.records = ubeta.maximal_factors(cls.exp, 3, cls.index)

    def check(self, records):
        return check_maximal(self.exp, self.sub, self.index, records)

    def test_records_pass(self):
        doc = self.check(self.records)
        self.assertTrue(doc['passed'], doc['diff'])
        self.assertGreater(doc['confirmed'], 0)

    def test_unconfirmed_prediction_fails(self):
        rec = next(r for r in self.records if r.predicted and r.confirmed)
        doc = self.check([replace(rec, confirmed=False)])
        self.assertFalse(doc['passed'])
        message = "predicted %s-maximal but not confirmed" % (rec.pair,)
        self.assertTrue(any(message in d for d in doc['diff']), doc['diff'])

    def test_false_confirmation_fails(self):
        # Rext(100) = {1} and Rext(200) = {1, 2}
        rec = replace(self.records[0], factor=(0, 0), pair=(1, 2), confirmed=True,
                      predicted=False, notes=())
        doc = self.check([rec])
        self.assertFalse(doc['passed'])
        self.assertIn("is not (1, 2)-maximal", doc['diff'][0])

    def test_confirmation_past_the_depth_fails(self):
        rec = replace(self.records[0], factor=(0,) * 30, confirmed=True, notes=())
        doc = self.check([rec])
        self.assertFalse(doc['passed'])
        self.assertIn("past the index depth 30", doc['diff'][0])

    def test_affine_words_have_one_maximal_factor(self):
        exp = parse_expansion("2(0,1)")
        sub = canonical_substitution(exp)
        index = stabilize(sub, 0, 20)
        records = ubeta.maximal_factors(exp, 3, index)
        self.assertTrue(check_maximal(exp, sub, index, records)['passed'])
        rec = replace(records[0], factor=(0, 0), confirmed=True, predicted=False, notes=())
        doc = check_maximal(exp, sub, index, [rec])
        self.assertFalse(doc['passed'])
        self.assertTrue(any("in an affine word" in d for d in doc['diff']), doc['diff'])


if __name__ == '__main__':
    unittest.main(verbosity=2)
