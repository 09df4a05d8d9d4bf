#!/usr/bin/env python

import os
import sys
import unittest

base = os.path.abspath(os.path.join(os.path.dirname(__file__), "../../.."))
sys.path.insert(0, base)

from PARRY.modules.batteryConfig import BatteryConfig, ParryConfig, merge
from PARRY.modules.randomexpansion import random_simple

HERE = os.path.dirname(os.path.abspath(__file__))


def fixture(name):
    return os.path.join(HERE, name)


class ParryConfigTest(unittest.TestCase):

    def test_packaged_defaults(self):
        config = ParryConfig()
        self.assertEqual(config['maxN'], 30)
        self.assertEqual(config['battery']['witnessBudget'], 100)
        self.assertEqual(config.get('missing', 7), 7)

    def test_user_file_merged(self):
        config = ParryConfig(fixture('defaults_override.yaml'))
        self.assertEqual(config['maxN'], 12)
        self.assertEqual(config['battery']['kMax'], 2)
        self.assertEqual(config['battery']['maxN'], 30)
        self.assertEqual(config['depth'], 50)

    def test_user_file_not_a_mapping(self):
        with self.assertRaises(SystemExit):
            ParryConfig(fixture('included.yaml'))

    def test_missing_user_file(self):
        with self.assertRaises(SystemExit):
            ParryConfig(fixture('no_such_file.yaml'))

    def test_merge(self):
        self.assertEqual(merge({'a': 1, 'b': {'c': 2, 'd': 3}}, {'b': {'d': 4}, 'e': 5}),
                         {'a': 1, 'b': {'c': 2, 'd': 4}, 'e': 5})


class BatteryConfigTest(unittest.TestCase):

    def test_invalid_yaml_file(self):
        with self.assertRaises(SystemExit):
            BatteryConfig(fixture('invalid_yaml.yaml'))

    def test_battery_not_a_list(self):
        with self.assertRaises(SystemExit):
            BatteryConfig(fixture('not_a_list.yaml'))

    def test_bad_expansion(self):
        with self.assertRaises(SystemExit):
            BatteryConfig(fixture('bad_expansion.yaml'))

    def test_include(self):
        bc = BatteryConfig(fixture('include.yaml'))
        self.assertEqual(len(bc.user_items), 3)
        self.assertEqual([item['expansion'] for item in bc.items], ["1,1", "2(0,1)"])
        self.assertEqual(bc.items[0]['maxN'], 30)
        self.assertEqual(bc.items[1]['maxN'], 12)
        self.assertEqual(bc.items[1]['depth'], 50)

    def test_random_items(self):
        bc = BatteryConfig(fixture('random.yaml'))
        expected = [exp.to_text() for exp in random_simple(3, 5, 3, 4)]
        self.assertEqual([item['expansion'] for item in bc.items], expected)
        for item in bc.items:
            self.assertEqual(item['maxN'], 10)
            self.assertNotIn('random', item)
            self.assertNotIn('seed', item)

    def test_json_battery(self):
        bc = BatteryConfig(fixture('battery.json'))
        self.assertEqual(bc.items[0]['expansion'], "3(0,2)")
        self.assertEqual(bc.items[0]['depth'], 20)

    def test_default_battery(self):
        bc = BatteryConfig()
        self.assertEqual([item['expansion'] for item in bc.items],
                         ["1,1", "1,1,1", "2(0,1)", "2,1(0,2)", "3(0,2)", "2,1"])
        self.assertEqual(bc.items[0]['maxN'], 40)

    def test_config_battery_section(self):
        config = ParryConfig(fixture('defaults_override.yaml'))
        bc = BatteryConfig(fixture('battery.json'), config)
        self.assertEqual(bc.items[0]['kMax'], 2)


if __name__ == '__main__':
    unittest.main(verbosity=2)
