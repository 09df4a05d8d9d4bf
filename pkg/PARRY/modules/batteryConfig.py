"""
YAML configuration for parryword: the packaged numeric defaults, a
user override file, and verification battery files.

Battery files are JSON or YAML.  Either a list of items, or a mapping
with a 'Battery' list and an optional 'IncludeBattery' list of further
battery files (paths relative to the including file).  Each item is
merged over the 'battery' section of the defaults.
"""

import json
import logging
import os
import sys

from yaml import YAMLError, safe_load

from PARRY.modules.parrycore import parse_expansion
from PARRY.modules.parryerrors import ValidationError
from PARRY.modules.randomexpansion import random_nonsimple, random_simple

CONFIG_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.realpath(__file__))), 'config')
DEFAULTS_FILE = os.path.join(CONFIG_DIR, 'defaults.yaml')
DEFAULT_BATTERY_FILE = os.path.join(CONFIG_DIR, 'default_battery.yaml')


def merge(obj_1, obj_2):
    """
    Recursive function to merge nested dictionaries
    with obj_2 winning conflicts
    """
    if isinstance(obj_1, dict) and isinstance(obj_2, dict):
        result = {}
        for key, value in obj_1.items():
            if key not in obj_2:
                result[key] = value
            else:
                result[key] = merge(value, obj_2[key])
        for key, value in obj_2.items():
            if key not in obj_1:
                result[key] = value
        return result
    return obj_2


def _load(fn, logger):
    """ parse one YAML/JSON file; any failure ends the program """
    try:
        with open(fn) as fd:
            return safe_load(fd)

    except EnvironmentError as err:
        error_message = "Error processing item: {0}\n".format(fn)
        logger.error(error_message)
        error_message += "I/O Error({0}): {1}.".format(err.errno, err.strerror)
        sys.exit(error_message)

    except YAMLError as err:
        error_message = "YAML Error: {0}".format(err)
        logger.error(error_message)
        sys.exit(error_message)


class ParryConfig(object):
    """
    Numeric defaults: the packaged defaults.yaml with the user's file,
    if any, merged on top.
    """

    def __init__(self, user_file=None):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)

        self.default_config_doc = _load(DEFAULTS_FILE, self.logger) or {}
        user_file = user_file or os.environ.get('PARRYWORD_DEFAULTS')
        self.user_config_doc = {}
        if user_file:
            self.logger.info('Using user defaults file: %s', user_file)
            self.user_config_doc = _load(user_file, self.logger) or {}
            if not isinstance(self.user_config_doc, dict):
                error_message = "Defaults file {0} must hold a mapping".format(user_file)
                self.logger.error(error_message)
                sys.exit(error_message)
        self.effective = merge(self.default_config_doc, self.user_config_doc)

    def __getitem__(self, key):
        return self.effective[key]

    def get(self, key, default=None):
        return self.effective.get(key, default)

    def show_effective_config(self):
        print(json.dumps(self.effective, sort_keys=True, indent=4))


class BatteryConfig(object):
    """
    The effective list of battery items for one battery file.
    """

    def __init__(self, battery_file=None, config=None):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.config = config or ParryConfig()
        self.battery_file = battery_file or DEFAULT_BATTERY_FILE
        self.logger.info('Using battery file: %s', self.battery_file)
        self.user_items = self.load_battery_file(self.battery_file)
        self.items = self.create_effective_items()

    def load_battery_file(self, battery_name, depth=0):
        """
        Items of a battery file, followed by the items of the files it
        includes.  Includes nest at most two levels.
        """
        doc = _load(battery_name, self.logger)
        if doc is None:
            return []
        if isinstance(doc, list):
            return doc
        if not isinstance(doc, dict) or not isinstance(doc.get('Battery', []), list):
            error_message = "Battery file {0} must hold a list of items".format(battery_name)
            self.logger.error(error_message)
            sys.exit(error_message)

        items = list(doc.get('Battery', []))
        base_dir = os.path.dirname(battery_name) or "."
        for inc in doc.get('IncludeBattery', []):
            if depth >= 2:
                self.logger.warning("ignoring nested include %s in %s", inc, battery_name)
                continue
            fn = inc if os.path.isabs(inc) else os.path.join(base_dir, inc)
            items.extend(self.load_battery_file(fn, depth + 1))
        return items

    @staticmethod
    def check_valid(item):
        return isinstance(item, dict) and ('expansion' in item or 'random' in item)

    def create_effective_items(self):
        """
        Every user item merged over the battery defaults; random items
        are expanded into one item per generated expansion.
        """
        defaults = self.config.get('battery', {})
        items = []
        for n, item in enumerate(self.user_items):
            if not self.check_valid(item):
                self.logger.warning("skipping battery item %d: %r", n, item)
                continue
            entry = merge(dict(defaults), item)
            if 'random' in entry:
                items.extend(self._expand_random(entry))
                continue
            try:
                entry['expansion'] = parse_expansion(str(entry['expansion'])).to_text()
            except ValidationError as err:
                error_message = "Battery item {0}: {1}".format(n, err)
                self.logger.error(error_message)
                sys.exit(error_message)
            items.append(entry)
        return items

    def _expand_random(self, entry):
        count = int(entry.pop('random'))
        seed = entry.pop('seed', 0)
        kind = entry.pop('kind', 'nonsimple')
        max_digit = entry.pop('maxDigit', 3)
        max_m = entry.pop('maxM', 3 if kind == 'nonsimple' else 4)
        max_p = entry.pop('maxP', 3)
        if kind == 'simple':
            expansions = random_simple(count, seed, max_digit, max_m)
        else:
            expansions = random_nonsimple(count, seed, max_digit, max_m, max_p)
        return [merge(entry, {'expansion': exp.to_text()}) for exp in expansions]

    def show_effective_items(self):
        print(json.dumps(self.items, sort_keys=True, indent=4))
