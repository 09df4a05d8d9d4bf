"""
Seeded generators of valid Parry expansions.

Generators are zero-argument callables, so they compose the same way as
the property checks that consume them.  Every generator draws from its
own random.Random, so a seed always yields the same expansions.
"""

import logging
import random

from PARRY.modules.parrycore import validate
from PARRY.modules.parryerrors import ValidationError

logger = logging.getLogger('parryword.randomexpansion')

# draws before giving up on finding a valid expansion
MAX_ATTEMPTS = 10000


def _first_valid(draw, simple):
    for _ in range(MAX_ATTEMPTS):
        pre, period = draw()
        try:
            exp = validate(pre, period)
        except ValidationError:
            continue
        if exp.is_simple == simple:
            return exp
    raise RuntimeError("no valid expansion after %d draws" % MAX_ATTEMPTS)


def gen_nonsimple(rng, max_digit=3, max_m=3, max_p=3):
    """ t_1 ... t_m (t_{m+1} ... t_{m+p})^omega with every t_i <= t_1 <= max_digit """
    def draw():
        t1 = rng.randint(1, max_digit)
        pre = [t1] + [rng.randint(0, t1) for _ in range(rng.randint(1, max_m) - 1)]
        period = [rng.randint(0, t1) for _ in range(rng.randint(1, max_p))]
        return pre, period
    return lambda: _first_valid(draw, simple=False)


def gen_simple(rng, max_digit=3, max_m=4):
    def draw():
        t1 = rng.randint(1, max_digit)
        m = rng.randint(1, max_m)
        pre = [t1] + [rng.randint(0, t1) for _ in range(m - 1)]
        if pre[-1] == 0:
            pre[-1] = rng.randint(1, t1)
        return pre, []
    return lambda: _first_valid(draw, simple=True)


def distinct(generator, count):
    """ count distinct draws, in the order first seen """
    seen = []
    for _ in range(MAX_ATTEMPTS):
        if len(seen) == count:
            break
        exp = generator()
        if exp not in seen:
            seen.append(exp)
    if len(seen) < count:
        logger.warning("only %d distinct expansions found, %d requested", len(seen), count)
    return seen


def random_nonsimple(count, seed, max_digit=3, max_m=3, max_p=3):
    return distinct(gen_nonsimple(random.Random(seed), max_digit, max_m, max_p), count)


def random_simple(count, seed, max_digit=3, max_m=4):
    return distinct(gen_simple(random.Random(seed), max_digit, max_m), count)
