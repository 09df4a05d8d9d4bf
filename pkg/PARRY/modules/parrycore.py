"""
Renyi expansions of unity for Parry numbers.

A Parry number beta is described by its digit data
d(1) = t_1 ... t_m (t_{m+1} ... t_{m+p})^omega.  This module validates and
canonicalizes that data, computes beta itself, the derived combinatorial
parameters (z, y, ell0, t, zStar, k0, membership in S), the Thurston gap
lengths and the word of gaps between consecutive beta-integers.

Letters and digits are plain ints.  Real numbers are mpmath values so
that long digit iterations stay exact enough to be trusted.
"""

import logging
import math
import numbers
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from mpmath import mp, mpf, workdps, floor

from PARRY.modules.parryerrors import (
    AllZeroPeriod, InvalidDigit, NoConvergence, ParseError,
    ParryConditionViolated, PrecisionExhausted, SimpleExpansion,
    TrivialBase, ValidationError, ZeroLeadDigit)

logger = logging.getLogger('parryword.parrycore')

# working precision (decimal digits) for beta and everything built on it
WORKING_DPS = 60

DEFAULT_TOL = 1e-12

INFINITE = math.inf

_TEXT_RE = re.compile(r'^\s*(\d+(?:\s*,\s*\d+)*)\s*(?:\(\s*(\d+(?:\s*,\s*\d+)*)\s*\))?\s*$')


@dataclass(frozen=True)
class ParryExpansion:
    """
    Validated, canonical digit data of d(1).

    Build these with validate() or parse_expansion(); the constructor
    itself does not check anything.
    """
    preperiod: Tuple[int, ...]
    period: Tuple[int, ...] = ()

    @property
    def m(self) -> int:
        return len(self.preperiod)

    @property
    def p(self) -> int:
        return len(self.period)

    @property
    def is_simple(self) -> bool:
        return not self.period

    @property
    def alphabet_size(self) -> int:
        return self.m + self.p

    def digit(self, i: int) -> int:
        """ t_i, 1-based; zero past the preperiod for simple expansions """
        if i < 1:
            raise IndexError("digits are numbered from 1, got %d" % i)
        if i <= self.m:
            return self.preperiod[i - 1]
        if self.is_simple:
            return 0
        return self.period[(i - self.m - 1) % self.p]

    def digits(self, count: int) -> Tuple[int, ...]:
        return tuple(self.digit(i) for i in range(1, count + 1))

    def to_text(self) -> str:
        text = ",".join(str(d) for d in self.preperiod)
        if self.period:
            text += "(" + ",".join(str(d) for d in self.period) + ")"
        return text

    def to_dict(self) -> dict:
        return {'preperiod': list(self.preperiod),
                'period': list(self.period),
                'm': self.m,
                'p': self.p,
                'simple': self.is_simple,
                'text': self.to_text()}

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class DerivedParams:
    """
    z, y, ell0, t, zStar, k0 and S-membership of an expansion.

    Only z_table and ell0 exist for simple expansions; the other
    attributes raise SimpleExpansion there.
    """
    expansion: ParryExpansion
    z_table: Dict[int, int]
    ell0: int
    _t: Optional[int] = field(default=None, repr=False)
    _y_table: Optional[Dict[int, int]] = field(default=None, repr=False)
    _z_star: Optional[int] = field(default=None, repr=False)
    _k0: Optional[float] = field(default=None, repr=False)
    _in_s: Optional[bool] = field(default=None, repr=False)

    def _nonsimple(self, value, name):
        if self.expansion.is_simple:
            raise SimpleExpansion("%s is only defined for non-simple expansions, got %s"
                                  % (name, self.expansion))
        return value

    @property
    def t(self) -> int:
        return self._nonsimple(self._t, 't')

    @property
    def y_table(self) -> Dict[int, int]:
        return self._nonsimple(self._y_table, 'yTable')

    @property
    def z_star(self) -> int:
        return self._nonsimple(self._z_star, 'zStar')

    @property
    def k0(self):
        return self._nonsimple(self._k0, 'k0')

    @property
    def in_s(self) -> bool:
        return self._nonsimple(self._in_s, 'inS')

    def to_dict(self) -> dict:
        doc = {'expansion': self.expansion.to_text(),
               'zTable': {str(k): v for k, v in sorted(self.z_table.items())},
               'ell0': self.ell0}
        if not self.expansion.is_simple:
            doc['t'] = self._t
            doc['yTable'] = {str(k): v for k, v in sorted(self._y_table.items())}
            doc['zStar'] = self._z_star
            doc['k0'] = "inf" if self._k0 == INFINITE else self._k0
            doc['inS'] = self._in_s
        return doc


@dataclass(frozen=True)
class RenyiDigits:
    """ digits of d(1) recovered from a numeric beta, with UNSAFE flags """
    digits: Tuple[int, ...]
    unsafe: Tuple[bool, ...]

    def safe_positions(self):
        return [i for i, flag in enumerate(self.unsafe) if not flag]

    def to_dict(self) -> dict:
        return {'digits': list(self.digits), 'unsafe': list(self.unsafe)}


def _check_digits(seq, what):
    checked = []
    for d in seq:
        if isinstance(d, bool) or not isinstance(d, numbers.Integral):
            raise InvalidDigit("%s digit %r is not an integer" % (what, d))
        if d < 0:
            raise InvalidDigit("%s digit %d is negative" % (what, d))
        checked.append(int(d))
    return tuple(checked)


def _minimal_period(period):
    p = len(period)
    for d in range(1, p + 1):
        if p % d == 0 and period == period[:d] * (p // d):
            return period[:d]
    return period


def _canonical(preperiod, period):
    if not period:
        while preperiod and preperiod[-1] == 0:
            preperiod = preperiod[:-1]
        return preperiod, ()
    if not any(period):
        raise AllZeroPeriod("the period (%s) has only zeros"
                            % ",".join(str(d) for d in period))
    period = _minimal_period(period)
    # fold trailing preperiod digits into the period; m stays >= 1
    while len(preperiod) > 1 and preperiod[-1] == period[-1]:
        period = (preperiod[-1],) + period[:-1]
        preperiod = preperiod[:-1]
    return preperiod, period


def parry_shift_violation(exp: ParryExpansion) -> Optional[int]:
    """
    Return the first shift j >= 2 whose tail t_j t_{j+1} ... is not strictly
    smaller than d(1), or None when the Parry condition holds.
    """
    horizon = exp.m + 2 * exp.p + 1
    reference = exp.digits(horizon)
    for j in range(2, exp.m + exp.p + 1):
        shifted = tuple(exp.digit(j + i) for i in range(horizon))
        if shifted >= reference:
            return j
    return None


def validate(preperiod: Sequence[int], period: Sequence[int] = ()) -> ParryExpansion:
    """
    Check and canonicalize digit data; return a ParryExpansion.

    Trailing zeros of a simple expansion are dropped, the period is cut
    to its minimal length and rotated until t_m != t_{m+p}.
    """
    preperiod = _check_digits(preperiod, 'preperiod')
    period = _check_digits(period, 'period')
    if not preperiod:
        raise ValidationError("the preperiod must not be empty")
    if preperiod[0] == 0:
        raise ZeroLeadDigit("t_1 must be at least 1")

    preperiod, period = _canonical(preperiod, period)
    exp = ParryExpansion(preperiod, period)
    if exp.is_simple and exp.preperiod == (1,):
        raise TrivialBase("d(1) = 1 gives beta = 1")

    j = parry_shift_violation(exp)
    if j is not None:
        raise ParryConditionViolated(j, exp.to_text())
    return exp


def parse_expansion(text: str) -> ParryExpansion:
    """ read "2(0,1)", "1,1" or "3,0,1(2,0)" and validate it """
    match = _TEXT_RE.match(text or "")
    if not match:
        raise ParseError("cannot read expansion %r; expected e.g. 2(0,1) or 1,1" % text)
    preperiod = [int(d) for d in match.group(1).split(",")]
    period = [int(d) for d in match.group(2).split(",")] if match.group(2) else []
    return validate(preperiod, period)


def _renyi_sum(exp, beta):
    """ sum of t_i beta^-i with the periodic tail as a geometric series """
    inv = 1 / beta
    total = mpf(0)
    power = mpf(1)
    for d in exp.preperiod:
        power *= inv
        total += d * power
    if exp.is_simple:
        return total
    tail = mpf(0)
    tail_power = mpf(1)
    for d in exp.period:
        tail_power *= inv
        tail += d * tail_power
    return total + power * tail / (1 - tail_power)


def beta_value(exp: ParryExpansion, tol: float = DEFAULT_TOL, dps: int = WORKING_DPS):
    """
    The Parry number of the expansion as an mpmath real, isolated by
    bisection on (1, t_1 + 1].
    """
    with workdps(dps):
        if exp.is_simple and exp.m == 1:
            return +mpf(exp.preperiod[0])

        lo = mpf(1)
        hi = mpf(exp.preperiod[0] + 1)
        if _renyi_sum(exp, hi) > 1:
            raise NoConvergence("no root bracketed in (1, %s] for %s" % (hi, exp))

        eps = mpf(10) ** (-dps + 5)
        steps = 0
        while hi - lo > eps:
            mid = (lo + hi) / 2
            if _renyi_sum(exp, mid) > 1:
                lo = mid
            else:
                hi = mid
            steps += 1
            if steps > 10 * dps:
                raise NoConvergence("bisection did not settle for %s" % exp)
        beta = (lo + hi) / 2
        residual = abs(1 - _renyi_sum(exp, beta))
        logger.debug("beta(%s) = %s after %d steps, residual %s",
                     exp, mp.nstr(beta, 20), steps, mp.nstr(residual, 5))
        if residual >= tol:
            raise NoConvergence("residual %s above tolerance %s for %s"
                                % (mp.nstr(residual, 5), tol, exp))
        return beta


def renyi_digits(beta, count: int, guard: float = DEFAULT_TOL,
                 dps: int = WORKING_DPS) -> RenyiDigits:
    """
    Iterate x -> beta x - floor(beta x) from x = 1 and collect the digits.

    A fractional part closer than guard to 0 or 1 is snapped to 0 and the
    digit is flagged UNSAFE.  An exact zero is trusted.
    """
    digits = []
    unsafe = []
    with workdps(dps):
        beta = mpf(beta)
        x = mpf(1)
        for _ in range(count):
            y = beta * x
            d = int(floor(y))
            frac = y - d
            flag = False
            if frac > 1 - guard:
                d += 1
                frac = mpf(0)
                flag = True
            elif 0 < frac < guard:
                frac = mpf(0)
                flag = True
            digits.append(d)
            unsafe.append(flag)
            x = frac
    return RenyiDigits(tuple(digits), tuple(unsafe))


def oplus(exp: ParryExpansion, k: int, l: int) -> int:
    """ the letter k (+) l: plain sum below m+p, wrapped into the period above """
    if exp.is_simple:
        raise SimpleExpansion("oplus needs a period")
    m, p = exp.m, exp.p
    if k + l < m + p:
        return k + l
    return m + (k + l - m) % p


def t_oplus(exp: ParryExpansion, k: int, l: int) -> int:
    """ the digit t_{k (+) l}, for k + l > 0 """
    if exp.is_simple:
        raise SimpleExpansion("t_oplus needs a period")
    if k + l <= 0:
        raise ValueError("t_oplus needs k + l > 0")
    m, p = exp.m, exp.p
    if k + l < m + p + 1:
        return exp.digit(k + l)
    return exp.digit(m + 1 + (k + l - m - 1) % p)


def _trailing_zeros(seq):
    count = 0
    for d in reversed(seq):
        if d != 0:
            break
        count += 1
    return count


def in_s_by_pattern(exp: ParryExpansion) -> bool:
    """
    Membership in S read off the digit pattern:
    (a) period 0...0 t_{m+p} with t_m > t_{m+p}, or
    (b) t_{m-qp} != 0 followed by qp-1 zeros before t_m, with t_m < t_{m+p}.
    """
    if exp.is_simple:
        raise SimpleExpansion("S is defined for non-simple expansions only")
    m, p = exp.m, exp.p
    t_m, t_mp = exp.digit(m), exp.digit(m + p)
    if t_m > t_mp:
        return not any(exp.period[:-1])
    q = 1
    while m - q * p >= 1:
        lead = m - q * p
        if exp.digit(lead) != 0 and not any(exp.digit(i) for i in range(lead + 1, m)):
            return True
        q += 1
    return False


def _k0(exp, t):
    m, p = exp.m, exp.p
    t1 = exp.digit(1)
    if t != t1 - 1:
        return -1
    if exp.digit(2) != exp.digit(m + 1):
        return 0
    # for l >= m both sides are p-periodic in l, so [m, m+p) decides boundedness
    if any(exp.digit(l + 1) != t_oplus(exp, m, l) for l in range(m, m + p)):
        return INFINITE
    found = [l for l in range(0, m) if exp.digit(l + 1) != t_oplus(exp, m, l)]
    if not found:
        return INFINITE
    return max(found)


def derive_params(exp: ParryExpansion) -> DerivedParams:
    m, p = exp.m, exp.p
    top = m + p - 1 if not exp.is_simple else m - 1
    z_table = {k: _trailing_zeros(exp.digits(k)) for k in range(1, top + 1)}

    if exp.digit(1) > 1:
        ell0 = 0
    else:
        ell0 = 1
        for i in range(2, m + 1):
            if exp.digit(i) != 0:
                break
            ell0 += 1

    if exp.is_simple:
        return DerivedParams(exp, z_table, ell0)

    y_table = {m: _trailing_zeros(exp.period)}
    for k in range(m + 1, m + p):
        y_table[k] = _trailing_zeros(exp.period + exp.period[:k - m])

    t_m, t_mp = exp.digit(m), exp.digit(m + p)
    t = min(t_m, t_mp)
    if t_m < t_mp:
        z_star = 1 + (z_table[m - 1] if m > 1 else 0)
    else:
        z_star = 1 + z_table[m + p - 1]

    in_s = z_star > 0 and z_star % p == 0
    by_pattern = in_s_by_pattern(exp)
    if in_s != by_pattern:
        # both readings of S must coincide on every valid expansion
        raise ValidationError("S-membership disagrees for %s: zStar=%d gives %s, "
                              "digit pattern gives %s" % (exp, z_star, in_s, by_pattern))

    return DerivedParams(exp, z_table, ell0, t, y_table, z_star, _k0(exp, t), in_s)


def gap_lengths(exp: ParryExpansion, tol: float = DEFAULT_TOL, dps: int = WORKING_DPS) -> List:
    """
    Thurston gaps Delta_i = sum_{k>=1} t_{k+i} beta^-k for i < m+p
    (i < m when simple).  Delta_0 is 1 up to tol.
    """
    beta = beta_value(exp, tol, dps)
    with workdps(dps):
        inv = 1 / beta
        if exp.is_simple:
            count = exp.m
            tail = mpf(0)
        else:
            count = exp.m + exp.p
            tail = mpf(0)
            tail_power = mpf(1)
            for d in exp.period:
                tail_power *= inv
                tail += d * tail_power
            tail = tail / (1 - tail_power)
        gaps = []
        for i in range(count):
            total = mpf(0)
            power = mpf(1)
            for k in range(1, count - i + 1):
                power *= inv
                total += exp.digit(i + k) * power
            gaps.append(total + power * tail)
    if abs(gaps[0] - 1) >= tol:
        raise NoConvergence("Delta_0 = %s differs from 1 for %s" % (gaps[0], exp))
    return gaps


def _admissible_digits(exp, state):
    """
    (digit, next state) pairs allowed after a prefix ending in state; the
    automaton state is the length of the longest suffix matching d*(1).
    """
    top = exp.digit(state + 1)
    moves = [(d, 0) for d in range(top)]
    if exp.is_simple:
        if state + 1 < exp.m:
            moves.append((top, state + 1))
    else:
        moves.append((top, oplus(exp, state, 1)))
    return moves


def admissible_state(exp: ParryExpansion, digits: Sequence[int]) -> Optional[int]:
    """ automaton state after reading an integer digit string, None if not admissible """
    state = 0
    for d in digits:
        for digit, nxt in _admissible_digits(exp, state):
            if digit == d:
                state = nxt
                break
        else:
            return None
    return state


def is_admissible(exp: ParryExpansion, digits: Sequence[int]) -> bool:
    return admissible_state(exp, digits) is not None


def _beta_integers_of_length(exp, length):
    """ admissible digit strings of the given length, no leading zero, increasing """
    def extend(prefix, state, remaining):
        if remaining == 0:
            yield prefix, state
            return
        for d, nxt in _admissible_digits(exp, state):
            if not prefix and d == 0:
                continue
            yield from extend(prefix + (d,), nxt, remaining - 1)

    if length == 0:
        yield (), 0
        return
    yield from extend((), 0, length)


def beta_integer_word(exp: ParryExpansion, count: int, tol: float = DEFAULT_TOL):
    """
    Index word of the gaps between the first count+1 non-negative
    beta-integers.  Each gap is named by the automaton state of the
    smaller integer and then checked numerically against Delta_state.
    """
    gaps = gap_lengths(exp, tol)
    beta = beta_value(exp, tol)
    integers = []
    length = 0
    while len(integers) < count + 1:
        for digits, state in _beta_integers_of_length(exp, length):
            integers.append((digits, state))
            if len(integers) == count + 1:
                break
        length += 1

    word = []
    with workdps(WORKING_DPS):
        values = []
        for digits, _ in integers:
            value = mpf(0)
            for d in digits:
                value = value * beta + d
            values.append(value)
        for i in range(count):
            state = integers[i][1]
            gap = values[i + 1] - values[i]
            if abs(gap - gaps[state]) > 1e-20 * max(1, values[i + 1]):
                raise PrecisionExhausted("gap after %s is %s, expected Delta_%d = %s"
                                         % (integers[i][0], mp.nstr(gap, 15), state,
                                            mp.nstr(gaps[state], 15)))
            word.append(state)
    return tuple(word)


def is_affine_family(exp: ParryExpansion) -> bool:
    """ d(1) = t_1 (0...0 (t_1 - 1))^omega with p-1 zeros """
    if exp.is_simple:
        return False
    t1 = exp.digit(1)
    return exp.m == 1 and exp.period == (0,) * (exp.p - 1) + (t1 - 1,)


def affine_polynomial(exp: ParryExpansion) -> Optional[List[int]]:
    """
    Coefficients, highest degree first, of x^{p+1} - t_1 x^p - x + 1 for
    the affine family; None for any other expansion.
    """
    if not is_affine_family(exp):
        return None
    p = exp.p
    coeffs = [0] * (p + 2)
    coeffs[0] += 1
    coeffs[1] -= exp.digit(1)
    coeffs[p] -= 1
    coeffs[p + 1] += 1
    return coeffs
