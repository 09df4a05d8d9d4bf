"""
Closed forms for the fixed point u_beta of the canonical substitution.

For non-simple Parry numbers the left extensions of letters, the
f_L/g_L tables, the list of infinite LS branches and the families of
(a,b)-maximal factors are known explicitly.  Each closed form here is
meant to be held against the brute-force index of factorlab and the
generic machinery of lsgraph.

Also here: the affine complexity criterion, the Sturmian/Arnoux-Rauzy
classification and the bounds for simple Parry numbers.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

from PARRY.modules.factorlab import (
    LanguageIndex, bilateral_order, complexity, delta_complexity, is_ab_maximal,
    special_factors)
from PARRY.modules.helperutilities import common_prefix, word_text
from PARRY.modules.lsgraph import BranchKind, BranchSpec, branch_prefix
from PARRY.modules.parrycore import (
    INFINITE, ParryExpansion, affine_polynomial, derive_params, is_affine_family,
    oplus, t_oplus)
from PARRY.modules.parryerrors import (
    NotLeftExtensions, OrderingHypothesisFails, OutOfRange, SeedNotFound, SimpleExpansion)
from PARRY.modules.substitution import (
    Word, canonical_substitution, power_image, power_word)

logger = logging.getLogger('parryword.ubeta')

DEFAULT_K_MAX = 6
INVENTORY_LENGTH = 40
# cap on max-f-image steps taken while their length is below the inventory length
CHAIN_STEPS = 64

Pair = Tuple[int, int]


def _pair(a, b) -> Pair:
    return (a, b) if a < b else (b, a)


def _require_nonsimple(exp, what):
    if exp.is_simple:
        raise SimpleExpansion("%s needs a non-simple expansion, got %s" % (what, exp))


def tail(exp: ParryExpansion, x: int, width: Optional[int] = None) -> Tuple[int, ...]:
    """
    t_{x(+)1} t_{x(+)2} ... cut to width terms; 2(m+p) terms order the
    tails of distinct letters.
    """
    width = width or 2 * (exp.m + exp.p)
    return tuple(t_oplus(exp, x, i) for i in range(1, width + 1))


def generator(exp: ParryExpansion) -> Word:
    """ 0^{t_1 - 1}, or 0 when t_1 = 1 """
    t1 = exp.digit(1)
    return (0,) * (t1 - 1) if t1 > 1 else (0,)


def letter_extensions(exp: ParryExpansion) -> Dict[int, FrozenSet[int]]:
    _require_nonsimple(exp, "letter_extensions")
    params = derive_params(exp)
    m, p = exp.m, exp.p
    ext = {0: frozenset(range(params.ell0, m + p))}
    for k in range(1, m):
        ext[k] = frozenset([params.z_table[k]])
    for k in range(m, m + p):
        ext[k] = frozenset([params.z_table[k], params.y_table[k]])
    return ext


@dataclass(frozen=True)
class GLEntry:
    pair: Pair
    label: Word
    orientation: Dict[int, int]

    @property
    def target(self) -> Pair:
        return _pair(*self.orientation.values())


@lru_cache(maxsize=64)
def _gl_table(exp: ParryExpansion) -> Dict[Pair, GLEntry]:
    params = derive_params(exp)
    m, p = exp.m, exp.p
    special = (m - 1, m + p - 1)
    table = {}
    for a, b in combinations(range(m + p), 2):
        if (a, b) == special:
            if exp.digit(m) < exp.digit(m + p):
                long_, short = m + p - 1, m - 1
            else:
                long_, short = m - 1, m + p - 1
            table[(a, b)] = GLEntry((a, b), (0,) * params.t + (m,),
                                    {long_: 0, short: params.z_star})
        else:
            table[(a, b)] = GLEntry((a, b), (), {a: oplus(exp, a, 1), b: oplus(exp, b, 1)})
    return table


def gl_closed_form(exp: ParryExpansion) -> Dict[Pair, GLEntry]:
    """
    f_L(k,l) = eps and g_L(k,l) = {k(+)1, l(+)1} except on the pair
    (m-1, m+p-1), whose label is 0^t m and whose successor is {0, zStar}.
    """
    _require_nonsimple(exp, "gl_closed_form")
    return dict(_gl_table(exp))


def _closed_cycle(exp, start: Pair, length: int) -> Tuple[Pair, ...]:
    table = _gl_table(exp)
    path = [start]
    for _ in range(length - 1):
        path.append(table[path[-1]].target)
    return tuple(path)


def branch_list(exp: ParryExpansion) -> List[BranchSpec]:
    """
    u_beta when p > 1, and when beta is in S the m branches
    phi^j(0^t m) phi^{m+j}(0^t m) phi^{2m+j}(0^t m) ..., j < m.
    """
    _require_nonsimple(exp, "branch_list")
    params = derive_params(exp)
    sub = canonical_substitution(exp)
    m, p = exp.m, exp.p
    branches = []
    if p > 1:
        period_letters = range(m, m + p)
        branches.append(BranchSpec(BranchKind.PERIODIC_POINT, 1, sub, frozenset(period_letters),
                                   seed=0, cycle_vertices=tuple(combinations(period_letters, 2))))
    if params.in_s:
        head = (0,) * params.t + (m,)
        for j in range(m):
            vertex = _pair(j, oplus(exp, params.z_star, j))
            branches.append(BranchSpec(BranchKind.EQUATION, m, sub, frozenset(vertex),
                                       prefix=power_word(sub, head, j), vertex=vertex,
                                       cycle_vertices=_closed_cycle(exp, vertex, m)))
    return sorted(branches, key=BranchSpec.key)


def f_R(exp: ParryExpansion, a: int, b: int) -> Word:
    """ longest common prefix of phi(a) and phi(b), always a block of zeros """
    sub = canonical_substitution(exp)
    return common_prefix(sub.image(a), sub.image(b))


@dataclass(frozen=True)
class BispecialSeed:
    """ a v c and b v d are both factors """
    v: Word
    a: int
    b: int
    c: int
    d: int

    def to_dict(self):
        return {'v': list(self.v), 'left': [self.a, self.b], 'right': [self.c, self.d]}


def _pick_right_pair(exp, right_a, right_b) -> Tuple[int, int]:
    """
    c in right_a and d in right_b with the greatest tails, c != d; ties
    between equal choices go to the smaller letter.
    """
    if not right_a or not right_b:
        raise SeedNotFound("no right extension to choose from (%s, %s)"
                           % (sorted(right_a), sorted(right_b)))
    rank_a = sorted(sorted(right_a), key=lambda x: tail(exp, x), reverse=True)
    rank_b = sorted(sorted(right_b), key=lambda x: tail(exp, x), reverse=True)
    if rank_a[0] != rank_b[0]:
        return rank_a[0], rank_b[0]
    options = []
    if len(rank_b) > 1:
        options.append((rank_a[0], rank_b[1]))
    if len(rank_a) > 1:
        options.append((rank_a[1], rank_b[0]))
    if not options:
        raise SeedNotFound("both sides only continue with %d" % rank_a[0])
    return max(options, key=lambda cd: (tail(exp, cd[0]), tail(exp, cd[1]), -cd[0], -cd[1]))


def max_f_image(exp: ParryExpansion, seed: BispecialSeed, index: LanguageIndex) -> BispecialSeed:
    """ f_L(a,b) phi(v) f_R(c',d') with c', d' chosen by the tail rule """
    v = tuple(seed.v)
    if not (index.contains((seed.a,) + v + (seed.c,)) and index.contains((seed.b,) + v + (seed.d,))):
        raise SeedNotFound("%d.%s.%d or %d.%s.%d is not a factor"
                           % (seed.a, word_text(v), seed.c, seed.b, word_text(v), seed.d))
    sub = canonical_substitution(exp)
    entry = _gl_table(exp)[_pair(seed.a, seed.b)]
    c, d = _pick_right_pair(exp, index.right_extensions((seed.a,) + v),
                            index.right_extensions((seed.b,) + v))
    img_c, img_d = sub.image(c), sub.image(d)
    lcp = common_prefix(img_c, img_d)
    return BispecialSeed(entry.label + sub.apply(v) + lcp,
                         entry.orientation[seed.a], entry.orientation[seed.b],
                         img_c[len(lcp)], img_d[len(lcp)])


def lcp_closed_form(exp: ParryExpansion, c: int, d: int, n: int) -> Word:
    """
    lcp(phi^n(c), phi^n(d)) as phi^n(k) without its last letter, k the
    letter of smaller tail.  Raises OrderingHypothesisFails when the
    direct lcp disagrees.
    """
    sub = canonical_substitution(exp)
    small = c if tail(exp, c) < tail(exp, d) else d
    closed = power_image(sub, small, n)[:-1]
    direct = common_prefix(power_image(sub, c, n), power_image(sub, d, n))
    if closed != direct:
        raise OrderingHypothesisFails("lcp of phi^%d(%d), phi^%d(%d) is %s, closed form gives %s"
                                      % (n, c, n, d, word_text(direct), word_text(closed)))
    return closed


def _closed_member(exp, gen, pair, c, d, k):
    """ s phi^k(gen) lcp(phi^k(c), phi^k(d)) and the oriented pair g_L^k(pair) """
    sub = canonical_substitution(exp)
    table = _gl_table(exp)
    a, b = pair
    labels = []
    for _ in range(k):
        entry = table[_pair(a, b)]
        labels.append(entry.label)
        a, b = entry.orientation[a], entry.orientation[b]
    s = []
    for j in range(k):
        s.extend(power_word(sub, labels[k - 1 - j], j))
    notes = []
    try:
        lcp = lcp_closed_form(exp, c, d, k)
    except OrderingHypothesisFails as err:
        logger.warning("%s; using the direct lcp", err)
        notes.append("ordering hypothesis fails at depth %d, direct lcp used" % k)
        lcp = common_prefix(power_image(sub, c, k), power_image(sub, d, k))
    return tuple(s) + power_word(sub, gen, k) + lcp, (a, b), notes


@dataclass(frozen=True)
class MaximalRecord:
    factor: Word
    pair: Pair
    depth: int
    generator: Word
    confirmed: bool
    family: str = ''
    predicted: bool = False
    notes: Tuple[str, ...] = ()

    def to_dict(self):
        return {'factor': list(self.factor),
                'length': len(self.factor),
                'pair': list(self.pair),
                'depth': self.depth,
                'generator': list(self.generator),
                'family': self.family,
                'predicted': self.predicted,
                'confirmed': self.confirmed,
                'notes': list(self.notes)}


def _is_maximal(index, v, a, b):
    """ (confirmed, note); words past the index depth stay unconfirmed """
    try:
        return is_ab_maximal(index, v, a, b), None
    except OutOfRange:
        return False, "longer than the index depth %d, not confirmed" % index.max_n
    except NotLeftExtensions:
        return False, None


def max_f_chain(exp: ParryExpansion, gen: Word, pair: Pair, k_max: int,
                index: LanguageIndex) -> List[MaximalRecord]:
    """
    The 0th to k_max-th max-f-images of gen with left letters pair,
    built step by step on the index and checked against the closed form.
    The chain stops early when a step cannot be found in the index.
    """
    gen = tuple(gen)
    a, b = pair
    c, d = _pick_right_pair(exp, index.right_extensions((a,) + gen),
                            index.right_extensions((b,) + gen))
    seed = BispecialSeed(gen, a, b, c, d)
    records = []
    for k in range(k_max + 1):
        if k:
            try:
                seed = max_f_image(exp, seed, index)
            except SeedNotFound as err:
                logger.info("chain of %s from %s stops at depth %d: %s",
                            word_text(gen), pair, k, err)
                break
        closed, closed_pair, notes = _closed_member(exp, gen, pair, c, d, k)
        if closed != seed.v or _pair(*closed_pair) != _pair(seed.a, seed.b):
            notes.append("closed form %s differs from the iterated image" % word_text(closed))
        confirmed, note = _is_maximal(index, seed.v, seed.a, seed.b)
        if note:
            notes.append(note)
        records.append(MaximalRecord(seed.v, _pair(seed.a, seed.b), k, gen, confirmed,
                                     notes=tuple(notes)))
    return records


def kth_max_f_image(exp: ParryExpansion, gen: Word, pair: Pair, k: int,
                    index: LanguageIndex) -> MaximalRecord:
    _require_nonsimple(exp, "kth_max_f_image")
    chain = max_f_chain(exp, gen, pair, k, index)
    if len(chain) <= k:
        raise SeedNotFound("the %d-th max-f-image of %s is beyond the index"
                           % (k, word_text(gen)))
    return chain[k]


def the_max_factor(exp: ParryExpansion) -> Word:
    """ 0^t m phi^m(0^{t_1 - 1}) phi^m(1) without its last letter """
    _require_nonsimple(exp, "the_max_factor")
    params = derive_params(exp)
    sub = canonical_substitution(exp)
    m = exp.m
    return ((0,) * params.t + (m,) + power_word(sub, (0,) * (exp.digit(1) - 1), m)
            + power_image(sub, 1, m)[:-1])


def _families(exp):
    """ (family, generator, start pair, predicted(k) -> (bool, note)) """
    params = derive_params(exp)
    m, q = exp.m, exp.m + exp.p
    z, k0 = params.z_star, params.k0
    gen = generator(exp)
    families = []
    if exp.digit(1) > 1:
        for a in range(1, q):
            if a != z:
                families.append(('generator 0-%d' % a, gen, (0, a), lambda k: (k < m, None)))
        families.append(('generator 0-z', gen, (0, z),
                         lambda k: (k0 != INFINITE and k0 < k < m, None)))
    else:
        l0 = params.ell0
        for a in range(l0 + 1, q):
            if a != z and a + l0 < q:
                families.append(('generator %d-%d' % (l0, a + l0), gen, (l0, a + l0),
                                 lambda k: (k < m - l0, None)))
        if z + l0 < q:
            def predicted(k):
                if k0 == INFINITE or k0 < l0 or k < k0 - l0 or k > m - l0:
                    return False, None
                if k in (k0 - l0, m - l0):
                    return True, "boundary depth of the %d-z family" % l0
                return True, None
            families.append(('generator %d-z' % l0, gen, (l0, z + l0), predicted))
    if not is_affine_family(exp):
        families.append(('0^t m', the_max_factor(exp), (0, z), lambda k: (True, None)))
    return families


def maximal_factors(exp: ParryExpansion, k_max: int, index: LanguageIndex) -> List[MaximalRecord]:
    """
    Chains of max-f-images for every family the corollaries describe.
    `predicted` is what the closed forms say, `confirmed` what the index
    says.  Only factors shorter than the index depth can be confirmed.
    The 0^t m family is absent for the affine expansions.
    """
    _require_nonsimple(exp, "maximal_factors")
    records = []
    for family, gen, (a, b), predicted in _families(exp):
        lext = index.left_extensions(gen)
        if a not in lext or b not in lext:
            logger.debug("%s: %d, %d are not left extensions of %s", family, a, b, word_text(gen))
            continue
        try:
            chain = max_f_chain(exp, gen, (a, b), k_max, index)
        except SeedNotFound as err:
            logger.info("%s: no chain (%s)", family, err)
            continue
        for rec in chain:
            flag, note = predicted(rec.depth)
            notes = rec.notes + ((note,) if note else ())
            records.append(replace(rec, family=family, predicted=flag, notes=notes))
    unconfirmed = [r for r in records
                   if r.predicted and not r.confirmed and len(r.factor) < index.max_n]
    if unconfirmed:
        logger.warning("%s: %d predicted maximal factor(s) not confirmed by the index",
                       exp, len(unconfirmed))
    return records


def _chain_prefixes(exp, gen, pair, index, length):
    """
    Prefixes (cut to length) of every max-f-image of gen.  Once a member
    is longer than length, the next prefix only depends on the current
    prefix and pair, so the walk stops when that state repeats.
    """
    prefixes = set()
    a, b = pair
    try:
        c, d = _pick_right_pair(exp, index.right_extensions((a,) + gen),
                                index.right_extensions((b,) + gen))
    except SeedNotFound:
        return prefixes
    seed = BispecialSeed(tuple(gen), a, b, c, d)
    for _ in range(CHAIN_STEPS):
        prefixes.add(seed.v[:length])
        if len(seed.v) > length:
            break
        try:
            seed = max_f_image(exp, seed, index)
        except SeedNotFound:
            return prefixes
    else:
        return prefixes

    sub = canonical_substitution(exp)
    table = _gl_table(exp)
    state = (seed.a, seed.b, seed.v[:length])
    seen = set()
    while state not in seen:
        seen.add(state)
        a, b, word = state
        entry = table[_pair(a, b)]
        word = (entry.label + sub.apply(word))[:length]
        prefixes.add(word)
        state = (entry.orientation[a], entry.orientation[b], word)
    return prefixes


@dataclass
class InventoryReport:
    length: int
    checked: int
    uncovered: List[Word]

    @property
    def passed(self):
        return not self.uncovered

    def to_dict(self):
        return {'passed': self.passed, 'length': self.length, 'checked': self.checked,
                'uncovered': [list(v) for v in self.uncovered]}


def ls_inventory(exp: ParryExpansion, index: LanguageIndex, branches: List[BranchSpec],
                 length: Optional[int] = None) -> InventoryReport:
    """
    Every LS factor up to length is a prefix of a branch or of some
    max-f-image of the generator; the report lists those that are not.
    """
    _require_nonsimple(exp, "ls_inventory")
    length = min(length or INVENTORY_LENGTH, index.max_n - 1)
    gen = generator(exp)
    words = set()
    for pair in combinations(sorted(index.left_extensions(gen)), 2):
        words |= _chain_prefixes(exp, gen, pair, index, length)
    if not is_affine_family(exp):
        z = derive_params(exp).z_star
        words |= _chain_prefixes(exp, the_max_factor(exp), (0, z), index, length)
    for spec in branches:
        words.add(branch_prefix(spec.substitution, spec, length))
    covered = {w[:n] for w in words for n in range(1, len(w) + 1)}

    checked = 0
    uncovered = []
    for n in range(1, length + 1):
        for v, _ in special_factors(index, n):
            checked += 1
            if v not in covered:
                uncovered.append(v)
    if uncovered:
        logger.warning("%s: %d LS factor(s) up to length %d not covered, first %s",
                       exp, len(uncovered), length, word_text(uncovered[0]))
    return InventoryReport(length, checked, uncovered)


def lcp_lemma_check(exp: ParryExpansion, n_max: int = 6) -> List[dict]:
    """
    For k != l with tail(l) > tail(k): lcp(phi^n(k), phi^n(l)) is
    phi^n(k) minus its last letter, n <= n_max.  Returns the failures.
    """
    _require_nonsimple(exp, "lcp_lemma_check")
    sub = canonical_substitution(exp)
    failures = []
    for k in range(exp.alphabet_size):
        for l in range(exp.alphabet_size):
            if k == l or tail(exp, l) < tail(exp, k):
                continue
            for n in range(n_max + 1):
                direct = common_prefix(power_image(sub, k, n), power_image(sub, l, n))
                if direct != power_image(sub, k, n)[:-1]:
                    failures.append({'k': k, 'l': l, 'n': n, 'lcp': list(direct)})
    return failures


@dataclass
class CompensationReport:
    affine: bool
    rows: List[dict]

    @property
    def passed(self):
        return all(r['identity'] for r in self.rows) and \
            (not self.affine or all(r['compensated'] for r in self.rows))

    def to_dict(self):
        return {'passed': self.passed, 'affine': self.affine, 'rows': self.rows}


def compensation_check(exp: ParryExpansion, index: LanguageIndex,
                       records: List[MaximalRecord]) -> CompensationReport:
    """
    At each length carrying a confirmed maximal factor, the bilateral
    orders of that length sum to Delta C(n+1) - Delta C(n); for affine
    words the weak orders are cancelled by strong ones.
    """
    affine = affine_predicate(exp).affine
    rows = []
    lengths = sorted({len(r.factor) for r in records
                      if r.confirmed and len(r.factor) < index.max_n - 1})
    for n in lengths:
        orders = [bilateral_order(index, v) for v, rec in index.items(n)
                  if len(rec.left) >= 2 and len(rec.right) >= 2]
        weak = sum(o for o in orders if o < 0)
        strong = sum(o for o in orders if o > 0)
        change = delta_complexity(index, n + 1) - delta_complexity(index, n)
        rows.append({'n': n, 'weak': weak, 'strong': strong, 'change': change,
                     'identity': weak + strong == change,
                     'compensated': weak + strong == 0})
    return CompensationReport(affine, rows)


def _simple_affine_condition(exp):
    """ t_m = 1 and every rotation t_i..t_{m-1} t_1..t_{i-1} is <= t_1..t_{m-1} """
    m = exp.m
    digits = exp.digits(m)
    if digits[-1] != 1:
        return False
    base = digits[:m - 1]
    return all(base[i - 1:] + base[:i - 1] <= base for i in range(2, m))


@dataclass(frozen=True)
class AffineReport:
    expansion: ParryExpansion
    affine: bool
    slope: int

    def predicted(self, n: int) -> Optional[int]:
        return self.slope * n + 1 if self.affine else None

    @property
    def formula(self) -> Optional[str]:
        if not self.affine:
            return None
        return "n+1" if self.slope == 1 else "%dn+1" % self.slope

    def to_dict(self):
        return {'expansion': self.expansion.to_text(),
                'affine': self.affine,
                'complexity': self.formula,
                'polynomial': affine_polynomial(self.expansion)}


def affine_predicate(exp: ParryExpansion) -> AffineReport:
    """
    Non-simple: affine exactly for t_1 (0...0 (t_1 - 1))^omega, with
    C(n) = pn + 1.  Simple: the rotation condition, with C(n) = (m-1)n + 1.
    """
    if exp.is_simple:
        return AffineReport(exp, _simple_affine_condition(exp), exp.m - 1)
    return AffineReport(exp, is_affine_family(exp), exp.p)


class WordClass(Enum):
    STURMIAN = 'STURMIAN'
    ARNOUX_RAUZY = 'ARNOUX_RAUZY'
    AFFINE_OTHER = 'AFFINE_OTHER'
    GENERAL = 'GENERAL'


@dataclass(frozen=True)
class Classification:
    kind: WordClass
    order: Optional[int] = None

    def __str__(self):
        if self.kind is WordClass.ARNOUX_RAUZY:
            return "%s(%d)" % (self.kind.value, self.order)
        return self.kind.value

    def to_dict(self):
        doc = {'class': self.kind.value}
        if self.order is not None:
            doc['order'] = self.order
        return doc


def classify_word(exp: ParryExpansion) -> Classification:
    t1 = exp.digit(1)
    if exp.is_simple:
        m = exp.m
        digits = exp.digits(m)
        if m == 2 and digits[1] == 1:
            return Classification(WordClass.STURMIAN, 2)
        if m >= 3 and digits[-1] == 1 and all(d == t1 for d in digits[:-1]):
            return Classification(WordClass.ARNOUX_RAUZY, m)
    elif exp.m == 1 and exp.period == (t1 - 1,):
        return Classification(WordClass.STURMIAN, 2)
    if affine_predicate(exp).affine:
        return Classification(WordClass.AFFINE_OTHER)
    return Classification(WordClass.GENERAL)


@dataclass
class SimpleReport:
    rows: List[Tuple[int, int, int, int]]
    bound_violations: List[int]
    affine_condition: bool
    affine_violations: List[int] = field(default_factory=list)

    @property
    def passed(self):
        return not self.bound_violations and not self.affine_violations

    def to_dict(self):
        return {'passed': self.passed,
                'affineCondition': self.affine_condition,
                'boundViolations': self.bound_violations,
                'affineViolations': self.affine_violations,
                'rows': [{'n': n, 'C': c, 'lower': lo, 'upper': hi} for n, c, lo, hi in self.rows]}


def simple_parry_checks(exp: ParryExpansion, index: LanguageIndex) -> SimpleReport:
    """ (m-1)n+1 <= C(n) <= mn, and C(n) = (m-1)n+1 under the rotation condition """
    if not exp.is_simple:
        raise ValueError("simple_parry_checks needs a simple expansion, got %s" % exp)
    m = exp.m
    rows, bad = [], []
    for n in range(1, index.max_n + 1):
        c = complexity(index, n)
        lower, upper = (m - 1) * n + 1, m * n
        rows.append((n, c, lower, upper))
        if not lower <= c <= upper:
            bad.append(n)
    affine = _simple_affine_condition(exp)
    report = SimpleReport(rows, bad, affine)
    if affine:
        report.affine_violations = [n for n, c, lower, _ in rows if c != lower]
    return report
