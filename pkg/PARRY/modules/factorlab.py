"""
Brute-force factor index of a finite prefix.

Every factor of length 0..maxN is stored with its left and right
extension sets.  Extensions only come from occurrences that are not
truncated by the prefix boundary: an occurrence at offset 0 has no left
letter, one ending at the last position has no right letter.  Such
occurrences flag the factor as boundary incomplete.

stabilize() grows fixed-point prefixes until the table stops changing;
the resulting index is the oracle the closed forms are tested against.
"""

import logging
from collections import Counter, defaultdict, namedtuple

from PARRY.modules.helperutilities import word_text
from PARRY.modules.parryerrors import (
    BudgetExceeded, NotLeftExtensions, OutOfRange, PrefixTooShort)
from PARRY.modules.substitution import fixed_point_prefix, parse_substitution

logger = logging.getLogger('parryword.factorlab')

DEFAULT_BUDGET = 2 ** 20

FactorRecord = namedtuple('FactorRecord',
                          'left right occurrences boundary_incomplete interior')


def _key(word):
    return bytes(word)


class LanguageIndex(object):
    """
    Factor table of a WordPrefix for lengths up to max_n.  Immutable
    once built.
    """

    def __init__(self, source, max_n, tables):
        self.source = source
        self.max_n = max_n
        self._text = source.letters
        self._tables = tables

    def __len__(self):
        return len(self._text)

    @property
    def alphabet(self):
        return self._tables[0][b""].left

    def factors(self, n):
        self._check_length(n, inclusive=True)
        return sorted(tuple(f) for f in self._tables[n])

    def record(self, word):
        key = _key(word)
        if len(key) > self.max_n:
            return self._deep_record(key)
        return self._tables[len(key)].get(key)

    def contains(self, word):
        return self.record(word) is not None

    def left_extensions(self, word):
        rec = self.record(word)
        return rec.left if rec else frozenset()

    def right_extensions(self, word):
        rec = self.record(word)
        return rec.right if rec else frozenset()

    def items(self, n):
        """ (factor, record) pairs of length n in lexicographic order """
        self._check_length(n, inclusive=True)
        for key in sorted(self._tables[n]):
            yield tuple(key), self._tables[n][key]

    def signature(self):
        return tuple(frozenset((f, r.left, r.right) for f, r in table.items())
                     for table in self._tables)

    def interior_complete(self):
        """ every factor shorter than max_n has an occurrence away from both ends """
        return all(rec.interior for table in self._tables[:self.max_n]
                   for rec in table.values())

    def _check_length(self, n, inclusive=False):
        top = self.max_n if inclusive else self.max_n - 1
        if not 0 <= n <= top:
            raise OutOfRange("length %d outside 0..%d for this index" % (n, top))

    def _deep_record(self, key):
        # words longer than max_n are looked up in the prefix itself,
        # extensions from interior occurrences only
        text = self._text
        size = len(key)
        left, right = set(), set()
        count = 0
        boundary = interior = False
        pos = text.find(key)
        while pos != -1:
            count += 1
            if pos > 0 and pos + size < len(text):
                left.add(text[pos - 1])
                right.add(text[pos + size])
                interior = True
            else:
                boundary = True
            pos = text.find(key, pos + 1)
        if not count:
            return None
        return FactorRecord(frozenset(left), frozenset(right), count, boundary, interior)


def build_index(prefix, max_n):
    """
    Index all factors of length <= max_n of the prefix.  Each length is
    one pass over the windows a.v.c of length n+2 plus the two boundary
    occurrences.
    """
    text = prefix.letters
    size = len(text)
    if size <= max_n:
        raise PrefixTooShort("prefix of %d letters cannot index factors of length %d"
                             % (size, max_n))
    letters = frozenset(text)
    tables = [{b"": FactorRecord(letters, letters, size + 1, False, True)}]

    for n in range(1, max_n + 1):
        windows = Counter(text[i:i + n + 2] for i in range(size - n - 1))
        left = defaultdict(set)
        right = defaultdict(set)
        occurrences = Counter()
        for window, count in windows.items():
            v = window[1:-1]
            left[v].add(window[0])
            right[v].add(window[-1])
            occurrences[v] += count
        interior = set(occurrences)

        head = text[:n]
        occurrences[head] += 1
        right[head].add(text[n])
        tail = text[size - n:]
        occurrences[tail] += 1
        left[tail].add(text[size - n - 1])

        tables.append({v: FactorRecord(frozenset(left[v]), frozenset(right[v]), occurrences[v],
                                       v in (head, tail), v in interior)
                       for v in occurrences})
    return LanguageIndex(prefix, max_n, tables)


def stabilize(sub, seed, max_n, budget=DEFAULT_BUDGET,
              min_length=0):
    """
    Double the fixed-point prefix until two consecutive indexes agree on
    every factor and both extension sets, and every factor shorter than
    max_n occurs away from the prefix ends.
    """
    length = max(64, 4 * (max_n + 2), min_length)
    if length > budget:
        raise BudgetExceeded("initial prefix of %d letters is above the budget %d" % (length, budget))
    previous = build_index(fixed_point_prefix(sub, seed, length), max_n)
    while True:
        length *= 2
        if length > budget:
            raise BudgetExceeded("index of %s at %d did not stabilize for max_n=%d within %d letters"
                                 % (sub, seed, max_n, budget))
        current = build_index(fixed_point_prefix(sub, seed, length), max_n)
        if current.signature() == previous.signature() and current.interior_complete():
            logger.info("index of %s stabilized at %d letters (max_n=%d)", sub, length, max_n)
            return current
        logger.debug("index of %s still moving at %d letters", sub, length)
        previous = current


def _extension_sets(records):
    return {w: (r.left, r.right) if r else None for w, r in records.items()}


def deep_records(index, words, budget=DEFAULT_BUDGET):
    """
    Records of words, those longer than max_n read from regrown
    fixed-point prefixes.  The prefix doubles from twice the indexed one
    until two consecutive prefixes give every long word the same
    extension sets and each long factor occurs away from both ends.
    """
    words = [tuple(w) for w in words]
    records = {w: index.record(w) for w in words if len(w) <= index.max_n}
    deep = sorted(set(w for w in words if len(w) > index.max_n))
    if not deep:
        return records
    source = index.source.provenance
    sub = parse_substitution(source.substitution)
    length = 2 * len(index)
    previous = None
    while True:
        if length > budget:
            raise BudgetExceeded("%d word(s) up to length %d of %s did not stabilize within %d letters"
                                 % (len(deep), len(deep[-1]), sub, budget))
        grown = LanguageIndex(fixed_point_prefix(sub, source.seed, length), index.max_n,
                              index._tables)
        current = {w: grown.record(w) for w in deep}
        settled = all(r is None or r.interior for r in current.values())
        if settled and previous is not None and _extension_sets(current) == _extension_sets(previous):
            logger.info("%d long word(s) of %s settled at %d letters", len(deep), sub, length)
            records.update(current)
            return records
        previous = current
        length *= 2


def complexity(index, n):
    index._check_length(n, inclusive=True)
    return len(index._tables[n])


def delta_complexity(index, n):
    index._check_length(n)
    return complexity(index, n + 1) - complexity(index, n)


def special_factors(index, n, side='left'):
    """ factors of length n with at least two extensions on the given side """
    index._check_length(n)
    found = []
    for factor, rec in index.items(n):
        ext = rec.left if side == 'left' else rec.right
        if len(ext) >= 2:
            found.append((factor, ext))
    return found


def is_ab_maximal(index, v, a, b):
    """
    No right extension is shared by av and bv.  av must lie within the
    index depth: an absent extension proves nothing in the raw prefix.
    """
    v = tuple(v)
    if len(v) + 1 > index.max_n:
        raise OutOfRange("%s has length %d; maximality is decided up to length %d"
                         % (word_text(v), len(v), index.max_n - 1))
    lext = index.left_extensions(v)
    if a == b or a not in lext or b not in lext:
        raise NotLeftExtensions("%s and %s are not two left extensions of %s (Lext=%s)"
                                % (a, b, v, sorted(lext)))
    return not (index.right_extensions((a,) + v) & index.right_extensions((b,) + v))


def bispecials(index, n):
    """
    LS factors of length n with every quadruple (a, b, c, d), a < b, such
    that avc and bvd are both factors.
    """
    index._check_length(n)
    found = []
    for v, rec in index.items(n):
        if len(rec.left) < 2:
            continue
        rights = {a: index.right_extensions((a,) + v) for a in rec.left}
        quads = []
        for a in sorted(rec.left):
            for b in sorted(rec.left):
                if a < b:
                    quads.extend((a, b, c, d) for c in sorted(rights[a]) for d in sorted(rights[b]))
        if quads:
            found.append((v, tuple(quads)))
    return found


def bilateral_order(index, v):
    """ #{(a,c) : avc factor} - #Lext(v) - #Rext(v) + 1 """
    v = tuple(v)
    lext = index.left_extensions(v)
    pairs = sum(len(index.right_extensions((a,) + v)) for a in lext)
    return pairs - len(lext) - len(index.right_extensions(v)) + 1


def strong_bispecials(index, n):
    """ factors of length n with positive bilateral order """
    index._check_length(n)
    found = []
    for v, rec in index.items(n):
        if len(rec.left) >= 2 and len(rec.right) >= 2:
            order = bilateral_order(index, v)
            if order > 0:
                found.append((v, order))
    return found


def maximal_pairs(index, v):
    """ all pairs (a, b), a < b, for which v is (a,b)-maximal """
    v = tuple(v)
    lext = sorted(index.left_extensions(v))
    return [(a, b) for i, a in enumerate(lext) for b in lext[i + 1:]
            if is_ab_maximal(index, v, a, b)]


class ConnectionReport(object):
    """ (n, Delta C(n), sum over LS factors) rows and the ones that differ """

    def __init__(self, rows, violations):
        self.rows = rows
        self.violations = violations

    @property
    def passed(self):
        return not self.violations

    def to_dict(self):
        return {'passed': self.passed,
                'checked': len(self.rows),
                'violations': [{'n': n, 'dC': d, 'sum': s} for n, d, s in self.violations]}


def verify_connection(index):
    """ Delta C(n) against the sum over LS factors of (#Lext - 1), n < max_n """
    rows, violations = [], []
    for n in range(index.max_n):
        total = sum(len(ext) - 1 for _, ext in special_factors(index, n, 'left'))
        row = (n, delta_complexity(index, n), total)
        rows.append(row)
        if row[1] != row[2]:
            violations.append(row)
    if violations:
        logger.warning("connection formula fails at n=%s", [v[0] for v in violations])
    return ConnectionReport(rows, violations)


def verify_difference_lemma(index):
    """
    Where Delta C drops some factor of that length is (a,b)-maximal; where
    it rises some factor of that length is strong bispecial.  Returns the
    lengths where this fails.
    """
    failures = []
    for n in range(index.max_n - 1):
        d0, d1 = delta_complexity(index, n), delta_complexity(index, n + 1)
        if d1 < d0 and not any(maximal_pairs(index, v) for v, _ in special_factors(index, n)):
            failures.append({'n': n, 'change': d1 - d0, 'missing': 'maximal factor'})
        if d1 > d0 and not strong_bispecials(index, n):
            failures.append({'n': n, 'change': d1 - d0, 'missing': 'strong bispecial'})
    return failures


def complexity_rows(index):
    """ (n, C(n), dC(n), #LS(n), #RS(n)); the last three are None at n = max_n """
    rows = []
    for n in range(index.max_n + 1):
        if n < index.max_n:
            rows.append((n, complexity(index, n), delta_complexity(index, n),
                         len(special_factors(index, n, 'left')),
                         len(special_factors(index, n, 'right'))))
        else:
            rows.append((n, complexity(index, n), None, None, None))
    return rows


def first_deviation(index):
    """ least n >= 1 with Delta C(n) != Delta C(1), None inside the index depth """
    if index.max_n < 2:
        return None
    base = delta_complexity(index, 1)
    for n in range(2, index.max_n):
        if delta_complexity(index, n) != base:
            return n
    return None
