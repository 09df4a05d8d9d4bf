"""
The verification battery: every closed form held against the
brute-force index and the generic LS-graph machinery, one expansion at
a time.

Each item gets its own stabilized index.  Items may run in worker
processes; the report is always ordered by expansion text.
"""

import logging
from concurrent.futures import ProcessPoolExecutor

from PARRY.modules import ubeta
from PARRY.modules.factorlab import (
    build_index, delta_complexity, first_deviation, is_ab_maximal, stabilize,
    verify_connection, verify_difference_lemma)
from PARRY.modules.helperutilities import word_text
from PARRY.modules.lsgraph import (
    build_graph, check_assumption_A, check_assumption_B, infinite_branches)
from PARRY.modules.parrycore import (
    beta_value, beta_integer_word, parse_expansion, renyi_digits)
from PARRY.modules.parryerrors import NotLeftExtensions, ParryWordError
from PARRY.modules.substitution import canonical_substitution, fixed_point_prefix

logger = logging.getLogger('parryword.battery')

# closed forms a caller may replace, e.g. with a deliberately wrong one
CLOSED_FORMS = ('letter_extensions', 'gl_closed_form', 'branch_list')

ITEM_DEFAULTS = {'maxN': 30, 'depth': 50, 'budget': 2 ** 20, 'prefixLength': 16384,
                 'kMax': 3, 'searchLen': 8, 'witnessBudget': 100,
                 'roundTripDigits': 20, 'betaIntegers': 200}


class ItemReport(object):
    """ the check documents of one expansion, or the error that stopped it """

    def __init__(self, expansion, checks=None, error=None):
        self.expansion = expansion
        self.checks = checks if checks is not None else {}
        self.error = error

    @property
    def passed(self):
        return self.error is None and all(c['passed'] for c in self.checks.values())

    def failed_checks(self):
        return sorted(name for name, c in self.checks.items() if not c['passed'])

    def to_dict(self):
        doc = {'expansion': self.expansion, 'passed': self.passed, 'checks': self.checks}
        if self.error is not None:
            doc['error'] = self.error
        return doc


class BatteryReport(object):

    def __init__(self, items):
        self.items = items

    @property
    def passed(self):
        return all(item.passed for item in self.items)

    def to_dict(self):
        return {'passed': self.passed,
                'count': len(self.items),
                'failed': [item.expansion for item in self.items if not item.passed],
                'items': [item.to_dict() for item in self.items]}

    def to_text(self):
        lines = []
        for item in self.items:
            if item.passed:
                lines.append("PASS %s" % item.expansion)
            elif item.error is not None:
                lines.append("FAIL %s error: %s" % (item.expansion, item.error))
            else:
                lines.append("FAIL %s %s" % (item.expansion, " ".join(item.failed_checks())))
                for name in item.failed_checks():
                    for diff in item.checks[name].get('diff', []):
                        lines.append("    %s: %s" % (name, diff))
        lines.append("%d item(s), %d failed" % (len(self.items),
                                                sum(1 for i in self.items if not i.passed)))
        return "\n".join(lines)


def check_round_trip(exp, digits):
    """ the first digits of d(1) come back out of the numeric beta """
    recovered = renyi_digits(beta_value(exp), digits)
    expected = exp.digits(digits)
    bad = [i + 1 for i in recovered.safe_positions() if recovered.digits[i] != expected[i]]
    return {'passed': not bad, 'unsafe': sum(recovered.unsafe),
            'diff': ["digit %d is %d, expected %d" % (i, recovered.digits[i - 1], expected[i - 1])
                     for i in bad]}


def check_beta_integers(exp, count):
    word = beta_integer_word(exp, count)
    prefix = fixed_point_prefix(canonical_substitution(exp), 0, count).word
    first = next((i for i, (x, y) in enumerate(zip(word, prefix)) if x != y), None)
    doc = {'passed': first is None, 'count': count}
    if first is not None:
        doc['diff'] = ["gap word and fixed point differ at position %d (%d vs %d)"
                       % (first, word[first], prefix[first])]
    return doc


def check_letter_extensions(exp, index, closed_form):
    diff = []
    for k, ext in sorted(closed_form(exp).items()):
        oracle = index.left_extensions((k,))
        if ext != oracle:
            diff.append("Lext(%d): closed %s, index %s, missing %s, extra %s"
                        % (k, sorted(ext), sorted(oracle),
                           sorted(oracle - ext), sorted(ext - oracle)))
    return {'passed': not diff, 'diff': diff}


def check_gl_graph(exp, graph, closed_form):
    """ the closed f_L/g_L table on every vertex of the generic graph """
    table = closed_form(exp)
    diff = []
    for v in graph.vertices:
        entry = table.get(v)
        if entry is None:
            diff.append("vertex %s missing from the closed table" % (v,))
            continue
        if entry.label != graph.label(v):
            diff.append("f_L%s: closed %s, generic %s"
                        % (v, word_text(entry.label), word_text(graph.label(v))))
        if entry.target != graph.successor(v):
            diff.append("g_L%s: closed %s, generic %s" % (v, entry.target, graph.successor(v)))
    return {'passed': not diff, 'vertices': len(graph.vertices), 'diff': diff}


def check_branches(closed, generic):
    closed_keys = {b.key(): b for b in closed}
    generic_keys = {b.key(): b for b in generic}
    diff = []
    for key in sorted(set(closed_keys) - set(generic_keys)):
        diff.append("closed only: %s" % closed_keys[key].describe())
    for key in sorted(set(generic_keys) - set(closed_keys)):
        diff.append("generic only: %s" % generic_keys[key].describe())
    for key in sorted(set(closed_keys) & set(generic_keys)):
        c, g = closed_keys[key], generic_keys[key]
        if not c.extensions <= g.extensions:
            diff.append("%s: closed extensions %s not within %s"
                        % (c.describe(), sorted(c.extensions),
                           sorted(g.extensions)))
    return {'passed': not diff, 'count': len(closed), 'diff': diff}


def check_maximal(exp, sub, index, records):
    """
    Inside the index depth a predicted record must be confirmed.  A
    confirmed record nobody predicted is listed under beyondPrediction,
    and fails only for affine words, whose one maximal factor is the
    generator.  Every confirmation is repeated on an index over a prefix
    twice as long.
    """
    recheck = build_index(fixed_point_prefix(sub, 0, 2 * len(index)), index.max_n)
    affine = ubeta.affine_predicate(exp).affine
    gen = ubeta.generator(exp)
    diff, beyond, boundary = [], [], []
    for rec in records:
        name = "%s depth %d %s" % (rec.family, rec.depth, word_text(rec.factor))
        diff.extend("%s: %s" % (name, note) for note in rec.notes if 'differs' in note)
        if len(rec.factor) >= index.max_n:
            if rec.confirmed:
                diff.append("%s confirmed past the index depth %d" % (name, index.max_n))
            continue
        if rec.confirmed:
            try:
                again = is_ab_maximal(recheck, rec.factor, *rec.pair)
            except NotLeftExtensions:
                again = False
            if not again:
                diff.append("%s is not %s-maximal on %d letters" % (name, rec.pair, len(recheck)))
            if not rec.predicted:
                beyond.append(name)
                if affine and rec.factor != gen:
                    diff.append("%s is %s-maximal in an affine word" % (name, rec.pair))
        elif rec.predicted:
            if any('boundary depth' in note for note in rec.notes):
                boundary.append(name)
            else:
                diff.append("%s is predicted %s-maximal but not confirmed" % (name, rec.pair))
    return {'passed': not diff,
            'records': len(records),
            'confirmed': sum(1 for r in records if r.confirmed),
            'pastDepth': sum(1 for r in records if len(r.factor) >= index.max_n),
            'beyondPrediction': beyond,
            'boundaryUnconfirmed': boundary,
            'diff': diff}


def check_affine(exp, index, sub, item):
    """
    Affine words keep Delta C(n) at the slope for every indexed n; the
    others must deviate within the witness budget.
    """
    report = ubeta.affine_predicate(exp)
    if report.affine:
        bad = [n for n in range(1, index.max_n) if delta_complexity(index, n) != report.slope]
        return {'passed': not bad, 'affine': True,
                'diff': ["dC(%d) = %d, expected %d" % (n, delta_complexity(index, n), report.slope)
                         for n in bad]}
    found = first_deviation(index)
    if found is None and item['witnessBudget'] > index.max_n:
        logger.info("%s: no deviation up to %d, indexing up to %d",
                    exp, index.max_n, item['witnessBudget'])
        deep = stabilize(sub, 0, item['witnessBudget'], item['budget'], item['prefixLength'])
        found = first_deviation(deep)
    doc = {'passed': found is not None, 'affine': False, 'deviation': found}
    if found is None:
        doc['diff'] = ["no deviation of dC up to n = %d" % item['witnessBudget']]
    return doc


def _guard(checks, name, fn, *args):
    try:
        checks[name] = fn(*args)
    except ParryWordError as err:
        logger.warning("check %s failed with %s", name, err)
        checks[name] = {'passed': False, 'error': str(err), 'diff': [str(err)]}


def run_item(item, closed_forms=None):
    """ every applicable check for one battery item """
    item = dict(ITEM_DEFAULTS, **item)
    forms = {name: getattr(ubeta, name) for name in CLOSED_FORMS}
    forms.update(closed_forms or {})
    try:
        exp = parse_expansion(str(item['expansion']))
    except ParryWordError as err:
        return ItemReport(str(item['expansion']), error=str(err))
    report = ItemReport(exp.to_text())
    logger.info("battery item %s (maxN=%d, depth=%d)", exp, item['maxN'], item['depth'])

    sub = canonical_substitution(exp)
    try:
        index = stabilize(sub, 0, item['maxN'], item['budget'], item['prefixLength'])
    except ParryWordError as err:
        report.error = str(err)
        return report

    checks = report.checks
    _guard(checks, 'roundTrip', check_round_trip, exp, item['roundTripDigits'])
    _guard(checks, 'connection', _report_doc, verify_connection, index)
    _guard(checks, 'differenceLemma', _failure_doc, verify_difference_lemma, index)
    if item['betaIntegers']:
        _guard(checks, 'betaIntegers', check_beta_integers, exp, item['betaIntegers'])
    _guard(checks, 'affine', check_affine, exp, index, sub, item)
    if exp.is_simple:
        _guard(checks, 'simpleBounds', _report_doc, ubeta.simple_parry_checks, exp, index)
    else:
        _nonsimple_checks(checks, exp, sub, index, item, forms)

    if report.passed:
        logger.info("battery item %s passed %d checks", exp, len(checks))
    else:
        logger.warning("battery item %s failed: %s", exp, ", ".join(report.failed_checks()))
    return report


def _report_doc(fn, *args):
    doc = fn(*args).to_dict()
    doc.setdefault('diff', [])
    return doc


def _failure_doc(fn, *args):
    failures = fn(*args)
    return {'passed': not failures, 'diff': failures}


def _nonsimple_checks(checks, exp, sub, index, item, forms):
    _guard(checks, 'letterExtensions', check_letter_extensions,
           exp, index, forms['letter_extensions'])

    assumption_a = check_assumption_A(sub, index)
    checks['assumptionA'] = dict(assumption_a.to_dict(), passed=assumption_a.satisfied,
                                 diff=[v['reason'] for v in assumption_a.violations])
    witness = check_assumption_B(sub, index, item['searchLen'])
    checks['assumptionB'] = {'passed': witness is not None,
                             'witness': list(witness) if witness is not None else None,
                             'diff': [] if witness else ["no witness up to length %d"
                                                         % item['searchLen']]}
    try:
        graph = build_graph(sub, index)
    except ParryWordError as err:
        checks['glGraph'] = {'passed': False, 'error': str(err), 'diff': [str(err)]}
        return
    _guard(checks, 'glGraph', check_gl_graph, exp, graph, forms['gl_closed_form'])

    closed = forms['branch_list'](exp)
    try:
        generic = infinite_branches(sub, index, graph, item['searchLen'], item['depth'],
                                    budget=item['budget'])
        checks['branches'] = check_branches(closed, generic)
    except ParryWordError as err:
        checks['branches'] = {'passed': False, 'error': str(err), 'diff': [str(err)]}

    records = []
    try:
        records = ubeta.maximal_factors(exp, item['kMax'], index)
        checks['maximal'] = check_maximal(exp, sub, index, records)
    except ParryWordError as err:
        checks['maximal'] = {'passed': False, 'error': str(err), 'diff': [str(err)]}

    _guard(checks, 'inventory', check_inventory, exp, index, closed)
    _guard(checks, 'lcpLemma', _failure_doc, ubeta.lcp_lemma_check, exp)
    _guard(checks, 'compensation', _report_doc, ubeta.compensation_check, exp, index, records)


def check_inventory(exp, index, branches):
    doc = ubeta.ls_inventory(exp, index, branches).to_dict()
    doc['diff'] = ["LS factor %s is not covered" % word_text(v) for v in doc['uncovered']]
    return doc


def _run_packed(args):
    return run_item(*args)


def verify_battery(items, jobs=1, closed_forms=None):
    """
    Run every item, in jobs worker processes when jobs > 1.  Replacement
    closed forms must be picklable for jobs > 1.
    """
    unknown = set(closed_forms or {}) - set(CLOSED_FORMS)
    if unknown:
        raise ValueError("unknown closed forms: %s" % ", ".join(sorted(unknown)))
    work = [(item, closed_forms) for item in items]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_packed, work))
    else:
        reports = [_run_packed(w) for w in work]
    reports.sort(key=lambda r: r.expansion)
    return BatteryReport(reports)
