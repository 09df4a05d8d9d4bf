"""
The left-special graph of a substitution and the infinite LS branches
derived from its cycles.

Vertices are unordered pairs of letters (stored as sorted tuples) whose
right extensions meet.  From every vertex (a,b) leaves one edge towards
the pair g_L(a,b), labelled by f_L(a,b), the longest common suffix of
phi(a) and phi(b).  Everything that depends on the language of the
fixed point (extension sets, Assumption A case (ii), branch checks) is
read from a stabilized LanguageIndex.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from PARRY.modules.factorlab import DEFAULT_BUDGET, deep_records
from PARRY.modules.helperutilities import common_suffix, word_text
from PARRY.modules.parryerrors import (
    AssumptionAViolated, AssumptionBUnknown, PairNotCoextendable)
from PARRY.modules.substitution import (
    Substitution, Word, fixed_point_prefix, is_injective, periodic_points, power_word)

logger = logging.getLogger('parryword.lsgraph')

DEFAULT_SEARCH_LEN = 8

Pair = Tuple[int, int]


def _pair(a, b):
    return (a, b) if a < b else (b, a)


def f_L(sub, a, b):
    """ longest common suffix of phi(a) and phi(b) """
    return common_suffix(sub.image(a), sub.image(b))


@dataclass(frozen=True)
class GLDetail:
    """
    How g_L(a,b) was obtained.  orientation maps each of a and b to the
    letters that take its place in front of the f-image.
    """
    pair: Pair
    case: str
    label: Word
    orientation: Dict[int, FrozenSet[int]]
    d: Optional[int] = None
    c_set: FrozenSet[int] = frozenset()

    @property
    def letters(self):
        out = frozenset()
        for letters in self.orientation.values():
            out |= letters
        return out


def coextendable(index, a, b):
    return bool(index.right_extensions((a,)) & index.right_extensions((b,)))


def g_l_detail(sub, index, a, b):
    if a == b:
        raise PairNotCoextendable("g_L needs two distinct letters, got %d twice" % a)
    if not coextendable(index, a, b):
        raise PairNotCoextendable("Rext(%d) and Rext(%d) are disjoint" % (a, b))
    ia, ib = sub.image(a), sub.image(b)
    label = common_suffix(ia, ib)
    cut = len(label)

    if cut < len(ia) and cut < len(ib):
        return GLDetail(_pair(a, b), 'i', label,
                        {a: frozenset([ia[-cut - 1]]), b: frozenset([ib[-cut - 1]])})
    if len(ia) == len(ib):
        # phi(a) == phi(b); nothing can be prepended
        return GLDetail(_pair(a, b), 'degenerate', label, {a: frozenset(), b: frozenset()})

    short, long_ = (a, b) if len(ia) < len(ib) else (b, a)
    long_image = sub.image(long_)
    d = long_image[-cut - 1]
    target = index.right_extensions((long_,))
    c_set = frozenset(c for c in index.left_extensions((short,))
                      if index.right_extensions((c, short)) & target)
    lasts = frozenset(sub.image(c)[-1] for c in c_set)
    return GLDetail(_pair(a, b), 'ii', label, {long_: frozenset([d]), short: lasts}, d, c_set)


def g_L(sub, index, a, b):
    return g_l_detail(sub, index, a, b).letters


def coextendable_pairs(index):
    return [(a, b) for a, b in combinations(sorted(index.alphabet), 2)
            if coextendable(index, a, b)]


@dataclass
class AssumptionAReport:
    injective: bool
    checked: List[Pair]
    violations: List[dict]

    @property
    def satisfied(self):
        return self.injective and not self.violations

    def to_dict(self):
        return {'satisfied': self.satisfied,
                'injective': self.injective,
                'checked': [list(p) for p in self.checked],
                'violations': self.violations}


def check_assumption_A(sub, index):
    """
    #g_L(a,b) = 2 on every coextendable pair, and in case (ii) the letter
    d differs from every last letter of phi(c).
    """
    injective = is_injective(sub)
    checked = coextendable_pairs(index)
    violations = []
    for a, b in checked:
        detail = g_l_detail(sub, index, a, b)
        size = len(detail.letters)
        if size != 2:
            violations.append({'pair': [a, b], 'case': detail.case,
                               'reason': '#g_L = %d' % size,
                               'gL': sorted(detail.letters)})
        elif detail.case == 'ii' and any(sub.image(c)[-1] == detail.d for c in detail.c_set):
            violations.append({'pair': [a, b], 'case': 'ii',
                               'reason': 'd=%d is the last letter of some phi(c)' % detail.d,
                               'gL': sorted(detail.letters)})
    if not injective:
        logger.warning("%s is not injective", sub)
    for v in violations:
        logger.warning("Assumption A fails for %s at %s: %s", sub, v['pair'], v['reason'])
    return AssumptionAReport(injective, checked, violations)


def decompositions(sub, word, index=None):
    """
    Every cover of word by phi(a0) phi(a1) ... phi(ak), entered at an
    offset inside phi(a0) and left inside phi(ak), as (offset, a0, ..., ak).
    With an index, only covers whose preimage a0...ak is a factor count.
    """
    word = tuple(word)
    if not word:
        return []
    images = sub.images
    found = []

    def cover(rest, letters):
        for b, img in enumerate(images):
            if len(rest) <= len(img):
                if img[:len(rest)] == rest:
                    found.append(letters + (b,))
            elif rest[:len(img)] == img:
                cover(rest[len(img):], letters + (b,))

    for a, img in enumerate(images):
        for offset in range(len(img)):
            piece = img[offset:]
            if len(word) <= len(piece):
                if piece[:len(word)] == word:
                    found.append((offset, a))
            elif word[:len(piece)] == piece:
                cover(word[len(piece):], (offset, a))

    if index is not None:
        found = [d for d in found if index.contains(d[1:])]
    return sorted(found)


def check_assumption_B(sub, index, search_len=DEFAULT_SEARCH_LEN):
    """
    First factor of length <= search_len with a single decomposition
    into images of letters, or None when the search is inconclusive.
    Whole images are tried first, then index factors by length.
    """
    candidates = [img for img in sub.images if len(img) <= search_len and index.contains(img)]
    for n in range(1, min(search_len, index.max_n) + 1):
        candidates.extend(index.factors(n))
    seen = set()
    for word in candidates:
        if word in seen:
            continue
        seen.add(word)
        if len(decompositions(sub, word, index)) == 1:
            logger.debug("Assumption B witness for %s: %s", sub, word_text(word))
            return word
    logger.info("no Assumption B witness for %s up to length %d", sub, search_len)
    return None


@dataclass
class GLGraph:
    substitution: Substitution
    vertices: List[Pair]
    out_edges: Dict[Pair, Tuple[Pair, Word]]
    orientation: Dict[Pair, Dict[int, FrozenSet[int]]] = field(default_factory=dict)
    graph: nx.DiGraph = field(default_factory=nx.DiGraph, repr=False)

    def __post_init__(self):
        self.graph.add_nodes_from(self.vertices)
        self.graph.add_edges_from((v, target, {'label': label})
                                  for v, (target, label) in self.out_edges.items())

    def successor(self, v):
        return self.out_edges[_pair(*v)][0]

    def label(self, v):
        return self.out_edges[_pair(*v)][1]

    def cycles(self):
        """ every cycle, rotated to start at its least vertex """
        found = []
        for cycle in nx.simple_cycles(self.graph):
            start = cycle.index(min(cycle))
            found.append(cycle[start:] + cycle[:start])
        return sorted(found)

    def is_epsilon_cycle(self, cycle):
        return all(not self.label(v) for v in cycle)

    def epsilon_vertices(self):
        return frozenset(v for cycle in self.cycles() if self.is_epsilon_cycle(cycle) for v in cycle)

    def to_dot(self):
        lines = ["digraph GL {"]
        for a, b in self.vertices:
            lines.append('    "%d_%d" [label="{%d,%d}"];' % (a, b, a, b))
        for (a, b) in self.vertices:
            if (a, b) not in self.out_edges:
                continue
            (c, d), label = self.out_edges[(a, b)]
            lines.append('    "%d_%d" -> "%d_%d" [label="%s"];' % (a, b, c, d, word_text(label)))
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self):
        return {'substitution': self.substitution.to_text(),
                'vertices': [list(v) for v in self.vertices],
                'edges': [{'from': list(v), 'to': list(self.out_edges[v][0]),
                           'label': list(self.out_edges[v][1])}
                          for v in self.vertices if v in self.out_edges],
                'cycles': [[list(v) for v in cycle] for cycle in self.cycles()]}


def build_graph(sub, index):
    report = check_assumption_A(sub, index)
    if not report.satisfied:
        problems = list(report.violations)
        if not report.injective:
            problems.insert(0, {'reason': 'substitution is not injective'})
        raise AssumptionAViolated(problems)
    out_edges, orientation = {}, {}
    for v in report.checked:
        detail = g_l_detail(sub, index, *v)
        out_edges[v] = (_pair(*detail.letters), detail.label)
        orientation[v] = detail.orientation
    missing = sorted({t for t, _ in out_edges.values()} - set(report.checked))
    if missing:
        logger.warning("GL graph of %s has targets outside the vertex set: %s", sub, missing)
    logger.info("GL graph of %s: %d vertices", sub, len(report.checked))
    return GLGraph(sub, list(report.checked), out_edges, orientation)


def f_image(sub, index, v, a, b):
    """ (f_L(a,b) phi(v), g_L(a,b)) for an LS factor v with left extensions a and b """
    detail = g_l_detail(sub, index, a, b)
    return detail.label + sub.apply(v), detail.letters


class BranchKind(Enum):
    PERIODIC_POINT = 'periodic'
    EQUATION = 'equation'


@dataclass(frozen=True)
class BranchSpec:
    """
    PERIODIC_POINT: (phi^power)^infinity(seed).
    EQUATION: the solution s phi^power(s) phi^{2 power}(s) ... of
    w = s phi^power(w), started at `vertex`.
    """
    kind: BranchKind
    power: int
    substitution: Substitution
    extensions: FrozenSet[int]
    seed: Optional[int] = None
    prefix: Word = ()
    vertex: Optional[Pair] = None
    cycle_vertices: Tuple[Pair, ...] = ()
    confirmed: bool = True

    def key(self):
        word = (self.seed,) if self.kind is BranchKind.PERIODIC_POINT else tuple(self.prefix)
        return (self.kind.value, word, self.power)

    def describe(self):
        if self.kind is BranchKind.PERIODIC_POINT:
            return "(phi^%d)^inf(%d)" % (self.power, self.seed)
        return "w = %s phi^%d(w)" % (word_text(self.prefix), self.power)

    def to_dict(self):
        doc = {'kind': self.kind.value,
               'power': self.power,
               'extensions': sorted(self.extensions),
               'cycleVertices': [list(v) for v in self.cycle_vertices],
               'confirmed': self.confirmed,
               'text': self.describe()}
        if self.kind is BranchKind.PERIODIC_POINT:
            doc['seed'] = self.seed
        else:
            doc['prefix'] = list(self.prefix)
            doc['vertex'] = list(self.vertex) if self.vertex else None
        return doc


def equation_prefix(graph, v, length):
    """ f_L(g^{l-1}(v)) phi(f_L(g^{l-2}(v))) ... phi^{l-1}(f_L(v)) """
    path = [v]
    for _ in range(length - 1):
        path.append(graph.successor(path[-1]))
    out = []
    for j in range(length):
        out.extend(power_word(graph.substitution, graph.label(path[length - 1 - j]), j))
    return tuple(out)


def branch_prefix(sub, spec, length):
    if length < 1:
        raise ValueError("branch prefixes need length >= 1")
    power = sub.power(spec.power) if spec.power > 1 else sub
    if spec.kind is BranchKind.PERIODIC_POINT:
        return fixed_point_prefix(power, spec.seed, length).word
    out = []
    piece = tuple(spec.prefix)
    while len(out) < length:
        out.extend(piece)
        piece = power.apply(piece)
    return tuple(out[:length])


def branch_verify(spec, index, depth=None, budget=DEFAULT_BUDGET):
    """
    Every prefix of length 1..depth is left special and keeps the
    claimed extensions.  Prefixes longer than the index depth are read
    from source prefixes grown until their extensions settle.
    """
    depth = depth or index.max_n
    word = branch_prefix(spec.substitution, spec, depth)
    records = deep_records(index, [word[:n] for n in range(1, depth + 1)], budget)
    for n in range(1, depth + 1):
        rec = records[word[:n]]
        lext = rec.left if rec else frozenset()
        if len(lext) < 2 or not spec.extensions <= lext:
            logger.debug("%s fails at prefix length %d (Lext=%s)", spec.describe(), n, sorted(lext))
            return False
    return True


def infinite_branches(sub, index, graph=None, search_len=DEFAULT_SEARCH_LEN, depth=None,
                      strict=False, max_period=None, budget=DEFAULT_BUDGET):
    """
    Periodic points whose long prefixes keep a pair lying on an
    epsilon-labelled cycle, and one equation branch per vertex of every
    cycle carrying a non-empty label.
    """
    if graph is None:
        graph = build_graph(sub, index)
    depth = depth or index.max_n
    witness = check_assumption_B(sub, index, search_len)
    if witness is None:
        if strict:
            raise AssumptionBUnknown("no factor of length <= %d of %s has a unique decomposition"
                                     % (search_len, sub))
        logger.warning("Assumption B unknown for %s; branches are unconfirmed candidates", sub)

    branches = []
    eps = graph.epsilon_vertices()
    for seed, power in periodic_points(sub, max_period):
        word = branch_prefix(sub, BranchSpec(BranchKind.PERIODIC_POINT, power, sub,
                                             frozenset(), seed=seed), depth)
        rec = deep_records(index, [word], budget)[word]
        lext = rec.left if rec else frozenset()
        on_cycle = tuple(sorted(v for v in eps if set(v) <= lext))
        if not on_cycle:
            logger.info("periodic point %d (power %d) of %s is not on an epsilon cycle",
                        seed, power, sub)
            continue
        spec = BranchSpec(BranchKind.PERIODIC_POINT, power, sub, lext, seed=seed,
                          cycle_vertices=on_cycle, confirmed=witness is not None)
        if branch_verify(spec, index, depth, budget):
            branches.append(spec)
        else:
            logger.info("periodic point %d (power %d) of %s fails the LS check", seed, power, sub)

    for cycle in graph.cycles():
        if graph.is_epsilon_cycle(cycle):
            continue
        length = len(cycle)
        for i, v in enumerate(cycle):
            spec = BranchSpec(BranchKind.EQUATION, length, sub, frozenset(v),
                              prefix=equation_prefix(graph, v, length), vertex=v,
                              cycle_vertices=tuple(cycle[i:] + cycle[:i]))
            verified = branch_verify(spec, index, depth, budget)
            if not verified:
                logger.warning("%s does not verify to depth %d", spec.describe(), depth)
            branches.append(replace(spec, confirmed=verified and witness is not None))

    return sorted(branches, key=BranchSpec.key)
