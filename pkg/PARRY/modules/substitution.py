"""
Substitutions over the alphabet {0, ..., q-1}.

A substitution maps each letter to a nonempty word; words are tuples of
ints.  Besides the canonical substitution of a Parry number this module
iterates substitutions, streams fixed-point prefixes and decides
primitivity, injectivity and periodic points.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from PARRY.modules.parrycore import ParryExpansion, oplus, t_oplus
from PARRY.modules.parryerrors import (
    InvalidSubstitution, LetterOutOfRange, NotProlongable, ParseError,
    SimpleExpansion)

logger = logging.getLogger('parryword.substitution')

# fixed-point prefixes are stored one byte per letter
MAX_ALPHABET = 256

Word = Tuple[int, ...]


@dataclass(frozen=True)
class Substitution:
    """
    images[a] is the image of letter a.  The alphabet size is the number
    of images.
    """
    images: Tuple[Word, ...]

    def __post_init__(self):
        images = tuple(tuple(img) for img in self.images)
        q = len(images)
        if q < 1:
            raise InvalidSubstitution("a substitution needs at least one letter")
        if q > MAX_ALPHABET:
            raise InvalidSubstitution("alphabets above %d letters are not supported" % MAX_ALPHABET)
        for a, img in enumerate(images):
            if not img:
                raise InvalidSubstitution("image of letter %d is empty" % a)
            for x in img:
                if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < q:
                    raise InvalidSubstitution("image of letter %d uses letter %r outside 0..%d"
                                              % (a, x, q - 1))
        object.__setattr__(self, 'images', images)

    @property
    def alphabet_size(self) -> int:
        return len(self.images)

    def image(self, a: int) -> Word:
        if not 0 <= a < self.alphabet_size:
            raise LetterOutOfRange("letter %r outside 0..%d" % (a, self.alphabet_size - 1))
        return self.images[a]

    def apply(self, word: Sequence[int]) -> Word:
        out = []
        for x in word:
            out.extend(self.image(x))
        return tuple(out)

    def power(self, n: int) -> 'Substitution':
        """ the composed substitution phi^n """
        if n < 1:
            raise ValueError("power needs n >= 1")
        return Substitution(tuple(power_image(self, a, n) for a in range(self.alphabet_size)))

    def to_text(self) -> str:
        sep = "," if self.alphabet_size > 10 else ""
        return ";".join("%d>%s" % (a, sep.join(str(x) for x in img))
                        for a, img in enumerate(self.images))

    def to_dict(self) -> dict:
        return {'alphabetSize': self.alphabet_size,
                'images': [list(img) for img in self.images]}

    @classmethod
    def from_dict(cls, doc: dict) -> 'Substitution':
        try:
            images = doc['images']
            size = doc.get('alphabetSize', len(images))
        except (KeyError, TypeError, AttributeError):
            raise ParseError("substitution document needs an 'images' list")
        if size != len(images):
            raise InvalidSubstitution("alphabetSize %r does not match %d images" % (size, len(images)))
        return cls(tuple(tuple(img) for img in images))

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class Provenance:
    substitution: str
    seed: int
    guaranteed: bool


@dataclass(frozen=True)
class WordPrefix:
    """
    A finite prefix of phi^infinity(seed), one byte per letter.
    """
    letters: bytes
    provenance: Provenance

    def __len__(self):
        return len(self.letters)

    @property
    def word(self) -> Word:
        return tuple(self.letters)


def parse_substitution(text: str) -> Substitution:
    """
    Read "0>001;1>2;2>01".  An image containing commas is split on them,
    otherwise every character is one letter.
    """
    rules = {}
    for chunk in (text or "").split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ">" not in chunk:
            raise ParseError("rule %r has no '>'" % chunk)
        left, right = chunk.split(">", 1)
        try:
            letter = int(left.strip())
            right = right.strip()
            if "," in right:
                image = tuple(int(x) for x in right.split(","))
            else:
                image = tuple(int(x) for x in right)
        except ValueError:
            raise ParseError("cannot read rule %r" % chunk)
        if letter in rules:
            raise ParseError("letter %d has two rules" % letter)
        rules[letter] = image
    if not rules:
        raise ParseError("no rules in %r" % text)
    if sorted(rules) != list(range(len(rules))):
        raise ParseError("rules must cover the letters 0..%d exactly" % (len(rules) - 1))
    return Substitution(tuple(rules[a] for a in range(len(rules))))


def canonical_substitution(exp: ParryExpansion) -> Substitution:
    """
    phi_beta(k) = 0^{t_{k+1}} (k+1); the last letter maps to 0^{t_m} for
    simple expansions and to 0^{t_{m+p}} m otherwise.
    """
    images = []
    if exp.is_simple:
        m = exp.m
        for k in range(m - 1):
            images.append((0,) * exp.digit(k + 1) + (k + 1,))
        images.append((0,) * exp.digit(m))
    else:
        for k in range(exp.m + exp.p):
            images.append((0,) * exp.digit(k + 1) + (oplus(exp, k, 1),))
    return Substitution(tuple(images))


def fixed_point_prefix(sub: Substitution, seed: int, min_length: int) -> WordPrefix:
    """
    Prefix of phi^infinity(seed) with exactly min_length letters.

    phi^{n+1}(seed) = phi^n(seed) phi(tail), so only the newest tail is
    expanded at each step.
    """
    image = sub.image(seed)
    if image[0] != seed or len(image) < 2:
        raise NotProlongable("image of %d is %s; it must start with %d and have length >= 2"
                             % (seed, image, seed))
    table = [bytes(img) for img in sub.images]
    word = bytearray(table[seed])
    settled = 1
    while len(word) < min_length:
        tail = bytes(word[settled:])
        settled = len(word)
        word.extend(b"".join(table[x] for x in tail))
    logger.debug("fixed point prefix of %s at %d: %d letters", sub, seed, len(word))
    return WordPrefix(bytes(word[:max(min_length, 1)]),
                      Provenance(sub.to_text(), seed, True))


def power_word(sub: Substitution, word: Sequence[int], n: int) -> Word:
    """ phi^n(word) """
    word = tuple(word)
    for _ in range(n):
        word = sub.apply(word)
    return word


def power_image(sub: Substitution, k: int, n: int) -> Word:
    """ phi^n(k) by iteration """
    sub.image(k)
    return power_word(sub, (k,), n)


def power_image_closed_form(exp: ParryExpansion, k: int, n: int) -> Word:
    """
    phi_beta^n(k) = (phi^{n-1}(0))^{t_{k+1}} ... (phi(0))^{t_{k+(n-1)}} 0^{t_{k+n}} (k+n)
    with + read as the wrapped addition.
    """
    if exp.is_simple:
        raise SimpleExpansion("the product form holds for non-simple expansions")
    if n == 0:
        return (k,)
    sub = canonical_substitution(exp)
    powers_of_zero = [(0,)]
    for _ in range(1, n):
        powers_of_zero.append(sub.apply(powers_of_zero[-1]))
    out = []
    for i in range(1, n):
        out.extend(powers_of_zero[n - i] * t_oplus(exp, k, i))
    out.extend((0,) * t_oplus(exp, k, n))
    out.append(oplus(exp, k, n))
    return tuple(out)


def incidence_matrix(sub: Substitution) -> np.ndarray:
    """ M[a][b] = number of b in phi(a) """
    q = sub.alphabet_size
    matrix = np.zeros((q, q), dtype=np.int64)
    for a, img in enumerate(sub.images):
        for b in img:
            matrix[a, b] += 1
    return matrix


def dominant_eigenvalue(sub: Substitution) -> float:
    eigenvalues = np.linalg.eigvals(incidence_matrix(sub).astype(float))
    return float(max(abs(eigenvalues)))


def is_primitive(sub: Substitution) -> bool:
    """ some power M^k, k <= q^2 - 2q + 2, is entrywise positive """
    q = sub.alphabet_size
    pattern = (incidence_matrix(sub) > 0).astype(np.int64)
    current = pattern.copy()
    for k in range(1, q * q - 2 * q + 3):
        if (current > 0).all():
            logger.debug("%s primitive with exponent %d", sub, k)
            return True
        current = ((current @ pattern) > 0).astype(np.int64)
    return False


def _dangling(prefixes, words):
    return {w[len(x):] for x in prefixes for w in words
            if len(w) > len(x) and w[:len(x)] == x}


def is_injective(sub: Substitution) -> bool:
    """
    Images pairwise distinct and uniquely decodable, by the dangling
    suffix procedure.
    """
    code = set(sub.images)
    if len(code) < sub.alphabet_size:
        return False
    current = _dangling(code, code)
    seen = set()
    while current:
        if current & code:
            return False
        key = frozenset(current)
        if key in seen:
            return True
        seen.add(key)
        current = _dangling(code, current) | _dangling(current, code)
    return True


def is_suffix_free(sub: Substitution) -> bool:
    images = sub.images
    for a, x in enumerate(images):
        for b, y in enumerate(images):
            if a != b and len(x) <= len(y) and y[len(y) - len(x):] == x:
                return False
    return True


def periodic_points(sub: Substitution, max_period: int = None) -> List[Tuple[int, int]]:
    """
    Pairs (a, l) with l <= max_period minimal such that phi^l(a) starts
    with a and has length >= 2, ordered by period then letter.
    """
    q = sub.alphabet_size
    if max_period is None:
        max_period = q
    first = [img[0] for img in sub.images]
    lengths = [[1] * q]
    for _ in range(max_period):
        prev = lengths[-1]
        lengths.append([sum(prev[x] for x in img) for img in sub.images])

    found = []
    for a in range(q):
        b = a
        for l in range(1, max_period + 1):
            b = first[b]
            if b == a and lengths[l][a] >= 2:
                found.append((a, l))
                break
    return sorted(found, key=lambda pair: (pair[1], pair[0]))
