"""
Argument plumbing shared by the sub-command plugins: the expansion and
substitution sources, index options whose defaults come from the
configuration, and output format selection.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from PARRY.modules.factorlab import stabilize
from PARRY.modules.helperutilities import read_text_file
from PARRY.modules.parrycore import ParryExpansion, parse_expansion
from PARRY.modules.parryerrors import ParseError
from PARRY.modules.substitution import Substitution, canonical_substitution, parse_substitution

logger = logging.getLogger('parryword.commandinputs')


@dataclass(frozen=True)
class Source:
    substitution: Substitution
    seed: int
    expansion: Optional[ParryExpansion] = None


def add_sources(parser, substitution=False):
    """ -e/-E, plus -s/-S and --seed when the command accepts any substitution """
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument('-e', '--expansion', metavar='TEXT',
                       help='Renyi expansion of unity, e.g. "2(0,1)" or "1,1"')
    group.add_argument('-E', '--expansion-file', metavar='FILE',
                       help='file holding the expansion text')
    if substitution:
        group.add_argument('-s', '--substitution', metavar='TEXT',
                           help='substitution, e.g. "0>001;1>2;2>01"')
        group.add_argument('-S', '--substitution-file', metavar='FILE',
                           help='file holding the substitution text')
        parser.add_argument('--seed', type=int, default=0,
                            help='letter the fixed point starts with (default 0)')


def add_index_options(parser, depth=False):
    parser.add_argument('--max-n', type=int, metavar='N',
                        help='longest factor length indexed (config maxN)')
    parser.add_argument('--budget', type=int, metavar='LETTERS',
                        help='largest prefix used while stabilizing (config budget)')
    if depth:
        parser.add_argument('--depth', type=int, metavar='N',
                            help='branch verification depth (config depth)')


def add_format(parser, choices=('text', 'json'), default='text'):
    parser.add_argument('--format', choices=choices, default=default,
                        help='output format (default %s)' % default)


def setting(args, name, key):
    """ the command line value when given, else the configured one """
    value = args.get(name)
    if value is not None:
        return value
    return args['config'][key]


def _read(path):
    try:
        return read_text_file(path)
    except EnvironmentError as err:
        raise ParseError("cannot read %s: %s" % (path, err))


def read_expansion(args):
    text = args.get('expansion')
    if text is None:
        text = _read(args['expansion_file'])
    return parse_expansion(text)


def read_source(args):
    if args.get('substitution') is not None or args.get('substitution_file') is not None:
        text = args.get('substitution')
        if text is None:
            text = _read(args['substitution_file'])
        return Source(parse_substitution(text), args.get('seed') or 0)
    exp = read_expansion(args)
    return Source(canonical_substitution(exp), 0, exp)


def oracle_index(args, source, max_n=None):
    max_n = max_n if max_n is not None else setting(args, 'max_n', 'maxN')
    budget = setting(args, 'budget', 'budget')
    logger.info("indexing %s from %d up to length %d", source.substitution, source.seed, max_n)
    return stabilize(source.substitution, source.seed, max_n, budget,
                     args['config'].get('prefixLength', 0))
