""" plugin that implements the specials command
"""

import logging

from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import (
    add_format, add_index_options, add_sources, oracle_index, read_source)
from PARRY.modules.factorlab import bilateral_order, maximal_pairs, special_factors
from PARRY.modules.helperutilities import emit, to_json, word_text
from PARRY.modules.parryerrors import OutOfRange


class Specials(IPlugin):
    """ This implements the plugin, or command, to list the left special,
        right special or bispecial factors of one length.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_s = subparser.add_parser("specials", help="special factors of one length")
        add_sources(parser_s, substitution=True)
        add_index_options(parser_s)
        parser_s.add_argument('-n', '--length', type=int, required=True, help="factor length")
        parser_s.add_argument('--side', choices=('left', 'right', 'bi'), default='left',
                              help="left special, right special or bispecial (default left)")
        add_format(parser_s)
        parser_s.set_defaults(sub_cmds='specials')
        return 'specials'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        n = args['length']
        if n < 0:
            raise OutOfRange("--length must be non-negative")
        max_n = args.get('max_n')
        if max_n is None or max_n <= n:
            max_n = max(n + 1, args['config']['maxN'])
        index = oracle_index(args, read_source(args), max_n)

        found = []
        for v, _ in special_factors(index, n, 'right' if args['side'] == 'right' else 'left'):
            rec = index.record(v)
            if args['side'] == 'bi' and len(rec.right) < 2:
                continue
            entry = {'factor': list(v),
                     'left': sorted(rec.left),
                     'right': sorted(rec.right)}
            if len(rec.left) >= 2:
                entry['maximalPairs'] = [list(p) for p in maximal_pairs(index, v)]
                if len(rec.right) >= 2:
                    entry['bilateralOrder'] = bilateral_order(index, v)
            found.append(entry)

        if args['format'] == 'json':
            emit(to_json({'length': n, 'side': args['side'], 'factors': found}))
        else:
            for entry in found:
                emit("%s  Lext=%s Rext=%s" % (word_text(entry['factor']),
                                               entry['left'], entry['right']))
        return 0


if __name__ == "__main__":
    print(Specials.__doc__)
