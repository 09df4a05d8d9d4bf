""" plugin that implements the complexity command
"""

import logging

from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import (
    add_format, add_index_options, add_sources, oracle_index, read_source)
from PARRY.modules.factorlab import complexity_rows, verify_connection
from PARRY.modules.helperutilities import emit, to_csv, to_json

HEADER = ('n', 'C', 'dC', 'LS', 'RS')


class Complexity(IPlugin):
    """ This implements the plugin, or command, to tabulate the factor
        complexity C(n), its first difference and the number of left and
        right special factors, all by brute force.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_c = subparser.add_parser("complexity", help="brute-force factor complexity")
        add_sources(parser_c, substitution=True)
        add_index_options(parser_c)
        parser_c.add_argument('--connection', action="store_true",
                              help="also check dC(n) against the left special factors")
        add_format(parser_c, choices=('text', 'json', 'csv'))
        parser_c.set_defaults(sub_cmds='complexity')
        return 'complexity'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        index = oracle_index(args, read_source(args))
        rows = complexity_rows(index)
        report = verify_connection(index) if args['connection'] else None

        if args['format'] == 'csv':
            emit(to_csv(HEADER, rows))
        elif args['format'] == 'json':
            doc = {'maxN': index.max_n,
                   'prefixLength': len(index),
                   'rows': [dict(zip(HEADER, row)) for row in rows]}
            if report is not None:
                doc['connection'] = report.to_dict()
            emit(to_json(doc))
        else:
            emit("%4s %8s %4s %4s %4s" % HEADER)
            for row in rows:
                emit("%4s %8s %4s %4s %4s" % tuple("" if x is None else x for x in row))
            if report is not None:
                emit("connection formula: %s" % ("holds" if report.passed else "FAILS"))
        if report is not None and not report.passed:
            return 1
        return 0


if __name__ == "__main__":
    print(Complexity.__doc__)
