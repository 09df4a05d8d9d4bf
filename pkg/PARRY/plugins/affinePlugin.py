""" plugin that implements the affine command
"""

import logging

from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import (
    add_format, add_index_options, add_sources, oracle_index, read_source)
from PARRY.modules.factorlab import delta_complexity, first_deviation
from PARRY.modules.helperutilities import emit, to_json
from PARRY.modules.ubeta import affine_predicate


class Affine(IPlugin):
    """ This implements the plugin, or command, to decide whether the
        factor complexity of u_beta is an affine function of n.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_a = subparser.add_parser("affine", help="is the complexity affine?")
        add_sources(parser_a)
        add_index_options(parser_a)
        parser_a.add_argument('--check', action="store_true",
                              help="compare with the brute-force complexity")
        add_format(parser_a, default='json')
        parser_a.set_defaults(sub_cmds='affine')
        return 'affine'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        source = read_source(args)
        report = affine_predicate(source.expansion)
        doc = report.to_dict()
        status = 0
        if args['check']:
            index = oracle_index(args, source)
            if report.affine:
                bad = [n for n in range(1, index.max_n)
                       if delta_complexity(index, n) != report.slope]
                doc['check'] = {'maxN': index.max_n, 'agrees': not bad, 'violations': bad}
                status = 1 if bad else 0
            else:
                found = first_deviation(index)
                doc['check'] = {'maxN': index.max_n, 'agrees': found is not None,
                                'deviation': found}
                if found is None:
                    self.logger.warning("no complexity deviation up to %d for %s",
                                        index.max_n, source.expansion)

        if args['format'] == 'json':
            emit(to_json(doc))
        elif report.affine:
            emit("%s affine: C(n) = %s" % (doc['expansion'], report.formula))
        else:
            emit("%s not affine" % doc['expansion'])
        return status


if __name__ == "__main__":
    print(Affine.__doc__)
