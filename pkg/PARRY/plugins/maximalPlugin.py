""" plugin that implements the maximal command
"""

import logging

from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import (
    add_format, add_index_options, add_sources, oracle_index, read_source, setting)
from PARRY.modules.helperutilities import emit, to_json, word_text
from PARRY.modules.ubeta import maximal_factors


class Maximal(IPlugin):
    """ This implements the plugin, or command, to enumerate the chains of
        max-f-images that give the (a,b)-maximal factors of u_beta.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_m = subparser.add_parser("maximal", help="(a,b)-maximal factors of u_beta")
        add_sources(parser_m)
        add_index_options(parser_m)
        parser_m.add_argument('-k', '--k-max', type=int, help="chain depth (config kMax)")
        parser_m.add_argument('--confirmed', action="store_true",
                              help="only list factors the index confirms")
        add_format(parser_m)
        parser_m.set_defaults(sub_cmds='maximal')
        return 'maximal'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        source = read_source(args)
        index = oracle_index(args, source)
        records = maximal_factors(source.expansion, setting(args, 'k_max', 'kMax'), index)
        if args['confirmed']:
            records = [r for r in records if r.confirmed]

        if args['format'] == 'json':
            emit(to_json({'expansion': source.expansion.to_text(),
                          'records': [r.to_dict() for r in records]}))
        else:
            for r in records:
                emit("%-14s k=%d %s-maximal %-11s %s" % (
                    r.family, r.depth, r.pair,
                    "confirmed" if r.confirmed else "unconfirmed", word_text(r.factor)))
        return 0


if __name__ == "__main__":
    print(Maximal.__doc__)
