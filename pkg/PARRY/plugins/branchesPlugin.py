""" plugin that implements the branches command
"""

import logging

from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import (
    add_format, add_index_options, add_sources, oracle_index, read_source, setting)
from PARRY.modules.helperutilities import emit, to_json
from PARRY.modules.lsgraph import infinite_branches
from PARRY.modules.parryerrors import ParseError
from PARRY.modules.ubeta import branch_list


class Branches(IPlugin):
    """ This implements the plugin, or command, to list the infinite left
        special branches, either from the generic graph construction or
        from the closed form for u_beta.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_b = subparser.add_parser("branches", help="infinite left special branches")
        add_sources(parser_b, substitution=True)
        add_index_options(parser_b, depth=True)
        parser_b.add_argument('--closed-form', action="store_true",
                              help="list the closed-form branches of u_beta")
        parser_b.add_argument('--search-len', type=int,
                              help="Assumption B witness search length (config searchLen)")
        parser_b.add_argument('--strict', action="store_true",
                              help="fail when Assumption B cannot be decided")
        add_format(parser_b)
        parser_b.set_defaults(sub_cmds='branches')
        return 'branches'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        source = read_source(args)
        if args['closed_form']:
            if source.expansion is None:
                raise ParseError("--closed-form needs an expansion (-e/-E)")
            branches = branch_list(source.expansion)
        else:
            index = oracle_index(args, source)
            branches = infinite_branches(source.substitution, index,
                                         search_len=setting(args, 'search_len', 'searchLen'),
                                         depth=setting(args, 'depth', 'depth'),
                                         strict=args['strict'])

        if args['format'] == 'json':
            emit(to_json({'substitution': source.substitution.to_text(),
                          'closedForm': args['closed_form'],
                          'branches': [b.to_dict() for b in branches]}))
        else:
            for b in branches:
                emit("%-9s %s  ext=%s%s" % (b.kind.value, b.describe(), sorted(b.extensions),
                                            "" if b.confirmed else "  (unconfirmed)"))
        return 0


if __name__ == "__main__":
    print(Branches.__doc__)
