""" plugin that implements the subst command
"""

import logging

from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import add_format, add_sources, read_source
from PARRY.modules.helperutilities import emit, to_json
from PARRY.modules.parryerrors import OutOfRange
from PARRY.modules.substitution import (
    dominant_eigenvalue, incidence_matrix, is_injective, is_primitive, is_suffix_free)


class Subst(IPlugin):
    """ This implements the plugin, or command, to show the canonical
        substitution of an expansion (or any given substitution) and its
        basic properties.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_s = subparser.add_parser("subst", help="canonical substitution and its properties")
        add_sources(parser_s, substitution=True)
        parser_s.add_argument('--power', type=int, default=1, metavar='N',
                              help="show phi^N instead of phi")
        add_format(parser_s)
        parser_s.set_defaults(sub_cmds='subst')
        return 'subst'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        source = read_source(args)
        sub = source.substitution
        if args['power'] < 1:
            raise OutOfRange("--power must be at least 1")
        if args['power'] > 1:
            sub = sub.power(args['power'])
        doc = dict(sub.to_dict(),
                   text=sub.to_text(),
                   primitive=is_primitive(sub),
                   injective=is_injective(sub),
                   suffixFree=is_suffix_free(sub),
                   eigenvalue=dominant_eigenvalue(sub),
                   matrix=incidence_matrix(sub).tolist())
        if source.expansion is not None:
            doc['expansion'] = source.expansion.to_text()

        if args['format'] == 'json':
            emit(to_json(doc))
        else:
            emit(sub.to_text())
        return 0


if __name__ == "__main__":
    print(Subst.__doc__)
