""" plugin that implements the params command
"""

import logging

from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import add_format, add_sources, read_expansion
from PARRY.modules.helperutilities import emit, to_json
from PARRY.modules.parrycore import derive_params


class Params(IPlugin):
    """ This implements the plugin, or command, to show the derived
        parameters z, y, ell0, t, zStar, k0 and membership in S.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_p = subparser.add_parser("params", help="derived combinatorial parameters")
        add_sources(parser_p)
        add_format(parser_p)
        parser_p.set_defaults(sub_cmds='params')
        return 'params'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        doc = derive_params(read_expansion(args)).to_dict()
        if args['format'] == 'json':
            emit(to_json(doc))
            return 0
        for key in sorted(doc):
            value = doc[key]
            if isinstance(value, dict):
                value = " ".join("%s:%s" % item for item in value.items())
            emit("%-10s %s" % (key, value))
        return 0


if __name__ == "__main__":
    print(Params.__doc__)
