""" plugin that implements the validate command
"""

import logging

from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import add_format, add_sources, read_expansion
from PARRY.modules.helperutilities import emit, to_json


class Validate(IPlugin):
    """ This implements the plugin, or command, to check that digit data
        describes a Parry number and print its canonical form.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_v = subparser.add_parser("validate", help="check the Parry condition of an expansion")
        add_sources(parser_v)
        add_format(parser_v)
        parser_v.set_defaults(sub_cmds='validate')
        return 'validate'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        exp = read_expansion(args)
        if args['format'] == 'json':
            emit(to_json(dict(exp.to_dict(), valid=True)))
        else:
            emit("%s valid (%s)" % (exp.to_text(), "simple" if exp.is_simple else "non-simple"))
        return 0


if __name__ == "__main__":
    print(Validate.__doc__)
