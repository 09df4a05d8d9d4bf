""" plugin that implements the classify command
"""

import logging

from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import add_format, add_sources, read_expansion
from PARRY.modules.helperutilities import emit, to_json
from PARRY.modules.ubeta import classify_word


class Classify(IPlugin):
    """ This implements the plugin, or command, to name the class of u_beta:
        Sturmian, Arnoux-Rauzy, another affine word, or general.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_c = subparser.add_parser("classify", help="Sturmian / Arnoux-Rauzy classification")
        add_sources(parser_c)
        add_format(parser_c)
        parser_c.set_defaults(sub_cmds='classify')
        return 'classify'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        exp = read_expansion(args)
        found = classify_word(exp)
        if args['format'] == 'json':
            emit(to_json(dict(found.to_dict(), expansion=exp.to_text())))
        else:
            emit(str(found))
        return 0


if __name__ == "__main__":
    print(Classify.__doc__)
