""" extra plugin loaded through PARRYWORD_PLUGIN_DIR by the command tests
"""

from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import add_sources, read_expansion
from PARRY.modules.helperutilities import emit


class Echo(IPlugin):
    """ prints the canonical text of an expansion """

    def add_parser_info(self, subparser):
        parser_e = subparser.add_parser("echo", help="print the canonical expansion")
        add_sources(parser_e)
        parser_e.set_defaults(sub_cmds='echo')
        return 'echo'

    def cmd(self, args):
        emit(read_expansion(args).to_text())
        return 0
