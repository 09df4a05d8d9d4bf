""" plugin that implements the gaps command
"""

import logging

from mpmath import mp, workdps
from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import add_format, add_sources, read_expansion, setting
from PARRY.modules.helperutilities import emit, to_json
from PARRY.modules.parrycore import WORKING_DPS, gap_lengths


class Gaps(IPlugin):
    """ This implements the plugin, or command, to list the gaps
        Delta_i between consecutive beta-integers.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_g = subparser.add_parser("gaps", help="gaps between consecutive beta-integers")
        add_sources(parser_g)
        parser_g.add_argument('--tol', type=float, help="root isolation tolerance (config tol)")
        add_format(parser_g)
        parser_g.set_defaults(sub_cmds='gaps')
        return 'gaps'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        exp = read_expansion(args)
        with workdps(WORKING_DPS):
            gaps = [mp.nstr(g, 20) for g in gap_lengths(exp, setting(args, 'tol', 'tol'))]
        if args['format'] == 'json':
            emit(to_json({'expansion': exp.to_text(), 'gaps': gaps}))
        else:
            for i, gap in enumerate(gaps):
                emit("Delta_%d = %s" % (i, gap))
        return 0


if __name__ == "__main__":
    print(Gaps.__doc__)
