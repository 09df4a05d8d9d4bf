""" plugin that implements the beta command
"""

import logging

from mpmath import mp, polyval, workdps
from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import add_format, add_sources, read_expansion, setting
from PARRY.modules.helperutilities import emit, to_json
from PARRY.modules.parrycore import WORKING_DPS, affine_polynomial, beta_value
from PARRY.modules.substitution import canonical_substitution, dominant_eigenvalue


class Beta(IPlugin):
    """ This implements the plugin, or command, to print the Parry number
        of an expansion.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_b = subparser.add_parser("beta", help="compute beta from its expansion of unity")
        add_sources(parser_b)
        parser_b.add_argument('--tol', type=float, help="root isolation tolerance (config tol)")
        parser_b.add_argument('--precision', type=int, default=30, metavar='DIGITS',
                              help="significant digits printed (default 30)")
        add_format(parser_b)
        parser_b.set_defaults(sub_cmds='beta')
        return 'beta'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        exp = read_expansion(args)
        beta = beta_value(exp, setting(args, 'tol', 'tol'))
        precision = min(args['precision'], WORKING_DPS - 10)
        with workdps(WORKING_DPS):
            text = mp.nstr(beta, precision)
            doc = {'expansion': exp.to_text(),
                   'beta': text,
                   'eigenvalue': dominant_eigenvalue(canonical_substitution(exp))}
            poly = affine_polynomial(exp)
            if poly is not None:
                doc['polynomial'] = poly
                doc['residual'] = mp.nstr(abs(polyval(poly, beta)), 5)

        if args['format'] == 'json':
            emit(to_json(doc))
        else:
            emit(text)
        return 0


if __name__ == "__main__":
    print(Beta.__doc__)
