""" plugin that implements the digits command
"""

import logging

from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import add_format, add_sources, read_expansion, setting
from PARRY.modules.helperutilities import emit, to_json
from PARRY.modules.parrycore import beta_value, renyi_digits


class Digits(IPlugin):
    """ This implements the plugin, or command, to recover the Renyi
        digits of unity from the numeric value of beta.  Digits decided
        inside the guard band are flagged UNSAFE.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_d = subparser.add_parser("digits", help="Renyi digits of unity from the numeric beta")
        add_sources(parser_d)
        parser_d.add_argument('-n', '--count', type=int, help="number of digits (config digits)")
        parser_d.add_argument('--tol', type=float, help="root isolation tolerance (config tol)")
        parser_d.add_argument('--guard', type=float, help="UNSAFE guard band (config guard)")
        add_format(parser_d)
        parser_d.set_defaults(sub_cmds='digits')
        return 'digits'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        exp = read_expansion(args)
        count = setting(args, 'count', 'digits')
        recovered = renyi_digits(beta_value(exp, setting(args, 'tol', 'tol')), count,
                                 setting(args, 'guard', 'guard'))
        expected = exp.digits(count)
        mismatches = [i + 1 for i in recovered.safe_positions()
                      if recovered.digits[i] != expected[i]]
        if mismatches:
            self.logger.warning("digits at positions %s disagree with %s", mismatches, exp)

        if args['format'] == 'json':
            emit(to_json(dict(recovered.to_dict(), expansion=exp.to_text(), mismatches=mismatches)))
        else:
            emit(" ".join("%d%s" % (d, "?" if flag else "")
                          for d, flag in zip(recovered.digits, recovered.unsafe)))
        return 0


if __name__ == "__main__":
    print(Digits.__doc__)
