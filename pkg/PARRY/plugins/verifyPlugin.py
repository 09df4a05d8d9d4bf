""" plugin that implements the verify command
"""

import logging

from yapsy.IPlugin import IPlugin

from PARRY.modules.battery import verify_battery
from PARRY.modules.batteryConfig import BatteryConfig
from PARRY.modules.helperutilities import emit, to_json
from PARRY.modules.parryerrors import OutOfRange


class Verify(IPlugin):
    """ This implements the plugin, or command, to run a battery of
        closed-form versus brute-force checks.  The exit status is 1 when
        any item fails.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_v = subparser.add_parser("verify", help="run a verification battery")
        group = parser_v.add_mutually_exclusive_group(required=True)
        group.add_argument('battery', nargs='?', help='battery file (JSON or YAML)')
        group.add_argument('--default', action="store_true", help="run the packaged battery")
        parser_v.add_argument('-j', '--jobs', type=int, default=1,
                              help="worker processes (default 1)")
        parser_v.add_argument('--show-effective', action="store_true",
                              help="print the effective battery items and exit")
        parser_v.add_argument('--format', choices=('text', 'json'), default='text',
                              help='output format (default text)')
        parser_v.set_defaults(sub_cmds='verify')
        return 'verify'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        if args['jobs'] < 1:
            raise OutOfRange("--jobs must be at least 1")
        bc = BatteryConfig(None if args['default'] else args['battery'], args['config'])
        if args['show_effective']:
            bc.show_effective_items()
            return 0

        self.logger.info("running %d battery item(s) with %d job(s)", len(bc.items), args['jobs'])
        report = verify_battery(bc.items, args['jobs'])
        if args['format'] == 'json':
            emit(to_json(report.to_dict()))
        else:
            emit(report.to_text())
        return 0 if report.passed else 1


if __name__ == "__main__":
    print(Verify.__doc__)
