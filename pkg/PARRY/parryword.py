#!python

""" parryword - the command line front end.

    Every sub-command is a yapsy plugin: a .yapsy-plugin descriptor naming
    a *Plugin.py module whose IPlugin class adds the sub-parser.  Plugins
    are collected from PARRY/plugins and from the directories listed in
    PARRYWORD_PLUGIN_DIR.
"""

import argparse
import logging
import os
import sys

from yapsy.PluginManager import PluginManager

from PARRY import __version__
from PARRY.modules.batteryConfig import ParryConfig
from PARRY.modules.parryerrors import ParryWordError

PLUGIN_DIR = os.path.join(os.path.dirname(os.path.realpath(__file__)), 'plugins')

logger = logging.getLogger('parryword')


def configure_logging(verbose=False):
    """
    One handler on the 'parryword' logger: the file named by
    PARRYWORD_LOG at DEBUG, else stderr at WARNING (INFO when verbose).
    """
    log_file = os.environ.get('PARRYWORD_LOG')
    if not logger.handlers:
        formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        if log_file:
            handler = logging.FileHandler(filename=log_file)
        else:
            handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(formatter)
        logger.addHandler(handler)
        logger.propagate = False
    if log_file:
        logger.setLevel(logging.DEBUG)
    else:
        logger.setLevel(logging.INFO if verbose else logging.WARNING)


def plugin_places():
    """ the packaged plugins, then every directory in PARRYWORD_PLUGIN_DIR """
    extra = os.environ.get('PARRYWORD_PLUGIN_DIR', '')
    return [PLUGIN_DIR] + [d for d in extra.split(os.pathsep) if d]


def load_plugins():
    """ an activated instance of every plugin with a .yapsy-plugin file """
    manager = PluginManager()
    manager.setPluginPlaces(plugin_places())
    manager.collectPlugins()
    plugins = []
    for info in sorted(manager.getAllPlugins(), key=lambda i: i.name):
        manager.activatePluginByName(info.name)
        logger.debug("loaded plugin %s from %s", info.name, info.path)
        plugins.append(info.plugin_object)
    return plugins


def build_parser():
    parser = argparse.ArgumentParser(
        prog='parryword',
        description="special factors of fixed points of substitutions "
                    "associated with Parry numbers")
    parser.add_argument('-v', '--verbose', help="log progress to stderr", action="store_true")
    parser.add_argument('--defaults', metavar='FILE',
                        help="YAML file merged over the packaged numeric defaults")
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    subparser = parser.add_subparsers(title='sub-commands', dest='sub_cmds')

    func_map = {}
    for plugin in load_plugins():
        func_map[plugin.add_parser_info(subparser)] = plugin.cmd
    return parser, func_map


def run(argv=None):
    """ execute one sub-command and return the exit status """
    configure_logging()
    parser, func_map = build_parser()
    try:
        args = vars(parser.parse_args(argv))
        if not args.get('sub_cmds'):
            parser.print_usage(sys.stderr)
            return 2
        configure_logging(args['verbose'])
        args['config'] = ParryConfig(args['defaults'])
        logger.debug("Command args -> %s", args)
        return func_map[args['sub_cmds']](args)

    except ParryWordError as err:
        logger.info("%s failed: %s", err.__class__.__name__, err)
        sys.stderr.write("parryword: error: %s\n" % err)
        return 1

    except SystemExit as err:
        if err.code is None or isinstance(err.code, int):
            return err.code or 0
        sys.stderr.write("parryword: error: %s\n" % err.code)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
