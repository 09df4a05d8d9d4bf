""" plugin that implements the glgraph command
"""

import logging

from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import (
    add_format, add_index_options, add_sources, oracle_index, read_source)
from PARRY.modules.helperutilities import emit, to_json, word_text
from PARRY.modules.lsgraph import build_graph
from PARRY.modules.parryerrors import ParseError
from PARRY.modules.ubeta import gl_closed_form


class GLGraph(IPlugin):
    """ This implements the plugin, or command, to build the graph of the
        maps f_L and g_L on coextendable letter pairs.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_g = subparser.add_parser("glgraph", help="graph of f_L and g_L")
        add_sources(parser_g, substitution=True)
        add_index_options(parser_g)
        parser_g.add_argument('--closed-form', action="store_true",
                              help="print the closed-form table of u_beta instead")
        add_format(parser_g, choices=('text', 'json', 'dot'))
        parser_g.set_defaults(sub_cmds='glgraph')
        return 'glgraph'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        source = read_source(args)
        if args['closed_form']:
            return self._closed(args, source)

        graph = build_graph(source.substitution, oracle_index(args, source))
        if args['format'] == 'dot':
            emit(graph.to_dot())
        elif args['format'] == 'json':
            emit(to_json(graph.to_dict()))
        else:
            for v in graph.vertices:
                emit("%s -> %s  f_L=%s" % (v, graph.successor(v), word_text(graph.label(v))))
            for cycle in graph.cycles():
                emit("cycle %s%s" % (" ".join(str(v) for v in cycle),
                                     " (eps)" if graph.is_epsilon_cycle(cycle) else ""))
        return 0

    def _closed(self, args, source):
        if source.expansion is None:
            raise ParseError("--closed-form needs an expansion (-e/-E)")
        table = gl_closed_form(source.expansion)
        if args['format'] == 'json':
            emit(to_json({'expansion': source.expansion.to_text(),
                          'vertices': [{'pair': list(v),
                                        'label': list(e.label),
                                        'target': list(e.target),
                                        'orientation': {str(a): b for a, b
                                                        in sorted(e.orientation.items())}}
                                       for v, e in sorted(table.items())]}))
        else:
            for v, e in sorted(table.items()):
                emit("%s -> %s  f_L=%s" % (v, e.target, word_text(e.label)))
        return 0


if __name__ == "__main__":
    print(GLGraph.__doc__)
