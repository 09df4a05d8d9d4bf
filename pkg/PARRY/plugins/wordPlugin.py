""" plugin that implements the word command
"""

import logging

from yapsy.IPlugin import IPlugin

from PARRY.modules.commandinputs import add_format, add_sources, read_source, setting
from PARRY.modules.helperutilities import compact_text, emit, to_json
from PARRY.modules.parrycore import beta_integer_word
from PARRY.modules.parryerrors import ParseError
from PARRY.modules.substitution import fixed_point_prefix


class Word(IPlugin):
    """ This implements the plugin, or command, to print a prefix of the
        fixed point, or the word of gaps between beta-integers.
    """

    def __init__(self):
        my_name = self.__class__.__name__
        self.logger = logging.getLogger('parryword.' + my_name)
        self.logger.info('created instance of plugin: %s' % my_name)

    # Every plugin class MUST have a method by the name "add_parser_info"
    # and must return the name of the sub-command

    def add_parser_info(self, subparser):
        parser_w = subparser.add_parser("word", help="prefix of the fixed point")
        add_sources(parser_w, substitution=True)
        parser_w.add_argument('-n', '--length', type=int, help="letters printed (config wordLength)")
        parser_w.add_argument('--beta-integers', action="store_true",
                              help="print the gap word of the beta-integers instead")
        add_format(parser_w)
        parser_w.set_defaults(sub_cmds='word')
        return 'word'

    # Every plugin (command) MUST have a method by the name "cmd".
    # It will be what is called when that command is selected.
    def cmd(self, args):
        source = read_source(args)
        length = setting(args, 'length', 'wordLength')
        if args['beta_integers']:
            if source.expansion is None:
                raise ParseError("--beta-integers needs an expansion (-e/-E)")
            word = beta_integer_word(source.expansion, length)
        else:
            word = fixed_point_prefix(source.substitution, source.seed, length).word

        if args['format'] == 'json':
            emit(to_json({'substitution': source.substitution.to_text(),
                          'seed': source.seed,
                          'betaIntegers': args['beta_integers'],
                          'length': len(word),
                          'word': list(word)}))
        else:
            emit(compact_text(word, source.substitution.alphabet_size))
        return 0


if __name__ == "__main__":
    print(Word.__doc__)
