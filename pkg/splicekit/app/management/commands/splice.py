from app.automata import Alphabet
from app.management.base import SplicingCommand
from app.splicing import ClassicRule, parse_rule, splice, splice_classic


def _raw(word):
    return word or '""'


def _plain_key(word):
    return len(word), word


class Command(SplicingCommand):
    help = 'Aplica uma regra de splicing a duas palavras.'

    def add_arguments(self, parser):
        self.add_variant_argument(parser)
        parser.add_argument('--rule', required=True)
        parser.add_argument('--w1', required=True)
        parser.add_argument('--w2', required=True)
        parser.add_argument('--alphabet', help='se dado, valida as palavras e ordena a saída por ele')
        parser.add_argument('--trace', action='store_true', help='mostra a posição de splicing (regras clássicas)')

    def perform(self, *args, **options):
        rule = parse_rule(options['rule'], options['variant'])
        w1, w2 = options['w1'], options['w2']
        if options['alphabet'] is not None:
            alphabet = Alphabet.of(options['alphabet'])
            for word in (w1, w2, *rule.components):
                alphabet.check_word(word)
            key = alphabet.sort_key
        else:
            key = _plain_key
        if options['trace'] and isinstance(rule, ClassicRule):
            for word, position in sorted(splice_classic(w1, w2, rule), key=lambda item: (key(item[0]), item[1])):
                self.stdout.write(f'{_raw(word)} {position}')
            return
        for word in sorted(splice(w1, w2, rule), key=key):
            self.stdout.write(_raw(word))
