from app.management.base import SplicingCommand
from app.respect import RespectContext, respect_counterexample, respects
from app.serializers import format_word
from app.splicing import parse_rule
from app.syntactic import syntactic_monoid


class Command(SplicingCommand):
    help = 'Testa se uma regra de splicing respeita uma linguagem regular.'

    def add_arguments(self, parser):
        self.add_lang_arguments(parser)
        self.add_variant_argument(parser)
        parser.add_argument('--rule', required=True, help='clássica "u1,v1;u2,v2" ou Pixton "u1,u2;v"')
        parser.add_argument('--witness', action='store_true', help='procura um contraexemplo por força bruta')
        parser.add_argument('--bound', type=int, default=8, help='comprimento máximo das palavras do contraexemplo')

    def perform(self, *args, **options):
        lang = self.lang(options)
        rule = parse_rule(options['rule'], options['variant'])
        ctx = RespectContext(syntactic_monoid(lang))
        if respects(ctx, rule):
            self.stdout.write(f'a regra {rule} respeita a linguagem')
            return
        self.stdout.write(f'a regra {rule} não respeita a linguagem')
        if not options['witness']:
            return
        found = respect_counterexample(lang, rule, options['bound'])
        if found is None:
            self.stdout.write(f'nenhum contraexemplo com palavras de comprimento <= {options["bound"]}')
            return
        w1, w2, z = found
        self.stdout.write(f'w1 = {format_word(w1)}, w2 = {format_word(w2)} -> {format_word(z)} fora da linguagem')
