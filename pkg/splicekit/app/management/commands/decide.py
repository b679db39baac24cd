import sys

from django.core.management.base import CommandError

from app.decider import BoundsProfile, Verdict, decide_splicing, theorem_bounds
from app.management.base import EX_USAGE, SplicingCommand, write_text
from app.respect import RespectContext
from app.serializers import automaton_to_json, dumps, format_word, system_to_json
from app.syntactic import syntactic_monoid

BOUND_OPTIONS = ('axiom_lt', 'inner_lt', 'outer_lt')


class Command(SplicingCommand):
    help = (
        'Decide se uma linguagem regular é uma linguagem de splicing. '
        'Sai com 0 (sim), 1 (não) ou 2 (inconclusivo).'
    )

    def add_arguments(self, parser):
        self.add_lang_arguments(parser, alphabet_required=True)
        self.add_variant_argument(parser)
        parser.add_argument('--bounds', choices=['theorem', 'custom'], help='padrão: theorem')
        parser.add_argument('--axiom-lt', type=int)
        parser.add_argument('--inner-lt', type=int)
        parser.add_argument('--outer-lt', type=int)
        parser.add_argument('--prune', action='store_true', help='mantém só as regras minimais no certificado')
        parser.add_argument('--threads', type=int, help='threads para filtrar as regras candidatas')
        parser.add_argument('--emit-system', metavar='OUT')
        parser.add_argument('--emit-closure', metavar='OUT')
        parser.add_argument('--stats', action='store_true', help='imprime estatísticas em JSON')

    def check_bounds(self, options):
        given = [options[name] is not None for name in BOUND_OPTIONS]
        if options['bounds'] == 'custom' and not all(given):
            raise CommandError('--bounds custom exige --axiom-lt, --inner-lt e --outer-lt', returncode=EX_USAGE)
        if options['bounds'] == 'theorem' and any(given):
            raise CommandError('--bounds theorem não aceita limites personalizados', returncode=EX_USAGE)
        if any(given) and not all(given):
            raise CommandError('informe --axiom-lt, --inner-lt e --outer-lt juntos', returncode=EX_USAGE)

    def perform(self, *args, **options):
        self.check_bounds(options)
        lang = self.lang(options)
        ctx = RespectContext(syntactic_monoid(lang))
        if options['axiom_lt'] is not None:
            bounds = BoundsProfile.custom(
                options['variant'], options['axiom_lt'], options['inner_lt'], options['outer_lt'],
            )
        else:
            bounds = theorem_bounds(ctx.monoid.size, options['variant'])
        decision = decide_splicing(lang, options['variant'], bounds, options['prune'], options['threads'], ctx=ctx)

        if decision.verdict == Verdict.YES:
            self.stdout.write(f'sim: o sistema canônico com {len(decision.system.rules)} regras gera a linguagem')
        elif decision.verdict == Verdict.NO:
            self.stdout.write(f'não: {format_word(decision.witness)} pertence à linguagem e não a L(I, R)')
        else:
            self.stdout.write(f'inconclusivo: {decision.reason}; {format_word(decision.witness)} não é gerada')
        if options['stats']:
            self.stdout.write(dumps(decision.stats.as_dict()))
        if options['emit_system']:
            write_text(options['emit_system'], system_to_json(decision.system))
        if options['emit_closure']:
            write_text(options['emit_closure'], automaton_to_json(decision.closure.automaton))
        if decision.verdict.exit_code:
            self.stdout.flush()
            sys.exit(decision.verdict.exit_code)
