from app.automata import enumerate_words, language_of
from app.closure import Side, build_closure
from app.management.base import SplicingCommand, read_system, write_text
from app.serializers import automaton_to_json, closure_to_dot


class Command(SplicingCommand):
    help = 'Constrói o autômato da linguagem gerada por um sistema de splicing.'

    def add_arguments(self, parser):
        parser.add_argument('--system', required=True, help='arquivo JSON do sistema')
        parser.add_argument('--emit-closure', metavar='OUT', help='grava o autômato saturado em JSON')
        parser.add_argument('--dot', metavar='OUT', help='grava o autômato saturado em DOT')
        parser.add_argument('--trace', action='store_true', help='lista as arestas ε acrescentadas por rodada')
        parser.add_argument('--words', type=int, metavar='N', help='lista as palavras aceitas de comprimento <= N')

    def perform(self, *args, **options):
        system = read_system(options['system'])
        closure = build_closure(system)
        if options['trace']:
            for edge in closure.added_epsilon:
                where = 'entrada' if edge.side == Side.INTO_ENTRY else 'saída'
                self.stdout.write(
                    f'rodada {edge.round}: regra {edge.rule_id} ({system.rules[edge.rule_id]}) '
                    f'{where} {edge.source} -> {edge.target}'
                )
        minimal = language_of(closure.automaton)
        self.stdout.write(
            f'{closure.state_count} estados, {len(closure.added_epsilon)} arestas ε acrescentadas '
            f'em {closure.rounds} rodadas; DFA mínimo com {minimal.state_count} estados'
        )
        if options['words'] is not None:
            for word in enumerate_words(minimal, options['words']):
                self.stdout.write(word or '""')
        if options['emit_closure']:
            write_text(options['emit_closure'], automaton_to_json(closure.automaton))
        if options['dot']:
            write_text(options['dot'], closure_to_dot(closure))
