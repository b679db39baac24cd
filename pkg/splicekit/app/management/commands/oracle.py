from app.management.base import SplicingCommand, read_system
from app.splicing import bounded_closure


class Command(SplicingCommand):
    help = 'Lista as palavras do fecho limitado de um sistema de splicing (oráculo).'

    def add_arguments(self, parser):
        parser.add_argument('--system', required=True, help='arquivo JSON do sistema')
        parser.add_argument('--report-len', type=int, required=True)
        parser.add_argument('--cap-len', type=int)

    def perform(self, *args, **options):
        system = read_system(options['system'])
        words = bounded_closure(system, options['report_len'], options['cap_len'])
        for word in system.alphabet.sorted(words):
            self.stdout.write(word or '""')
