from app.management.base import SplicingCommand
from app.serializers import format_word
from app.syntactic import pump_normalize, pumping_factorization, syntactic_monoid


class Command(SplicingCommand):
    help = 'Fatora uma palavra pelo argumento de bombeamento e normaliza z.'

    def add_arguments(self, parser):
        self.add_lang_arguments(parser)
        parser.add_argument('--word', required=True, help='palavra a fatorar, |w| >= m²')
        parser.add_argument('--j', type=int, required=True, help='expoente par, maior que |z| + |w|')
        parser.add_argument('--z', help='palavra a normalizar (padrão: a própria palavra)')

    def perform(self, *args, **options):
        monoid = syntactic_monoid(self.lang(options))
        factorization = pumping_factorization(monoid, monoid.alphabet.check_word(options['word']))
        z = options['word'] if options['z'] is None else options['z']
        normalized = pump_normalize(monoid, z, factorization, options['j'])
        self.stdout.write(f'α = {format_word(factorization.alpha)}')
        self.stdout.write(f'β = {format_word(factorization.beta)}')
        self.stdout.write(f'γ = {format_word(factorization.gamma)}')
        self.stdout.write(f'z̃ = {format_word(normalized)}')
