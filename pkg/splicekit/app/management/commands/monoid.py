from app.management.base import SplicingCommand
from app.serializers import format_word, monoid_to_json
from app.syntactic import syntactic_monoid


class Command(SplicingCommand):
    help = 'Calcula o monoide sintático de uma linguagem regular.'

    def add_arguments(self, parser):
        self.add_lang_arguments(parser)
        parser.add_argument('--json', action='store_true', help='imprime o monoide em JSON')

    def perform(self, *args, **options):
        monoid = syntactic_monoid(self.lang(options))
        if options['json']:
            self.stdout.write(monoid_to_json(monoid))
            return
        names = [format_word(word) for word in monoid.representatives]
        width = max(map(len, names))
        self.stdout.write(f'monoide sintático com {monoid.size} elementos')
        self.stdout.write(f'identidade: {names[monoid.identity]}')
        self.stdout.write('aceitação: ' + ' '.join(names[e] for e in sorted(monoid.accepting)))
        if monoid.zero is not None:
            self.stdout.write(f'zero: {names[monoid.zero]}')
        self.stdout.write(' ' * width + ' | ' + ' '.join(name.rjust(width) for name in names))
        for name, row in zip(names, monoid.table):
            self.stdout.write(name.rjust(width) + ' | ' + ' '.join(names[e].rjust(width) for e in row))
