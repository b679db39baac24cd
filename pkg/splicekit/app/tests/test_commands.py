import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from ..automata import equivalent, language_of
from ..closure import closure_language
from ..regex import parse_regex
from ..serializers import automaton_from_json, automaton_to_json, system_from_json, system_to_json
from ..splicing import ClassicRule, SplicingSystem, Variant
from .strategies import AB


class CommandTestCase(SimpleTestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def path(self, name):
        return os.path.join(self.directory.name, name)

    def run_command(self, *args, **options):
        out, err = StringIO(), StringIO()
        call_command(*args, stdout=out, stderr=err, **options)
        return out.getvalue()

    def write_example_system(self):
        system = SplicingSystem(
            Variant.CLASSIC, AB, ('ab',), (ClassicRule('a', 'b', '', 'ab'), ClassicRule('ab', '', 'a', 'b')),
        )
        path = self.path('example.json')
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(system_to_json(system))
        return path


class MonoidCommandTest(CommandTestCase):

    def test_json_output(self):
        '''
        O monoide de a+b+ em JSON tem "size":5.
        '''
        output = self.run_command('monoid', lang='a+b+', alphabet='ab', json=True)
        self.assertIn('"size":5', output)
        data = json.loads(output)
        self.assertEqual(data['generators'], {'a': 1, 'b': 2})
        self.assertEqual(data['representatives'], ['', 'a', 'b', 'ab', 'ba'])

    def test_summary(self):
        '''
        Sem --json, um resumo legível com a tabela.
        '''
        output = self.run_command('monoid', lang='(aa)*', alphabet='a')
        self.assertIn('monoide sintático com 2 elementos', output)

    def test_bad_regex(self):
        '''
        Expressão mal formada sai com código 65.
        '''
        with self.assertRaises(CommandError) as caught:
            self.run_command('monoid', lang='(ab', alphabet='ab')
        self.assertEqual(caught.exception.returncode, 65)

    def test_language_from_file(self):
        '''
        --lang aceita um arquivo JSON de autômato.
        '''
        path = self.path('lang.json')
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(json.dumps({
                'alphabet': ['a'], 'states': 2, 'initial': [0], 'accepting': [0],
                'edges': [[0, 'a', 1], [1, 'a', 0]], 'epsilon': [],
            }))
        self.assertIn('"size":2', self.run_command('monoid', lang=path, json=True))

    def test_missing_language_file(self):
        '''
        Arquivo ausente sai com código 66.
        '''
        with self.assertRaises(CommandError) as caught:
            self.run_command('monoid', lang=self.path('missing.json'))
        self.assertEqual(caught.exception.returncode, 66)


class SpliceCommandTest(CommandTestCase):

    def test_classic_example(self):
        '''
        ab com ab pela regra (a, b; ε, ab) imprime aab.
        '''
        output = self.run_command('splice', variant='classic', rule='a,b;,ab', w1='ab', w2='ab')
        self.assertEqual(output, 'aab\n')

    def test_trace_shows_position(self):
        '''
        Com --trace, regras clássicas mostram a posição de splicing.
        '''
        output = self.run_command('splice', variant='classic', rule='a,b;,ab', w1='ab', w2='ab', trace=True)
        self.assertEqual(output, 'aab 1\n')

    def test_empty_result_word(self):
        '''
        A palavra vazia aparece como "".
        '''
        output = self.run_command('splice', variant='pixton', rule='a,b;', w1='a', w2='b')
        self.assertEqual(output, '""\n')

    def test_usage_error(self):
        '''
        Variante desconhecida é erro de uso, código 64.
        '''
        with self.assertRaises(CommandError) as caught:
            self.run_command('splice', '--variant', 'other', '--rule', 'a,b;c', '--w1', 'a', '--w2', 'b')
        self.assertEqual(caught.exception.returncode, 64)

    def test_rule_syntax_error(self):
        '''
        Regra mal formada sai com código 65.
        '''
        with self.assertRaises(CommandError) as caught:
            self.run_command('splice', variant='classic', rule='a,b,c;d', w1='a', w2='b')
        self.assertEqual(caught.exception.returncode, 65)


class RespectCommandTest(CommandTestCase):

    def test_respecting_rule(self):
        '''
        (a, b; ε, ab) respeita a+b+.
        '''
        output = self.run_command('respect', lang='a+b+', alphabet='ab', variant='classic', rule='a,b;,ab')
        self.assertIn('respeita a linguagem', output)
        self.assertNotIn('não respeita', output)

    def test_witness(self):
        '''
        Com --witness, uma regra que não respeita vem com contraexemplo.
        '''
        output = self.run_command(
            'respect', lang='a+b+', alphabet='ab', variant='classic', rule=',a;b,', witness=True,
        )
        self.assertIn('não respeita', output)
        self.assertIn('fora da linguagem', output)


    def test_language_from_at_file(self):
        '''
        --lang @arquivo lê o autômato do arquivo, qualquer que seja a extensão.
        '''
        path = self.path('plus.automaton')
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(automaton_to_json(language_of(parse_regex('a+b+', AB))))
        output = self.run_command('respect', lang='@' + path, variant='classic', rule='a,b;,ab')
        self.assertIn('respeita a linguagem', output)
        self.assertNotIn('não respeita', output)

    def test_missing_at_file(self):
        '''
        @arquivo ausente sai com código 66.
        '''
        with self.assertRaises(CommandError) as caught:
            self.run_command('respect', lang='@' + self.path('missing'), variant='classic', rule='a,b;,ab')
        self.assertEqual(caught.exception.returncode, 66)


class ClosureCommandsTest(CommandTestCase):

    def test_closure_summary_and_words(self):
        '''
        O fecho do exemplo lista as palavras de a+b+ e grava JSON e DOT.
        '''
        system_path = self.write_example_system()
        output = self.run_command(
            'closure', system=system_path, words=3,
            emit_closure=self.path('closure.json'), dot=self.path('closure.dot'),
        )
        self.assertTrue(output.endswith('ab\naab\nabb\n'))
        with open(self.path('closure.json'), encoding='utf-8') as handle:
            emitted = language_of(automaton_from_json(handle.read()))
        with open(system_path, encoding='utf-8') as handle:
            system = system_from_json(handle.read())
        self.assertTrue(equivalent(emitted, closure_language(system))[0])
        with open(self.path('closure.dot'), encoding='utf-8') as handle:
            self.assertTrue(handle.read().startswith('digraph closure {'))

    def test_closure_trace(self):
        '''
        --trace lista as arestas acrescentadas por rodada.
        '''
        output = self.run_command('closure', system=self.write_example_system(), trace=True)
        self.assertIn('rodada 1: regra 0', output)

    def test_missing_system(self):
        '''
        Sistema ausente sai com código 66.
        '''
        with self.assertRaises(CommandError) as caught:
            self.run_command('closure', system=self.path('missing.json'))
        self.assertEqual(caught.exception.returncode, 66)

    def test_oracle(self):
        '''
        O oráculo lista as palavras do fecho limitado em ordem ≤_ℓℓ.
        '''
        output = self.run_command('oracle', system=self.write_example_system(), report_len=4)
        self.assertEqual(output.split(), ['ab', 'aab', 'abb', 'aaab', 'aabb', 'abbb'])


class PumpCommandTest(CommandTestCase):

    def test_even_length(self):
        '''
        (aa)*, w = aaaa e j = 10: fatoração (ε, aa, aa) e z̃ = a^22.
        '''
        output = self.run_command('pump', lang='(aa)*', alphabet='a', word='aaaa', j=10)
        self.assertIn('α = ε', output)
        self.assertIn('β = aa', output)
        self.assertIn('z̃ = a^22', output)

    def test_short_word(self):
        '''
        Palavra curta demais sai com código 65.
        '''
        with self.assertRaises(CommandError) as caught:
            self.run_command('pump', lang='(aa)*', alphabet='a', word='aaa', j=10)
        self.assertEqual(caught.exception.returncode, 65)


class DecideCommandTest(CommandTestCase):

    def test_no_with_witness(self):
        '''
        (aa)* clássica com limites do teorema: sai com 1 e imprime a^16.
        '''
        out = StringIO()
        with self.assertRaises(SystemExit) as caught:
            call_command(
                'decide', lang='(aa)*', alphabet='a', variant='classic', bounds='theorem', stdout=out,
            )
        self.assertEqual(caught.exception.code, 1)
        self.assertIn('a^16', out.getvalue())

    def test_yes_with_emitted_files(self):
        '''
        a+b+ com limites personalizados: sim, e os arquivos gravados são idênticos entre execuções.
        '''
        options = dict(lang='a+b+', alphabet='ab', variant='classic', axiom_lt=3, inner_lt=3, outer_lt=3, prune=True)
        first = self.run_command('decide', emit_system=self.path('one.json'), **options)
        second = self.run_command('decide', emit_system=self.path('two.json'), **options)
        self.assertTrue(first.startswith('sim'))
        self.assertEqual(first, second)
        with open(self.path('one.json'), encoding='utf-8') as one, open(self.path('two.json'), encoding='utf-8') as two:
            self.assertEqual(one.read(), two.read())

    def test_stats(self):
        '''
        --stats imprime as contagens em JSON.
        '''
        with self.assertRaises(SystemExit):
            output = StringIO()
            call_command('decide', lang='(aa)*', alphabet='a', variant='pixton', stats=True, stdout=output)
        stats = json.loads(output.getvalue().splitlines()[1])
        self.assertEqual(stats['monoid_size'], 2)
        self.assertEqual(stats['candidate_rules'], 384)

    def test_guard(self):
        '''
        a+b+ com limites do teorema excede o limite de candidatas: código 65.
        '''
        with self.assertRaises(CommandError) as caught:
            self.run_command('decide', lang='a+b+', alphabet='ab', variant='classic')
        self.assertEqual(caught.exception.returncode, 65)
        self.assertIn('SPLICEKIT_CANDIDATE_LIMIT', str(caught.exception))

    def test_alphabet_is_required(self):
        '''
        decide sem --alphabet é erro de uso.
        '''
        with self.assertRaises(CommandError) as caught:
            self.run_command('decide', lang='(aa)*', variant='classic')
        self.assertEqual(caught.exception.returncode, 64)

    def test_conflicting_bounds(self):
        '''
        --bounds theorem com limites personalizados é erro de uso.
        '''
        with self.assertRaises(CommandError) as caught:
            self.run_command('decide', lang='a+b+', alphabet='ab', variant='classic', bounds='theorem', axiom_lt=3)
        self.assertEqual(caught.exception.returncode, 64)
