import re

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from ..automata import Alphabet, language_of
from ..exceptions import RegexSyntaxError, UnknownSymbolError
from ..regex import parse_regex
from .strategies import AB, regexes

PATTERNS = ['a+b+', '(aa)*', 'a(b|)a', '(ab|ba)*', 'a*b*|b+a', '()', '(a|b)*abb', 'b(aa)*']


class ParseRegexTest(SimpleTestCase):

    def test_agrees_with_re(self):
        '''
        Para cada padrão, o Nfa aceita as mesmas palavras de comprimento <= 6 que re.fullmatch.
        '''
        for pattern in PATTERNS:
            nfa = parse_regex(pattern, AB)
            for word in AB.words_up_to(6):
                with self.subTest(pattern=pattern, word=word):
                    self.assertEqual(nfa.accepts(word), re.fullmatch(pattern, word) is not None)

    @settings(derandomize=True, deadline=None, max_examples=60)
    @given(st.sampled_from(['a', 'ab', 'abc']).flatmap(lambda symbols: st.tuples(st.just(symbols), regexes(symbols))))
    def test_random_expressions_agree_with_re(self, alphabet_and_pattern):
        '''
        Expressões aleatórias sobre até três letras: o DFA mínimo aceita as mesmas
        palavras de comprimento <= 8 que re.fullmatch.
        '''
        symbols, pattern = alphabet_and_pattern
        alphabet = Alphabet.of(symbols)
        dfa = language_of(parse_regex(pattern, alphabet))
        compiled = re.compile(pattern)
        for word in alphabet.words_up_to(8):
            self.assertEqual(dfa.accepts(word), compiled.fullmatch(word) is not None, (pattern, word))

    def test_empty_expression_is_epsilon(self):
        '''
        A expressão vazia denota apenas a palavra vazia.
        '''
        nfa = parse_regex('', AB)
        self.assertTrue(nfa.accepts(''))
        self.assertFalse(nfa.accepts('a'))

    def test_operator_without_operand(self):
        '''
        "*" no início ou logo depois de "|" é erro de sintaxe na posição do operador.
        '''
        with self.assertRaises(RegexSyntaxError) as caught:
            parse_regex('*a', AB)
        self.assertEqual(caught.exception.position, 0)
        with self.assertRaises(RegexSyntaxError) as caught:
            parse_regex('a|*', AB)
        self.assertEqual(caught.exception.position, 2)

    def test_unbalanced_parentheses(self):
        '''
        Parêntese não fechado aponta para a abertura; parêntese sobrando aponta para ele mesmo.
        '''
        with self.assertRaises(RegexSyntaxError) as caught:
            parse_regex('(ab', AB)
        self.assertEqual(caught.exception.position, 0)
        with self.assertRaises(RegexSyntaxError) as caught:
            parse_regex('ab)', AB)
        self.assertEqual(caught.exception.position, 2)

    def test_unknown_symbol(self):
        '''
        Símbolo fora do alfabeto.
        '''
        with self.assertRaises(UnknownSymbolError) as caught:
            parse_regex('ac', AB)
        self.assertEqual(caught.exception.symbol, 'c')

    def test_alphabet_with_operators(self):
        '''
        O alfabeto não pode conter caracteres de operador.
        '''
        with self.assertRaises(RegexSyntaxError):
            parse_regex('a', Alphabet.of('a*'))
