from django.test import SimpleTestCase, override_settings
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from ..automata import Alphabet, language_of
from ..exceptions import PreconditionError
from ..regex import parse_regex
from ..syntactic import (
    PumpingFactorization,
    pump_normalize,
    pumping_factorization,
    pumping_violations,
    syntactic_monoid,
)
from .strategies import AB, context_signature, small_dfas


def brute_force_size(dfa, contexts, max_len=4):
    return len({context_signature(dfa, word, contexts) for word in dfa.alphabet.words_up_to(max_len)})


class SyntacticMonoidTest(SimpleTestCase):

    def setUp(self):
        self.a = Alphabet.of('a')
        self.even = language_of(parse_regex('(aa)*', self.a))
        self.plus = language_of(parse_regex('a+b+', AB))

    def test_sizes_agree_with_brute_force(self):
        '''
        |M_(aa)*| = 2 e |M_a+b+| = 5, conferidos contra a congruência calculada por contextos.
        '''
        self.assertEqual(syntactic_monoid(self.even).size, 2)
        self.assertEqual(brute_force_size(self.even, list(self.a.words_up_to(3))), 2)
        self.assertEqual(syntactic_monoid(self.plus).size, 5)
        self.assertEqual(brute_force_size(self.plus, list(AB.words_up_to(3))), 5)

    def test_representatives_and_zero(self):
        '''
        Representantes em ordem de geração; "ba" é o zero de a+b+; (aa)* não tem zero.
        '''
        monoid = syntactic_monoid(self.plus)
        self.assertEqual(monoid.representatives, ('', 'a', 'b', 'ab', 'ba'))
        self.assertEqual(monoid.zero, monoid.class_of('ba'))
        self.assertEqual(monoid.class_of('abab'), monoid.zero)
        self.assertIsNone(syntactic_monoid(self.even).zero)
        self.assertEqual(monoid.accepting, frozenset({monoid.class_of('ab')}))

    def test_multiply_matches_concatenation(self):
        '''
        h(uv) = h(u)·h(v) e a identidade é h(ε).
        '''
        monoid = syntactic_monoid(self.plus)
        for u in AB.words_up_to(2):
            for v in AB.words_up_to(2):
                self.assertEqual(monoid.class_of(u + v), monoid.multiply(monoid.class_of(u), monoid.class_of(v)))
        self.assertEqual(monoid.class_of(''), monoid.identity)

    @override_settings(SPLICEKIT_ASSOCIATIVITY_LIMIT=1, SPLICEKIT_ASSOCIATIVITY_SAMPLES=50)
    def test_sampled_associativity_check(self):
        '''
        Acima do limite a associatividade é verificada por amostragem, sem mudar o resultado.
        '''
        self.assertEqual(syntactic_monoid(self.plus).size, 5)

    @settings(derandomize=True, deadline=None, max_examples=50)
    @given(small_dfas())
    def test_class_of_agrees_with_congruence(self, dfa):
        '''
        Duas palavras de comprimento <= 4 têm a mesma classe sse têm os mesmos contextos.
        '''
        monoid = syntactic_monoid(dfa)
        contexts = list(AB.words_up_to(max(dfa.state_count - 1, 0)))
        words = list(AB.words_up_to(4))
        signature = {word: context_signature(dfa, word, contexts) for word in words}
        for u in words:
            for v in words:
                self.assertEqual(monoid.class_of(u) == monoid.class_of(v), signature[u] == signature[v])

    @settings(derandomize=True, deadline=None, max_examples=30)
    @given(small_dfas())
    def test_representatives_are_least(self, dfa):
        '''
        Cada representante está na sua classe e nenhuma palavra menor está nela.
        '''
        monoid = syntactic_monoid(dfa)
        for element, representative in enumerate(monoid.representatives):
            self.assertEqual(monoid.class_of(representative), element)
            for word in AB.words_up_to(len(representative)):
                if word == representative:
                    break
                self.assertNotEqual(monoid.class_of(word), element)


class PumpingTest(SimpleTestCase):

    def setUp(self):
        self.even = language_of(parse_regex('(aa)*', Alphabet.of('a')))
        self.monoid = syntactic_monoid(self.even)

    def test_factorization_of_even_word(self):
        '''
        Para (aa)* e w = aaaa, a fatoração é (ε, aa, aa).
        '''
        self.assertEqual(pumping_factorization(self.monoid, 'aaaa'), PumpingFactorization('', 'aa', 'aa'))

    def test_short_word(self):
        '''
        Palavras com |w| < m² não têm fatoração garantida.
        '''
        with self.assertRaises(PreconditionError):
            pumping_factorization(self.monoid, 'aaa')

    def test_normalize_single_replacement(self):
        '''
        z = aaaa com (ε, aa, aa) e j = 10 vira a^22 com uma única substituição.
        '''
        factorization = PumpingFactorization('', 'aa', 'aa')
        self.assertEqual(pump_normalize(self.monoid, 'aaaa', factorization, 10), 'a' * 22)

    def test_normalize_preconditions(self):
        '''
        j precisa ser par e maior que |z| + |αβγ|; β não pode ser vazia.
        '''
        factorization = PumpingFactorization('', 'aa', 'aa')
        with self.assertRaises(PreconditionError):
            pump_normalize(self.monoid, 'aaaa', factorization, 11)
        with self.assertRaises(PreconditionError):
            pump_normalize(self.monoid, 'aaaa', factorization, 8)
        with self.assertRaises(PreconditionError):
            pump_normalize(self.monoid, 'aaaa', PumpingFactorization('a', '', 'a'), 10)

    def test_iteration_limit(self):
        '''
        Um orçamento de iterações esgotado levanta erro.
        '''
        with self.assertRaises(PreconditionError):
            pump_normalize(self.monoid, 'aaaa', PumpingFactorization('', 'aa', 'aa'), 10, max_iterations=0)

    @settings(
        derandomize=True,
        deadline=None,
        max_examples=100,
        suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
    )
    @given(small_dfas(max_states=3), st.data())
    def test_pumping_properties(self, dfa, data):
        '''
        α ~ αβ, γ ~ βγ e β ≠ ε; a normalização preserva a classe, satisfaz (a) ou (b)
        em toda ocorrência e usa no máximo |z|² iterações.
        '''
        monoid = syntactic_monoid(dfa)
        assume(monoid.size <= 5)
        m2 = monoid.size ** 2
        word = data.draw(st.text(alphabet=['a', 'b'], min_size=m2, max_size=m2 + 4))
        f = pumping_factorization(monoid, word)
        self.assertTrue(f.beta)
        self.assertEqual(f.word, word)
        self.assertEqual(monoid.class_of(f.alpha), monoid.class_of(f.alpha + f.beta))
        self.assertEqual(monoid.class_of(f.gamma), monoid.class_of(f.beta + f.gamma))

        z = data.draw(st.text(alphabet=['a', 'b'], max_size=2)) + word
        j = len(z) + len(word) + 1
        j += j % 2
        normalized = pump_normalize(monoid, z, f, j, max_iterations=len(z) ** 2)
        self.assertEqual(monoid.class_of(normalized), monoid.class_of(z))
        self.assertEqual(pumping_violations(normalized, f, j), [])
        head = f.alpha + f.beta * (j // 2)
        tail = f.beta * (j // 2) + f.gamma
        for k in range(len(normalized) - len(word) + 1):
            if normalized[k:k + len(word)] == word:
                end = k + len(word)
                self.assertTrue(
                    normalized[k:].startswith(head) or normalized[:end].endswith(tail),
                    (normalized, k),
                )
