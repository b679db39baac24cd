"""
Estratégias do hypothesis e oráculos de força bruta usados nos testes.
"""
from hypothesis import strategies as st

from app.automata import Alphabet, Dfa, minimize
from app.splicing import ClassicRule, PixtonRule

AB = Alphabet.of('ab')


@st.composite
def small_dfas(draw, alphabet=AB, max_states=4):
    """DFA completo aleatório, já minimizado."""
    size = draw(st.integers(min_value=1, max_value=max_states))
    state = st.integers(min_value=0, max_value=size - 1)
    rows = draw(st.lists(
        st.tuples(*[state] * len(alphabet)),
        min_size=size,
        max_size=size,
    ))
    accepting = draw(st.frozensets(state))
    return minimize(Dfa(alphabet, size, 0, accepting, tuple(rows)))


def words(alphabet=AB, max_size=3):
    return st.text(alphabet=list(alphabet), max_size=max_size)


def classic_rules(alphabet=AB, max_size=3):
    word = words(alphabet, max_size)
    return st.builds(ClassicRule, word, word, word, word)


def pixton_rules(alphabet=AB, max_size=3):
    word = words(alphabet, max_size)
    return st.builds(PixtonRule, word, word, word)


def rules(alphabet=AB, max_size=3):
    return st.one_of(classic_rules(alphabet, max_size), pixton_rules(alphabet, max_size))


def context_signature(dfa, word, contexts):
    """Conjunto dos contextos (x, y) com x·word·y aceita: a congruência por força bruta."""
    return frozenset((x, y) for x in contexts for y in contexts if dfa.accepts(x + word + y))


def regexes(alphabet='abc', max_leaves=8):
    """
    Expressões que re.fullmatch entende do mesmo jeito: alternativas e
    repetições sempre entre parênteses.
    """
    leaves = st.sampled_from([*alphabet, '()'])
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            st.tuples(inner, inner).map(''.join),
            st.tuples(inner, inner).map(lambda pair: f'({pair[0]}|{pair[1]})'),
            inner.map(lambda body: f'({body})*'),
            inner.map(lambda body: f'({body})+'),
        ),
        max_leaves=max_leaves,
    )
