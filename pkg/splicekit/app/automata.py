"""
Autômatos finitos: as representações de linguagens regulares usadas por toda
a aplicação.

Nfa e Dfa são imutáveis. Todas as construções (determinização, minimização,
produtos) numeram os estados em ordem de busca em largura a partir do estado
inicial, percorrendo os símbolos na ordem do alfabeto, para que a saída
serializada seja estável.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Iterator

from .exceptions import (
    AlphabetError,
    AlphabetMismatchError,
    PreconditionError,
    UnknownSymbolError,
)

logger = logging.getLogger(__name__)

Word = str


@dataclass(frozen=True)
class Alphabet:
    """
    Alfabeto ordenado de símbolos de um caractere.

    Atributos:
        symbols (tuple[str, ...]): os símbolos, sem repetição. A ordem define a
            componente lexicográfica da ordem comprimento-lexicográfica.
    """
    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        symbols = tuple(self.symbols)
        object.__setattr__(self, 'symbols', symbols)
        for symbol in symbols:
            if not isinstance(symbol, str) or len(symbol) != 1:
                raise AlphabetError(f'símbolo inválido: {symbol!r}')
        if len(set(symbols)) != len(symbols):
            raise AlphabetError(f'símbolos repetidos em {"".join(symbols)!r}')

    @classmethod
    def of(cls, text: Iterable[str]) -> Alphabet:
        return cls(tuple(text))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.index

    def __str__(self) -> str:
        return ''.join(self.symbols)

    @cached_property
    def index(self) -> dict[str, int]:
        return {symbol: i for i, symbol in enumerate(self.symbols)}

    def check_word(self, word: Word) -> Word:
        for symbol in word:
            if symbol not in self.index:
                raise UnknownSymbolError(symbol)
        return word

    def sort_key(self, word: Word) -> tuple[int, tuple[int, ...]]:
        return len(word), tuple(self.index[symbol] for symbol in word)

    def sorted(self, words: Iterable[Word]) -> list[Word]:
        return sorted(words, key=self.sort_key)

    def words_up_to(self, max_len: int) -> Iterator[Word]:
        """Todas as palavras de comprimento <= max_len, em ordem ≤_ℓℓ."""
        for length in range(max_len + 1):
            for letters in product(self.symbols, repeat=length):
                yield ''.join(letters)

    def words_below(self, bound: int) -> list[Word]:
        """Σ^{<bound} em ordem ≤_ℓℓ."""
        return list(self.words_up_to(bound - 1)) if bound > 0 else []

    def count_below(self, bound: int) -> int:
        return sum(len(self.symbols) ** length for length in range(bound))


def length_lex_cmp(u: Word, v: Word, alphabet: Alphabet | None = None) -> int:
    """
    Compara u e v pela ordem comprimento-lexicográfica: -1, 0 ou 1.

    Sem alfabeto, a ordem das letras é a ordem dos caracteres.
    """
    if alphabet is None:
        key_u, key_v = (len(u), u), (len(v), v)
    else:
        key_u, key_v = alphabet.sort_key(u), alphabet.sort_key(v)
    return (key_u > key_v) - (key_u < key_v)


@dataclass(frozen=True)
class Nfa:
    """
    Autômato finito não determinístico com transições ε.

    Atributos:
        alphabet (Alphabet): o alfabeto.
        state_count (int): estados são os inteiros 0..state_count-1.
        initial (frozenset[int]): estados iniciais.
        accepting (frozenset[int]): estados de aceitação.
        edges (frozenset[tuple[int, str, int]]): transições rotuladas.
        epsilon (frozenset[tuple[int, int]]): transições ε.
    """
    alphabet: Alphabet
    state_count: int
    initial: frozenset[int]
    accepting: frozenset[int]
    edges: frozenset[tuple[int, str, int]] = frozenset()
    epsilon: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        for name in ('initial', 'accepting', 'edges', 'epsilon'):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if self.state_count < 0:
            raise PreconditionError('número de estados negativo')
        states = range(self.state_count)
        for state in self.initial | self.accepting:
            if state not in states:
                raise PreconditionError(f'estado {state} fora do intervalo')
        for source, symbol, target in self.edges:
            if source not in states or target not in states:
                raise PreconditionError(f'transição ({source}, {symbol!r}, {target}) fora do intervalo')
            if symbol not in self.alphabet:
                raise UnknownSymbolError(symbol)
        for source, target in self.epsilon:
            if source not in states or target not in states:
                raise PreconditionError(f'transição ε ({source}, {target}) fora do intervalo')

    @cached_property
    def _successors(self) -> list[dict[str, list[int]]]:
        table: list[dict[str, list[int]]] = [{} for _ in range(self.state_count)]
        for source, symbol, target in sorted(self.edges):
            table[source].setdefault(symbol, []).append(target)
        return table

    @cached_property
    def _epsilon_successors(self) -> list[list[int]]:
        table: list[list[int]] = [[] for _ in range(self.state_count)]
        for source, target in sorted(self.epsilon):
            table[source].append(target)
        return table

    def epsilon_closure(self, states: Iterable[int]) -> frozenset[int]:
        closure = set(states)
        stack = list(closure)
        eps = self._epsilon_successors
        while stack:
            for target in eps[stack.pop()]:
                if target not in closure:
                    closure.add(target)
                    stack.append(target)
        return frozenset(closure)

    def step(self, states: Iterable[int], symbol: str) -> frozenset[int]:
        successors = self._successors
        targets = {t for s in states for t in successors[s].get(symbol, ())}
        return self.epsilon_closure(targets)

    def read(self, word: Word, states: Iterable[int] | None = None) -> frozenset[int]:
        current = self.epsilon_closure(self.initial if states is None else states)
        for symbol in word:
            current = self.step(current, symbol)
        return current

    def accepts(self, word: Word) -> bool:
        self.alphabet.check_word(word)
        return not self.read(word).isdisjoint(self.accepting)


@dataclass(frozen=True)
class Dfa:
    """
    Autômato finito determinístico completo.

    Atributos:
        alphabet (Alphabet): o alfabeto.
        state_count (int): estados são os inteiros 0..state_count-1.
        initial (int): o estado inicial.
        accepting (frozenset[int]): estados de aceitação.
        transitions (tuple[tuple[int, ...], ...]): transitions[q][i] é o destino
            de q pelo i-ésimo símbolo do alfabeto; a função é total.
    """
    alphabet: Alphabet
    state_count: int
    initial: int
    accepting: frozenset[int]
    transitions: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'accepting', frozenset(self.accepting))
        object.__setattr__(self, 'transitions', tuple(tuple(row) for row in self.transitions))
        if self.state_count < 1:
            raise PreconditionError('um DFA completo tem ao menos um estado')
        if len(self.transitions) != self.state_count:
            raise PreconditionError('a tabela de transição não cobre todos os estados')
        states = range(self.state_count)
        if self.initial not in states or not self.accepting <= set(states):
            raise PreconditionError('estado inicial ou de aceitação fora do intervalo')
        for row in self.transitions:
            if len(row) != len(self.alphabet) or any(t not in states for t in row):
                raise PreconditionError('função de transição incompleta')

    def delta(self, state: int, symbol: str) -> int:
        return self.transitions[state][self.alphabet.index[symbol]]

    def run(self, word: Word, state: int | None = None) -> int:
        current = self.initial if state is None else state
        index = self.alphabet.index
        for symbol in word:
            if symbol not in index:
                raise UnknownSymbolError(symbol)
            current = self.transitions[current][index[symbol]]
        return current

    def accepts(self, word: Word) -> bool:
        return self.run(word) in self.accepting

    def live_states(self) -> frozenset[int]:
        """Estados a partir dos quais algum estado de aceitação é alcançável."""
        predecessors: list[set[int]] = [set() for _ in range(self.state_count)]
        for source, row in enumerate(self.transitions):
            for target in row:
                predecessors[target].add(source)
        live = set(self.accepting)
        stack = list(live)
        while stack:
            for source in predecessors[stack.pop()]:
                if source not in live:
                    live.add(source)
                    stack.append(source)
        return frozenset(live)


def _check_same_alphabet(a: Alphabet, b: Alphabet) -> None:
    if a != b:
        raise AlphabetMismatchError(f'alfabetos diferentes: {a} e {b}')


def _crawl(
    alphabet: Alphabet,
    initial: object,
    follow: Callable[[object, str], object],
    final: Callable[[object], bool],
) -> Dfa:
    """
    Explora um DFA implícito a partir de ``initial`` e devolve a versão
    numerada em largura, símbolos na ordem do alfabeto.
    """
    states = [initial]
    numbering = {initial: 0}
    rows: list[tuple[int, ...]] = []
    accepting = set()
    i = 0
    while i < len(states):
        state = states[i]
        if final(state):
            accepting.add(i)
        row = []
        for symbol in alphabet:
            target = follow(state, symbol)
            if target not in numbering:
                numbering[target] = len(states)
                states.append(target)
            row.append(numbering[target])
        rows.append(tuple(row))
        i += 1
    return Dfa(alphabet, len(states), 0, frozenset(accepting), tuple(rows))


def determinize(nfa: Nfa) -> Dfa:
    """Construção de subconjuntos; o conjunto vazio faz o papel de sumidouro."""
    return _crawl(
        nfa.alphabet,
        nfa.epsilon_closure(nfa.initial),
        nfa.step,
        lambda subset: not subset.isdisjoint(nfa.accepting),
    )


def canonical(dfa: Dfa) -> Dfa:
    """Renumera os estados alcançáveis em largura; descarta os inalcançáveis."""
    return _crawl(
        dfa.alphabet,
        dfa.initial,
        lambda state, symbol: dfa.delta(state, symbol),
        lambda state: state in dfa.accepting,
    )


def minimize(dfa: Dfa) -> Dfa:
    """DFA mínimo completo, por refinamento de partições (Moore)."""
    reachable = canonical(dfa)
    block = [int(state in reachable.accepting) for state in range(reachable.state_count)]
    block_count = len(set(block))
    while True:
        signatures: dict[tuple[int, ...], int] = {}
        refined = []
        for state, row in enumerate(reachable.transitions):
            signature = (block[state], *(block[target] for target in row))
            refined.append(signatures.setdefault(signature, len(signatures)))
        block = refined
        if len(signatures) == block_count:
            break
        block_count = len(signatures)
    representative: dict[int, int] = {}
    for state, b in enumerate(block):
        representative.setdefault(b, state)
    return _crawl(
        reachable.alphabet,
        block[reachable.initial],
        lambda b, symbol: block[reachable.delta(representative[b], symbol)],
        lambda b: representative[b] in reachable.accepting,
    )


def complement(dfa: Dfa) -> Dfa:
    return Dfa(
        dfa.alphabet,
        dfa.state_count,
        dfa.initial,
        frozenset(range(dfa.state_count)) - dfa.accepting,
        dfa.transitions,
    )


def _product(a: Dfa, b: Dfa, accept: Callable[[bool, bool], bool]) -> Dfa:
    _check_same_alphabet(a.alphabet, b.alphabet)
    return _crawl(
        a.alphabet,
        (a.initial, b.initial),
        lambda pair, symbol: (a.delta(pair[0], symbol), b.delta(pair[1], symbol)),
        lambda pair: accept(pair[0] in a.accepting, pair[1] in b.accepting),
    )


def intersect(a: Dfa, b: Dfa) -> Dfa:
    return _product(a, b, lambda x, y: x and y)


def union(a: Dfa, b: Dfa) -> Dfa:
    return _product(a, b, lambda x, y: x or y)


def difference(a: Dfa, b: Dfa) -> Dfa:
    return _product(a, b, lambda x, y: x and not y)


def _least_word(dfa: Dfa, wanted: Callable[[int], bool]) -> Word | None:
    # A busca em largura, com símbolos na ordem do alfabeto, visita os
    # estados na ordem ≤_ℓℓ de suas palavras de acesso.
    access = {dfa.initial: ''}
    queue = deque([dfa.initial])
    while queue:
        state = queue.popleft()
        if wanted(state):
            return access[state]
        for symbol, target in zip(dfa.alphabet, dfa.transitions[state]):
            if target not in access:
                access[target] = access[state] + symbol
                queue.append(target)
    return None


def shortest_word(dfa: Dfa) -> Word | None:
    """A menor palavra aceita na ordem ≤_ℓℓ, ou None se a linguagem é vazia."""
    return _least_word(dfa, lambda state: state in dfa.accepting)


def is_empty(dfa: Dfa) -> bool:
    return shortest_word(dfa) is None


def equivalent(a: Dfa, b: Dfa) -> tuple[bool, Word | None]:
    """
    Testa L(a) = L(b). Se diferentes, devolve também a menor palavra (≤_ℓℓ)
    da diferença simétrica.
    """
    symmetric = _product(a, b, lambda x, y: x != y)
    witness = shortest_word(symmetric)
    return witness is None, witness


def is_finite(dfa: Dfa) -> bool:
    """Verdadeiro se não há ciclo entre estados alcançáveis e vivos."""
    reachable = canonical(dfa)
    live = reachable.live_states()
    colour = dict.fromkeys(live, 0)
    for root in sorted(live):
        if colour[root]:
            continue
        colour[root] = 1
        stack = [(root, iter(reachable.transitions[root]))]
        while stack:
            state, targets = stack[-1]
            for target in targets:
                if target not in live:
                    continue
                if colour[target] == 1:
                    return False
                if colour[target] == 0:
                    colour[target] = 1
                    stack.append((target, iter(reachable.transitions[target])))
                    break
            else:
                colour[state] = 2
                stack.pop()
    return True


def enumerate_words(dfa: Dfa, max_len: int) -> list[Word]:
    """As palavras de L(dfa) com comprimento <= max_len, em ordem ≤_ℓℓ."""
    if max_len < 0:
        raise PreconditionError('max_len deve ser >= 0')
    live = dfa.live_states()
    words = []
    layer = [('', dfa.initial)] if dfa.initial in live else []
    for length in range(max_len + 1):
        words.extend(word for word, state in layer if state in dfa.accepting)
        if length == max_len:
            break
        layer = [
            (word + symbol, target)
            for word, state in layer
            for symbol, target in zip(dfa.alphabet, dfa.transitions[state])
            if target in live
        ]
    return words


def finite_words(dfa: Dfa) -> list[Word]:
    """Todas as palavras de uma linguagem finita, em ordem ≤_ℓℓ."""
    if not is_finite(dfa):
        raise PreconditionError('a linguagem é infinita')
    return enumerate_words(dfa, dfa.state_count)


def bounded_length(alphabet: Alphabet, bound: int) -> Dfa:
    """DFA de Σ^{<bound}: o estado i conta o comprimento lido, bound é o sumidouro."""
    sink = max(bound, 0)
    rows = [tuple([min(i + 1, sink)] * len(alphabet)) for i in range(sink + 1)]
    return Dfa(alphabet, sink + 1, 0, frozenset(range(sink)), tuple(rows))


def universal(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, 1, 0, frozenset({0}), ((0,) * len(alphabet),))


def from_words(alphabet: Alphabet, words: Iterable[Word]) -> Nfa:
    """Trie das palavras dadas."""
    children: list[dict[str, int]] = [{}]
    accepting = set()
    edges = set()
    for word in words:
        alphabet.check_word(word)
        state = 0
        for symbol in word:
            if symbol not in children[state]:
                children[state][symbol] = len(children)
                edges.add((state, symbol, len(children)))
                children.append({})
            state = children[state][symbol]
        accepting.add(state)
    return Nfa(alphabet, len(children), frozenset({0}), frozenset(accepting), frozenset(edges))


def dfa_to_nfa(dfa: Dfa) -> Nfa:
    edges = {
        (source, symbol, target)
        for source, row in enumerate(dfa.transitions)
        for symbol, target in zip(dfa.alphabet, row)
    }
    return Nfa(dfa.alphabet, dfa.state_count, frozenset({dfa.initial}), dfa.accepting, frozenset(edges))


def language_of(automaton: Nfa | Dfa) -> Dfa:
    """DFA mínimo de um autômato qualquer."""
    if isinstance(automaton, Nfa):
        automaton = determinize(automaton)
    return minimize(automaton)
