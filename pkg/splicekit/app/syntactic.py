"""
Monoide sintático de uma linguagem regular e o argumento de bombeamento.

O monoide é calculado como o monoide de transições do DFA mínimo: cada
elemento é a transformação de estados induzida por uma palavra.
"""
from __future__ import annotations

import logging
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property, reduce

from . import conf
from .automata import Alphabet, Dfa, Word, minimize
from .exceptions import PreconditionError, SplicingError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SyntacticMonoid:
    """
    Monoide sintático M_L.

    Atributos:
        alphabet (Alphabet): alfabeto de L.
        identity (int): o elemento [ε]_L.
        table (tuple[tuple[int, ...], ...]): tabela de multiplicação m×m.
        generators (tuple[int, ...]): imagem de cada símbolo, na ordem do alfabeto.
        representatives (tuple[str, ...]): a menor palavra (≤_ℓℓ) de cada classe.
        accepting (frozenset[int]): as classes contidas em L.
    """
    alphabet: Alphabet
    identity: int
    table: tuple[tuple[int, ...], ...]
    generators: tuple[int, ...]
    representatives: tuple[Word, ...]
    accepting: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def generator_map(self) -> dict[str, int]:
        return dict(zip(self.alphabet, self.generators))

    def multiply(self, *elements: int) -> int:
        return reduce(lambda x, y: self.table[x][y], elements, self.identity)

    def class_of(self, word: Word) -> int:
        """h(word), dobrando a imagem dos símbolos."""
        self.alphabet.check_word(word)
        index = self.alphabet.index
        element = self.identity
        for symbol in word:
            element = self.table[element][self.generators[index[symbol]]]
        return element

    def shortest_representative(self, element: int) -> Word:
        return self.representatives[element]

    def contains(self, element: int) -> bool:
        return element in self.accepting

    @cached_property
    def zero(self) -> int | None:
        """O elemento absorvente, se existir."""
        for candidate in range(self.size):
            if all(
                self.table[candidate][x] == candidate == self.table[x][candidate]
                for x in range(self.size)
            ):
                return candidate
        return None


@dataclass(frozen=True)
class PumpingFactorization:
    """
    Fatoração w = αβγ com β não vazia, α ∼ αβ e γ ∼ βγ.

    Atributos:
        alpha (str): prefixo α.
        beta (str): fator bombeável β.
        gamma (str): sufixo γ.
    """
    alpha: Word
    beta: Word
    gamma: Word

    @property
    def word(self) -> Word:
        return self.alpha + self.beta + self.gamma

    def pumped(self, j: int) -> Word:
        return self.alpha + self.beta * j + self.gamma

    def __str__(self) -> str:
        return f'({self.alpha!r}, {self.beta!r}, {self.gamma!r})'


def _compose(first: tuple[int, ...], second: tuple[int, ...]) -> tuple[int, ...]:
    # primeiro `first`, depois `second`
    return tuple(second[state] for state in first)


def _check_associativity(table: tuple[tuple[int, ...], ...]) -> None:
    size = len(table)
    if size <= conf.associativity_limit():
        triples = ((x, y, z) for x in range(size) for y in range(size) for z in range(size))
    else:
        rng = random.Random(size)
        triples = (
            (rng.randrange(size), rng.randrange(size), rng.randrange(size))
            for _ in range(conf.associativity_samples())
        )
    for x, y, z in triples:
        if table[table[x][y]][z] != table[x][table[y][z]]:
            raise SplicingError(f'tabela não associativa em ({x}, {y}, {z})')


def syntactic_monoid(dfa: Dfa) -> SyntacticMonoid:
    """
    Monoide sintático de L(dfa). Os elementos são numerados na ordem de
    geração em largura a partir da identidade, com os geradores na ordem do
    alfabeto; por isso os representantes são os menores de cada classe.
    """
    dfa = minimize(dfa)
    alphabet = dfa.alphabet
    letters = [tuple(row[i] for row in dfa.transitions) for i in range(len(alphabet))]
    identity = tuple(range(dfa.state_count))
    elements = [identity]
    index = {identity: 0}
    representatives = ['']
    queue = deque([0])
    while queue:
        element = queue.popleft()
        for symbol, letter in zip(alphabet, letters):
            image = _compose(elements[element], letter)
            if image not in index:
                index[image] = len(elements)
                elements.append(image)
                representatives.append(representatives[element] + symbol)
                queue.append(index[image])
    table = tuple(
        tuple(index[_compose(x, y)] for y in elements)
        for x in elements
    )
    _check_associativity(table)
    accepting = frozenset(
        i for i, element in enumerate(elements) if element[dfa.initial] in dfa.accepting
    )
    logger.info('monoide sintático com %d elementos (DFA mínimo com %d estados)',
                len(elements), dfa.state_count)
    return SyntacticMonoid(
        alphabet=alphabet,
        identity=0,
        table=table,
        generators=tuple(index[letter] for letter in letters),
        representatives=tuple(representatives),
        accepting=accepting,
    )


def class_of(monoid: SyntacticMonoid, word: Word) -> int:
    return monoid.class_of(word)


def shortest_representative(monoid: SyntacticMonoid, element: int) -> Word:
    return monoid.shortest_representative(element)


def pumping_factorization(monoid: SyntacticMonoid, word: Word) -> PumpingFactorization:
    """
    Fatoração αβγ de uma palavra com |w| >= m²: o primeiro par (i, j), em
    ordem lexicográfica, com classes de prefixo e de sufixo iguais.
    """
    n = len(word)
    if n < monoid.size ** 2:
        raise PreconditionError(f'|w| = {n} < m² = {monoid.size ** 2}')
    prefixes = [monoid.identity]
    for symbol in word:
        prefixes.append(monoid.multiply(prefixes[-1], monoid.class_of(symbol)))
    suffixes = [monoid.identity]
    for symbol in reversed(word):
        suffixes.append(monoid.multiply(monoid.class_of(symbol), suffixes[-1]))
    suffixes.reverse()
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            if prefixes[i] == prefixes[j] and suffixes[i] == suffixes[j]:
                return PumpingFactorization(word[:i], word[i:j], word[j:])
    raise SplicingError('nenhum par encontrado; o monoide é inconsistente com a palavra')


def pumping_violations(word: Word, factorization: PumpingFactorization, j: int) -> list[int]:
    """
    Posições k das ocorrências de αβγ em ``word`` que não satisfazem nem (a)
    αβ^{j/2} começando em k, nem (b) β^{j/2}γ terminando em k + |αβγ|.
    """
    alpha, beta, gamma = factorization.alpha, factorization.beta, factorization.gamma
    pattern = factorization.word
    head = alpha + beta * (j // 2)
    tail = beta * (j // 2) + gamma
    violations = []
    k = word.find(pattern)
    while k != -1:
        end = k + len(pattern)
        if not word.startswith(head, k) and not (end >= len(tail) and word.startswith(tail, end - len(tail))):
            violations.append(k)
        k = word.find(pattern, k + 1)
    return violations


def pump_normalize(
    monoid: SyntacticMonoid,
    z: Word,
    factorization: PumpingFactorization,
    j: int,
    max_iterations: int | None = None,
) -> Word:
    """
    Substitui repetidamente a ocorrência mais à esquerda de αβγ que viola as
    condições (a) e (b) por αβ^jγ. O resultado é sintaticamente congruente a z.
    """
    monoid.class_of(z)
    if not factorization.beta:
        raise PreconditionError('β deve ser não vazia')
    if j % 2 or j <= len(z) + len(factorization.word):
        raise PreconditionError(f'j = {j} deve ser par e maior que |z| + |αβγ| = {len(z) + len(factorization.word)}')
    pumped = factorization.pumped(j)
    width = len(factorization.word)
    iterations = 0
    while violations := pumping_violations(z, factorization, j):
        if max_iterations is not None and iterations >= max_iterations:
            raise PreconditionError(f'bombeamento excedeu {max_iterations} iterações')
        k = violations[0]
        z = z[:k] + pumped + z[k + width:]
        iterations += 1
        logger.debug('bombeamento %d: ocorrência em %d, |z̃| = %d', iterations, k, len(z))
    return z
