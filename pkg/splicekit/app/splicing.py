"""
Regras e sistemas de splicing nas variantes clássica e de Pixton, o splicing
de palavras e o fecho limitado usado como oráculo nos testes.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import chain
from typing import ClassVar, Iterable, Union

from django.db import models

from .automata import Alphabet, Nfa, Word, determinize, finite_words, from_words, is_finite, minimize
from .exceptions import InfiniteAxiomsError, PreconditionError, RuleSyntaxError, VariantMismatchError

logger = logging.getLogger(__name__)


class Variant(models.TextChoices):
    CLASSIC = 'classic', 'clássica'
    PIXTON = 'pixton', 'Pixton'


def _occurrences(word: Word, factor: Word) -> range | list[int]:
    if not factor:
        return range(len(word) + 1)
    positions = []
    k = word.find(factor)
    while k != -1:
        positions.append(k)
        k = word.find(factor, k + 1)
    return positions


@dataclass(frozen=True, order=True)
class ClassicRule:
    """
    Regra clássica (u1, v1; u2, v2).

    Atributos:
        u1, v1 (str): o sítio esquerdo é u1v1; o corte fica entre u1 e v1.
        u2, v2 (str): o sítio direito é u2v2; o corte fica entre u2 e v2.
    """
    u1: Word
    v1: Word
    u2: Word
    v2: Word

    variant: ClassVar[Variant] = Variant.CLASSIC

    @property
    def components(self) -> tuple[Word, ...]:
        return self.u1, self.v1, self.u2, self.v2

    @property
    def left_site(self) -> Word:
        return self.u1 + self.v1

    @property
    def right_site(self) -> Word:
        return self.u2 + self.v2

    @property
    def bridge(self) -> Word:
        """Palavra inserida entre as partes mantidas: vazia, u1 e v2 já estão nelas."""
        return ''

    def left_parts(self, word: Word) -> set[Word]:
        """Os prefixos x1u1 de ``word`` seguidos por v1."""
        return {word[:k + len(self.u1)] for k in _occurrences(word, self.left_site)}

    def right_parts(self, word: Word) -> set[Word]:
        """Os sufixos v2y2 de ``word`` precedidos por u2."""
        return {word[k + len(self.u2):] for k in _occurrences(word, self.right_site)}

    def to_pixton(self) -> PixtonRule:
        return PixtonRule(self.u1 + self.v1, self.u2 + self.v2, self.u1 + self.v2)

    def __str__(self) -> str:
        return f'{self.u1},{self.v1};{self.u2},{self.v2}'


@dataclass(frozen=True, order=True)
class PixtonRule:
    """
    Regra de Pixton (u1, u2; v).

    Atributos:
        u1 (str): sítio esquerdo.
        u2 (str): sítio direito.
        v (str): a ponte, que substitui os sítios no resultado.
    """
    u1: Word
    u2: Word
    v: Word

    variant: ClassVar[Variant] = Variant.PIXTON

    @property
    def components(self) -> tuple[Word, ...]:
        return self.u1, self.u2, self.v

    @property
    def left_site(self) -> Word:
        return self.u1

    @property
    def right_site(self) -> Word:
        return self.u2

    @property
    def bridge(self) -> Word:
        return self.v

    def left_parts(self, word: Word) -> set[Word]:
        return {word[:k] for k in _occurrences(word, self.u1)}

    def right_parts(self, word: Word) -> set[Word]:
        return {word[k + len(self.u2):] for k in _occurrences(word, self.u2)}

    def to_pixton(self) -> PixtonRule:
        return self

    def __str__(self) -> str:
        return f'{self.u1},{self.u2};{self.v}'


Rule = Union[ClassicRule, PixtonRule]

RULE_TYPES = {Variant.CLASSIC: ClassicRule, Variant.PIXTON: PixtonRule}


def parse_rule(text: str, variant: Variant | str) -> Rule:
    """
    Lê uma regra na sintaxe textual: clássica ``u1,v1;u2,v2``, Pixton ``u1,u2;v``.
    """
    variant = Variant(variant)
    left, semicolon, right = text.partition(';')
    if not semicolon or ';' in right:
        raise RuleSyntaxError(f'regra {text!r}: esperado exatamente um ";"')
    if variant == Variant.CLASSIC:
        first, second = left.split(','), right.split(',')
        if len(first) != 2 or len(second) != 2:
            raise RuleSyntaxError(f'regra clássica {text!r}: esperado "u1,v1;u2,v2"')
        return ClassicRule(*first, *second)
    parts = left.split(',')
    if len(parts) != 2 or ',' in right:
        raise RuleSyntaxError(f'regra de Pixton {text!r}: esperado "u1,u2;v"')
    return PixtonRule(parts[0], parts[1], right)


def splice_classic(w1: Word, w2: Word, rule: ClassicRule) -> set[tuple[Word, int]]:
    """
    Todos os resultados x1·u1·v2·y2, cada um com sua posição de splicing |x1u1|.
    """
    return {
        (prefix + suffix, len(prefix))
        for prefix in rule.left_parts(w1)
        for suffix in rule.right_parts(w2)
    }


def splice_pixton(w1: Word, w2: Word, rule: PixtonRule) -> set[Word]:
    return {prefix + rule.v + suffix for prefix in rule.left_parts(w1) for suffix in rule.right_parts(w2)}


def splice(w1: Word, w2: Word, rule: Rule) -> set[Word]:
    return {
        prefix + rule.bridge + suffix
        for prefix in rule.left_parts(w1)
        for suffix in rule.right_parts(w2)
    }


def sigma_step(words: Iterable[Word], rules: Iterable[Rule]) -> frozenset[Word]:
    """σ_R(words): a união de σ_r(words) para cada regra."""
    words = list(words)
    produced: set[Word] = set()
    for rule in rules:
        prefixes = set(chain.from_iterable(rule.left_parts(w) for w in words))
        suffixes = set(chain.from_iterable(rule.right_parts(w) for w in words))
        produced.update(p + rule.bridge + s for p in prefixes for s in suffixes)
    return frozenset(produced)


@dataclass(frozen=True)
class SplicingSystem:
    """
    Sistema de splicing (I, R).

    Atributos:
        variant (Variant): clássica ou Pixton; todas as regras são dessa variante.
        alphabet (Alphabet): o alfabeto Σ.
        axioms (tuple[str, ...] | Nfa): lista explícita de axiomas ou um autômato
            de linguagem finita (sistemas canônicos).
        rules (tuple[Rule, ...]): as regras.
    """
    variant: Variant
    alphabet: Alphabet
    axioms: tuple[Word, ...] | Nfa
    rules: tuple[Rule, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, 'variant', Variant(self.variant))
        object.__setattr__(self, 'rules', tuple(self.rules))
        expected = RULE_TYPES[self.variant]
        for rule in self.rules:
            if not isinstance(rule, expected):
                raise VariantMismatchError(f'regra {rule} não é da variante {self.variant.label}')
            for component in rule.components:
                self.alphabet.check_word(component)
        if isinstance(self.axioms, Nfa):
            if self.axioms.alphabet != self.alphabet:
                raise PreconditionError('o autômato de axiomas usa outro alfabeto')
            if not is_finite(determinize(self.axioms)):
                raise InfiniteAxiomsError('o autômato de axiomas aceita uma linguagem infinita')
        else:
            axioms = tuple(dict.fromkeys(self.axioms))
            for word in axioms:
                self.alphabet.check_word(word)
            object.__setattr__(self, 'axioms', axioms)

    @property
    def symbolic_axioms(self) -> bool:
        return isinstance(self.axioms, Nfa)

    def axiom_automaton(self) -> Nfa:
        if isinstance(self.axioms, Nfa):
            return self.axioms
        return from_words(self.alphabet, self.axioms)

    def axiom_words(self) -> list[Word]:
        if isinstance(self.axioms, Nfa):
            return finite_words(minimize(determinize(self.axioms)))
        return self.alphabet.sorted(self.axioms)

    def to_pixton(self) -> SplicingSystem:
        """O sistema de Pixton com as regras (u1v1, u2v2; u1v2), que gera a mesma linguagem."""
        return SplicingSystem(
            Variant.PIXTON,
            self.alphabet,
            self.axioms,
            tuple(dict.fromkeys(rule.to_pixton() for rule in self.rules)),
        )

    def is_reflexive(self) -> bool:
        """Para cada (u1,v1;u2,v2), também (u1,v1;u1,v1) e (u2,v2;u2,v2) estão no sistema."""
        if self.variant != Variant.CLASSIC:
            raise VariantMismatchError('reflexividade é definida para regras clássicas')
        present = set(self.rules)
        return all(
            ClassicRule(r.u1, r.v1, r.u1, r.v1) in present and ClassicRule(r.u2, r.v2, r.u2, r.v2) in present
            for r in self.rules
        )

    def default_cap(self, report_len: int) -> int:
        longest_axiom = max(map(len, self.axiom_words()), default=0)
        longest_component = max((len(c) for r in self.rules for c in r.components), default=0)
        return report_len + 2 * (longest_axiom + longest_component)


def bounded_closure(system: SplicingSystem, report_len: int, cap_len: int | None = None) -> frozenset[Word]:
    """
    Subconjunto de σ_R^*(I) ∩ Σ^{<=report_len}: ponto fixo de σ_R descartando,
    a cada rodada, palavras derivadas mais longas que ``cap_len``. Palavras
    intermediárias acima do teto se perdem, por isso o resultado é uma
    subaproximação.
    """
    if cap_len is None:
        cap_len = system.default_cap(report_len)
    if cap_len < report_len:
        raise PreconditionError('cap_len deve ser >= report_len')
    words = set(system.axiom_words())
    prefixes: dict[Rule, set[Word]] = defaultdict(set)
    suffixes: dict[Rule, dict[int, set[Word]]] = {rule: defaultdict(set) for rule in system.rules}
    fresh = set(words)
    rounds = 0
    while fresh:
        produced: set[Word] = set()
        for rule in system.rules:
            room = cap_len - len(rule.bridge)
            new_prefixes = set(chain.from_iterable(rule.left_parts(w) for w in fresh)) - prefixes[rule]
            known_suffixes = suffixes[rule]
            new_suffixes: dict[int, set[Word]] = defaultdict(set)
            for suffix in chain.from_iterable(rule.right_parts(w) for w in fresh):
                if suffix not in known_suffixes[len(suffix)]:
                    new_suffixes[len(suffix)].add(suffix)
            # novos prefixos com todos os sufixos, prefixos antigos com os novos
            for prefix in new_prefixes:
                for length in range(room - len(prefix) + 1):
                    for suffix in chain(known_suffixes.get(length, ()), new_suffixes.get(length, ())):
                        produced.add(prefix + rule.bridge + suffix)
            for prefix in prefixes[rule]:
                for length in range(room - len(prefix) + 1):
                    for suffix in new_suffixes.get(length, ()):
                        produced.add(prefix + rule.bridge + suffix)
            prefixes[rule] |= new_prefixes
            for length, group in new_suffixes.items():
                known_suffixes[length] |= group
        fresh = produced - words
        words |= fresh
        rounds += 1
        logger.debug('fecho limitado: rodada %d, %d palavras novas', rounds, len(fresh))
    return frozenset(w for w in words if len(w) <= report_len)
