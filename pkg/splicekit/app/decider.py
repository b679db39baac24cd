"""
Sistemas canônicos e a decisão "L é uma linguagem de splicing?".

Para L com monoide sintático de tamanho m, o sistema canônico tem como axiomas
as palavras de L com comprimento < m²+6m e como regras todas as regras dentro
dos limites do teorema que respeitam L. L é linguagem de splicing se e somente
se esse sistema gera L. Abaixo dos limites do teorema só a resposta "sim" é
garantida.
"""
from __future__ import annotations

import logging
import time
from collections import deque
from concurrent.futures import Future, ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import islice, product
from math import prod
from typing import Iterator

from django.db import models

from . import conf
from .automata import (
    Alphabet,
    Dfa,
    Nfa,
    Word,
    bounded_length,
    dfa_to_nfa,
    difference,
    equivalent,
    intersect,
    is_empty,
    language_of,
    minimize,
    shortest_word,
)
from .closure import ClosureAutomaton, build_closure
from .exceptions import CandidateLimitError, PreconditionError, VariantMismatchError
from .respect import RespectContext, prune_minimal, respects
from .splicing import RULE_TYPES, Rule, SplicingSystem, Variant
from .syntactic import syntactic_monoid

logger = logging.getLogger(__name__)

_BATCH = 4096


class BoundsSource(models.TextChoices):
    THEOREM = 'theorem', 'teorema'
    CUSTOM = 'custom', 'personalizado'


@dataclass(frozen=True)
class BoundsProfile:
    """
    Limites estritos de comprimento para axiomas e componentes de regras.

    Atributos:
        variant (Variant): a variante das regras.
        axiom_len_lt (int): axiomas têm comprimento < axiom_len_lt.
        site_bounds (tuple[int, ...]): um limite por componente, na ordem da
            regra: clássica (u1, v1, u2, v2), Pixton (u1, u2, v).
        source (BoundsSource): limites do teorema ou escolhidos pelo usuário.
    """
    variant: Variant
    axiom_len_lt: int
    site_bounds: tuple[int, ...]
    source: BoundsSource = BoundsSource.CUSTOM

    def __post_init__(self) -> None:
        object.__setattr__(self, 'variant', Variant(self.variant))
        object.__setattr__(self, 'source', BoundsSource(self.source))
        object.__setattr__(self, 'site_bounds', tuple(self.site_bounds))
        expected = 4 if self.variant == Variant.CLASSIC else 3
        if len(self.site_bounds) != expected:
            raise PreconditionError(f'a variante {self.variant.label} pede {expected} limites de componente')
        if self.axiom_len_lt < 1 or any(bound < 1 for bound in self.site_bounds):
            raise PreconditionError('todos os limites devem ser >= 1')

    @classmethod
    def custom(cls, variant: Variant | str, axiom_len_lt: int, inner_lt: int, outer_lt: int) -> BoundsProfile:
        """Limites no formato da linha de comando: componentes internos e externos."""
        variant = Variant(variant)
        if variant == Variant.CLASSIC:
            sites = (outer_lt, inner_lt, inner_lt, outer_lt)
        else:
            sites = (inner_lt, inner_lt, outer_lt)
        return cls(variant, axiom_len_lt, sites, BoundsSource.CUSTOM)

    def candidate_count(self, alphabet: Alphabet) -> int:
        """Número de regras candidatas sobre ``alphabet``, sem enumerá-las."""
        return prod(alphabet.count_below(bound) for bound in self.site_bounds)

    def candidates(self, alphabet: Alphabet) -> Iterator[Rule]:
        """Regras dentro dos limites; componentes em ordem ≤_ℓℓ, o primeiro variando mais devagar."""
        rule_type = RULE_TYPES[self.variant]
        for components in product(*(alphabet.words_below(bound) for bound in self.site_bounds)):
            yield rule_type(*components)


def theorem_bounds(m: int, variant: Variant | str) -> BoundsProfile:
    """Limites que garantem completude: axiomas < m²+6m, sítios < 2m ou < m²+10m."""
    if m < 1:
        raise PreconditionError('m deve ser >= 1')
    variant = Variant(variant)
    inner, outer = 2 * m, m * m + 10 * m
    if variant == Variant.CLASSIC:
        sites = (outer, inner, inner, outer)
    else:
        sites = (inner, inner, outer)
    return BoundsProfile(variant, m * m + 6 * m, sites, BoundsSource.THEOREM)


class Verdict(models.TextChoices):
    YES = 'yes', 'sim'
    NO = 'no', 'não'
    INCONCLUSIVE = 'inconclusive', 'inconclusivo'

    @property
    def exit_code(self) -> int:
        return {'yes': 0, 'no': 1, 'inconclusive': 2}[self.value]


@dataclass
class DecisionStats:
    monoid_size: int = 0
    candidate_rules: int = 0
    respecting_rules: int = 0
    closure_rules: int = 0
    closure_states: int = 0
    rounds: int = 0
    wall_time: float = 0.0

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Decision:
    """
    Resultado de decide_splicing.

    Atributos:
        verdict (Verdict): sim, não ou inconclusivo.
        system (SplicingSystem): o sistema canônico construído.
        closure (ClosureAutomaton): o autômato saturado usado na comparação.
        witness (str | None): a menor palavra de L fora de L(I, R), se houver.
        reason (str): explicação curta do veredito.
        stats (DecisionStats): contagens e tempo.
    """
    verdict: Verdict
    system: SplicingSystem
    closure: ClosureAutomaton
    witness: Word | None
    reason: str
    stats: DecisionStats = field(default_factory=DecisionStats)

    @property
    def certificate(self) -> SplicingSystem | Word | str:
        if self.verdict == Verdict.YES:
            return self.system
        if self.verdict == Verdict.NO:
            return self.witness
        return self.reason


def _check_limit(bounds: BoundsProfile, alphabet: Alphabet, limit: int | None) -> int:
    limit = conf.candidate_limit() if limit is None else limit
    count = bounds.candidate_count(alphabet)
    if count > limit:
        raise CandidateLimitError(count, limit)
    logger.info('%d regras candidatas (limite %d)', count, limit)
    return count


def _batches(rules: Iterator[Rule]) -> Iterator[list[Rule]]:
    while batch := list(islice(rules, _BATCH)):
        yield batch


def respecting_rules(ctx: RespectContext, bounds: BoundsProfile, threads: int | None = None) -> list[Rule]:
    """As candidatas que respeitam L, na ordem de enumeração."""
    threads = conf.default_threads() if threads is None else max(1, threads)

    def keep(batch: list[Rule]) -> list[Rule]:
        kept = [rule for rule in batch if respects(ctx, rule)]
        logger.debug('lote de %d candidatas: %d respeitam', len(batch), len(kept))
        return kept

    batches = _batches(bounds.candidates(ctx.monoid.alphabet))
    if threads == 1:
        return [rule for batch in batches for rule in keep(batch)]
    # no máximo 2 lotes por thread em voo; os resultados saem na ordem de enumeração
    accepted: list[Rule] = []
    window: deque[Future[list[Rule]]] = deque()
    with ThreadPoolExecutor(max_workers=threads) as executor:
        for batch in batches:
            window.append(executor.submit(keep, batch))
            if len(window) >= 2 * threads:
                accepted.extend(window.popleft().result())
        while window:
            accepted.extend(window.popleft().result())
    return accepted


def _axioms(lang: Dfa, bounds: BoundsProfile) -> Nfa:
    return dfa_to_nfa(minimize(intersect(lang, bounded_length(lang.alphabet, bounds.axiom_len_lt))))


def _check_variant(variant: Variant | str, bounds: BoundsProfile) -> Variant:
    variant = Variant(variant)
    if bounds.variant != variant:
        raise VariantMismatchError(f'limites da variante {bounds.variant.label} para regras {variant.label}')
    return variant


def canonical_system(
    lang: Dfa,
    variant: Variant | str,
    bounds: BoundsProfile,
    prune: bool = False,
    threads: int | None = None,
    limit: int | None = None,
    ctx: RespectContext | None = None,
) -> SplicingSystem:
    """
    Axiomas Σ^{<axiom_len_lt} ∩ L, mantidos como autômato, e todas as regras
    dentro dos limites que respeitam L (opcionalmente só as minimais).
    """
    variant = _check_variant(variant, bounds)
    lang = minimize(lang)
    _check_limit(bounds, lang.alphabet, limit)
    ctx = ctx or RespectContext(syntactic_monoid(lang))
    rules = respecting_rules(ctx, bounds, threads)
    if prune:
        rules = prune_minimal(rules)
    return SplicingSystem(variant, lang.alphabet, _axioms(lang, bounds), tuple(rules))


def decide_splicing(
    lang: Dfa,
    variant: Variant | str,
    bounds: BoundsProfile,
    prune: bool = False,
    threads: int | None = None,
    limit: int | None = None,
    ctx: RespectContext | None = None,
) -> Decision:
    """
    Constrói o sistema canônico, satura e compara com L. O fecho é construído
    só com as regras minimais e vivas, que geram a mesma linguagem.
    """
    started = time.perf_counter()
    variant = _check_variant(variant, bounds)
    lang = minimize(lang)
    stats = DecisionStats(candidate_rules=_check_limit(bounds, lang.alphabet, limit))
    ctx = ctx or RespectContext(syntactic_monoid(lang))
    stats.monoid_size = ctx.monoid.size

    rules = respecting_rules(ctx, bounds, threads)
    stats.respecting_rules = len(rules)
    axioms = _axioms(lang, bounds)
    system = SplicingSystem(variant, lang.alphabet, axioms, tuple(prune_minimal(rules) if prune else rules))

    effective = tuple(rule for rule in prune_minimal(system.rules) if ctx.is_live(rule))
    stats.closure_rules = len(effective)
    closure = build_closure(SplicingSystem(variant, lang.alphabet, axioms, effective))
    stats.closure_states = closure.state_count
    stats.rounds = closure.rounds
    generated = language_of(closure.automaton)

    if not is_empty(difference(generated, lang)):
        raise AssertionError('L(I, R) não está contida em L')
    same, _ = equivalent(generated, lang)
    if same:
        verdict, witness, reason = Verdict.YES, None, 'o sistema canônico gera L'
    else:
        witness = shortest_word(difference(lang, generated))
        if bounds.source == BoundsSource.THEOREM:
            verdict, reason = Verdict.NO, 'L(I, R) difere de L nos limites do teorema'
        else:
            verdict, reason = Verdict.INCONCLUSIVE, 'limites abaixo da garantia do teorema'
    stats.wall_time = round(time.perf_counter() - started, 3)
    logger.info('veredito %s (%d regras respeitam, %d no fecho)', verdict.value, len(rules), len(effective))
    return Decision(verdict, system, closure, witness, reason, stats)
