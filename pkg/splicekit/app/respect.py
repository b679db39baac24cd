"""
Respeito de regras: r respeita L quando σ_r(L) ⊆ L.

O teste exato trabalha sobre o monoide sintático. Para a regra de Pixton
(u1, u2; v), S1 são os contextos esquerdos X com X·[u1]·Y ⊆ L para algum Y e
S2 os contextos direitos Y com X·[u2]·Y ⊆ L para algum X; a regra respeita L
se e somente se X·[v]·Y ⊆ L para todo X em S1 e Y em S2. Regras congruentes
respeitam L ao mesmo tempo, então as respostas ficam em cache pela tupla de
classes dos componentes.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator

from django.db import models

from .automata import Dfa, Word, enumerate_words
from .exceptions import IllegalExtensionError, PreconditionError, VariantMismatchError
from .splicing import ClassicRule, PixtonRule, Rule
from .syntactic import SyntacticMonoid

logger = logging.getLogger(__name__)


@dataclass
class RespectContext:
    """
    Contexto de consultas de respeito para uma linguagem.

    Atributos:
        monoid (SyntacticMonoid): o monoide sintático de L.
        cache (dict): resposta por tupla de classes (variante, h(componentes)...).
    """
    monoid: SyntacticMonoid
    cache: dict[tuple, bool] = field(default_factory=dict)
    _left: dict[int, frozenset[int]] = field(default_factory=dict, repr=False)
    _right: dict[int, frozenset[int]] = field(default_factory=dict, repr=False)

    def left_contexts(self, site: int) -> frozenset[int]:
        """S1: os X tais que X·site·Y está em L para algum Y."""
        if site not in self._left:
            m = self.monoid
            self._left[site] = frozenset(
                x for x in range(m.size)
                if any(m.contains(m.multiply(x, site, y)) for y in range(m.size))
            )
        return self._left[site]

    def right_contexts(self, site: int) -> frozenset[int]:
        """S2: os Y tais que X·site·Y está em L para algum X."""
        if site not in self._right:
            m = self.monoid
            self._right[site] = frozenset(
                y for y in range(m.size)
                if any(m.contains(m.multiply(x, site, y)) for x in range(m.size))
            )
        return self._right[site]

    def class_key(self, rule: Rule) -> tuple:
        return (rule.variant.value, *(self.monoid.class_of(c) for c in rule.components))

    def _holds(self, left_site: int, right_site: int, middle: int) -> bool:
        m = self.monoid
        return all(
            m.contains(m.multiply(x, middle, y))
            for x in self.left_contexts(left_site)
            for y in self.right_contexts(right_site)
        )

    def is_live(self, rule: Rule) -> bool:
        """Falso se algum sítio nunca ocorre em L: a regra então nunca se aplica dentro de L."""
        m = self.monoid
        return bool(
            self.left_contexts(m.class_of(rule.left_site))
            and self.right_contexts(m.class_of(rule.right_site))
        )


def respects_pixton(ctx: RespectContext, rule: PixtonRule) -> bool:
    key = ctx.class_key(rule)
    if key not in ctx.cache:
        _, u1, u2, v = key
        ctx.cache[key] = ctx._holds(u1, u2, v)
    return ctx.cache[key]


def respects_classic(ctx: RespectContext, rule: ClassicRule) -> bool:
    key = ctx.class_key(rule)
    if key not in ctx.cache:
        m = ctx.monoid
        _, u1, v1, u2, v2 = key
        ctx.cache[key] = ctx._holds(m.multiply(u1, v1), m.multiply(u2, v2), m.multiply(u1, v2))
    return ctx.cache[key]


def respects(ctx: RespectContext, rule: Rule) -> bool:
    if isinstance(rule, ClassicRule):
        return respects_classic(ctx, rule)
    return respects_pixton(ctx, rule)


def is_constant(ctx: RespectContext, word: Word) -> bool:
    """
    Constante de Schützenberger: x1·v·y1 e x2·v·y2 em L implicam x1·v·y2 em L,
    ou seja, a regra de Pixton (v, v; v) respeita L.
    """
    return respects_pixton(ctx, PixtonRule(word, word, word))


def respect_counterexample(lang: Dfa, rule: Rule, word_bound: int) -> tuple[Word, Word, Word] | None:
    """
    Procura w1, w2 em L com |w1|, |w2| <= word_bound cujo splicing por ``rule``
    sai de L. Devolve (w1, w2, z) ou None.
    """
    words = enumerate_words(lang, word_bound)
    # basta um prefixo por estado alcançado depois de prefixo·ponte
    after_bridge: dict[int, tuple[Word, Word]] = {}
    suffixes: dict[Word, Word] = {}
    for word in words:
        for prefix in lang.alphabet.sorted(rule.left_parts(word)):
            after_bridge.setdefault(lang.run(prefix + rule.bridge), (prefix, word))
        for suffix in lang.alphabet.sorted(rule.right_parts(word)):
            suffixes.setdefault(suffix, word)
    for state, (prefix, w1) in after_bridge.items():
        for suffix, w2 in suffixes.items():
            if lang.run(suffix, state) not in lang.accepting:
                return w1, w2, prefix + rule.bridge + suffix
    return None


def brute_respect(lang: Dfa, rule: Rule, word_bound: int) -> bool:
    """
    Falso se há contraexemplo com palavras de comprimento <= word_bound.
    Verdadeiro significa apenas que nenhum contraexemplo foi encontrado.
    """
    return respect_counterexample(lang, rule, word_bound) is None


class Extension(models.TextChoices):
    U1_LEFT = 'u1-left', 'prefixar u1'
    V1_RIGHT = 'v1-right', 'sufixar v1'
    U2_LEFT = 'u2-left', 'prefixar u2'
    V2_RIGHT = 'v2-right', 'sufixar v2'
    U1_RIGHT = 'u1-right', 'sufixar u1'
    BRIDGE_LEFT = 'bridge-left', 'prefixar u1 e a ponte'
    BRIDGE_RIGHT = 'bridge-right', 'sufixar u2 e a ponte'


CLASSIC_EXTENSIONS = frozenset({Extension.U1_LEFT, Extension.V1_RIGHT, Extension.U2_LEFT, Extension.V2_RIGHT})
PIXTON_EXTENSIONS = frozenset({Extension.BRIDGE_LEFT, Extension.U1_RIGHT, Extension.U2_LEFT, Extension.BRIDGE_RIGHT})


def extend_rule(rule: Rule, where: Extension | str, x: Word) -> Rule:
    """Estende a regra; se ela respeita L, a extensão também respeita."""
    where = Extension(where)
    if isinstance(rule, ClassicRule):
        if where not in CLASSIC_EXTENSIONS:
            raise IllegalExtensionError(f'{where.label} não se aplica a regras clássicas')
        u1, v1, u2, v2 = rule.components
        return {
            Extension.U1_LEFT: lambda: ClassicRule(x + u1, v1, u2, v2),
            Extension.V1_RIGHT: lambda: ClassicRule(u1, v1 + x, u2, v2),
            Extension.U2_LEFT: lambda: ClassicRule(u1, v1, x + u2, v2),
            Extension.V2_RIGHT: lambda: ClassicRule(u1, v1, u2, v2 + x),
        }[where]()
    if where not in PIXTON_EXTENSIONS:
        raise IllegalExtensionError(f'{where.label} não se aplica a regras de Pixton')
    u1, u2, v = rule.components
    return {
        Extension.BRIDGE_LEFT: lambda: PixtonRule(x + u1, u2, x + v),
        Extension.U1_RIGHT: lambda: PixtonRule(u1 + x, u2, v),
        Extension.U2_LEFT: lambda: PixtonRule(u1, x + u2, v),
        Extension.BRIDGE_RIGHT: lambda: PixtonRule(u1, u2 + x, v + x),
    }[where]()


def _check_variants(s: Rule, r: Rule) -> None:
    if type(s) is not type(r):
        raise VariantMismatchError('as regras são de variantes diferentes')


def is_extension_of(s: Rule, r: Rule) -> bool:
    """Verdadeiro se s se obtém de r por uma sequência de extensões."""
    _check_variants(s, r)
    if isinstance(s, ClassicRule):
        return (
            s.u1.endswith(r.u1) and s.v1.startswith(r.v1)
            and s.u2.endswith(r.u2) and s.v2.startswith(r.v2)
        )
    # s = (a·u1·b, c·u2·d; a·v·d)
    for i in range(len(s.u1) - len(r.u1) + 1):
        if not s.u1.startswith(r.u1, i):
            continue
        for k in range(len(s.u2) - len(r.u2) + 1):
            if s.u2.startswith(r.u2, k) and s.v == s.u1[:i] + r.v + s.u2[k + len(r.u2):]:
                return True
    return False


def _prefixes(word: Word) -> list[Word]:
    return [word[:i] for i in range(len(word) + 1)]


def _suffixes(word: Word) -> list[Word]:
    return [word[i:] for i in range(len(word) + 1)]


def restrictions(rule: Rule) -> Iterator[Rule]:
    """Todas as regras r das quais ``rule`` é extensão (inclusive ela mesma)."""
    if isinstance(rule, ClassicRule):
        for components in product(_suffixes(rule.u1), _prefixes(rule.v1), _suffixes(rule.u2), _prefixes(rule.v2)):
            yield ClassicRule(*components)
        return
    seen = set()
    for i, j in ((i, j) for i in range(len(rule.u1) + 1) for j in range(i, len(rule.u1) + 1)):
        head = rule.u1[:i]
        if not rule.v.startswith(head):
            continue
        for k, l in ((k, l) for k in range(len(rule.u2) + 1) for l in range(k, len(rule.u2) + 1)):
            tail = rule.u2[l:]
            if len(head) + len(tail) > len(rule.v) or not rule.v.endswith(tail):
                continue
            candidate = PixtonRule(rule.u1[i:j], rule.u2[k:l], rule.v[len(head):len(rule.v) - len(tail)])
            if candidate not in seen:
                seen.add(candidate)
                yield candidate


def prune_minimal(rules: Iterable[Rule], ctx: RespectContext | None = None) -> list[Rule]:
    """
    Mantém só as regras sem restrição própria na entrada. Cada splicing por uma
    regra descartada é também um splicing por uma regra mantida, então a
    linguagem gerada não muda.
    """
    unique = list(dict.fromkeys(rules))
    if ctx is not None:
        offending = next((r for r in unique if not respects(ctx, r)), None)
        if offending is not None:
            raise PreconditionError(f'a regra {offending} não respeita a linguagem')
    present = set(unique)
    kept = [
        rule for rule in unique
        if not any(other != rule and other in present for other in restrictions(rule))
    ]
    logger.debug('poda: %d de %d regras são minimais', len(kept), len(unique))
    return kept
