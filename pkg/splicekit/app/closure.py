"""
Autômato para a linguagem L(I, R) de um sistema de splicing, por saturação.

Parte-se do autômato dos axiomas e acrescenta-se, para cada regra, um caminho
fixo de estados novos que soletra a palavra inserida pela regra (a ponte).
A cada rodada, com os conjuntos de estados alcançáveis e co-alcançáveis
recalculados, ligam-se por ε os pontos de corte esquerdos à entrada da ponte
e a saída da ponte aos pontos de corte direitos. O conjunto de estados nunca
cresce; a saturação termina quando nenhuma aresta nova aparece.

Regras clássicas (u1,v1;u2,v2) são saturadas pela regra de Pixton
equivalente (u1v1, u2v2; u1v2): a ponte soletra u1·v2 e o ponto esquerdo fica
antes de u1, o que garante que o prefixo mantido termina de fato em u1.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

from django.db import models

from .automata import Dfa, Nfa, determinize, minimize
from .splicing import SplicingSystem

logger = logging.getLogger(__name__)


class Side(models.TextChoices):
    INTO_ENTRY = 'into-entry', 'entrada'
    OUT_OF_EXIT = 'out-of-exit', 'saída'


@dataclass(frozen=True)
class BridgeEdge:
    """
    Aresta ε acrescentada pela saturação.

    Atributos:
        source (int), target (int): os extremos.
        rule_id (int): índice da regra em ``system.rules``.
        side (Side): entrada da ponte ou saída da ponte.
        round (int): rodada (a partir de 1) em que a aresta foi acrescentada.
    """
    source: int
    target: int
    rule_id: int
    side: Side
    round: int


@dataclass(frozen=True)
class ClosureAutomaton:
    """
    Autômato saturado de L(I, R).

    Atributos:
        system (SplicingSystem): o sistema de origem.
        base (Nfa): estados dos axiomas mais o caminho de ponte de cada regra.
        entries (tuple[int, ...]): estado de entrada da ponte de cada regra.
        exits (tuple[int, ...]): estado de saída da ponte de cada regra.
        added_epsilon (tuple[BridgeEdge, ...]): arestas acrescentadas, em ordem.
        rounds (int): rodadas que acrescentaram ao menos uma aresta.
    """
    system: SplicingSystem
    base: Nfa
    entries: tuple[int, ...]
    exits: tuple[int, ...]
    added_epsilon: tuple[BridgeEdge, ...]
    rounds: int

    @property
    def state_count(self) -> int:
        return self.base.state_count

    @cached_property
    def automaton(self) -> Nfa:
        return Nfa(
            self.base.alphabet,
            self.base.state_count,
            self.base.initial,
            self.base.accepting,
            self.base.edges,
            self.base.epsilon | {(edge.source, edge.target) for edge in self.added_epsilon},
        )

    def accepts(self, word: str) -> bool:
        return self.automaton.accepts(word)


class _Saturation:
    """Estado mutável da saturação: adjacências e arestas ε já presentes."""

    def __init__(self, base: Nfa) -> None:
        self.base = base
        size = base.state_count
        self.succ: list[dict[str, list[int]]] = [{} for _ in range(size)]
        self.pred: list[dict[str, list[int]]] = [{} for _ in range(size)]
        for source, symbol, target in sorted(base.edges):
            self.succ[source].setdefault(symbol, []).append(target)
            self.pred[target].setdefault(symbol, []).append(source)
        self.eps_out: list[set[int]] = [set() for _ in range(size)]
        self.eps_in: list[set[int]] = [set() for _ in range(size)]
        for source, target in base.epsilon:
            self.add_epsilon(source, target)

    def add_epsilon(self, source: int, target: int) -> None:
        self.eps_out[source].add(target)
        self.eps_in[target].add(source)

    @staticmethod
    def _close(states: set[int], links: list[set[int]]) -> set[int]:
        closure = set(states)
        stack = list(closure)
        while stack:
            for other in links[stack.pop()]:
                if other not in closure:
                    closure.add(other)
                    stack.append(other)
        return closure

    def _explore(self, start: set[int], labelled: list[dict[str, list[int]]], links: list[set[int]]) -> set[int]:
        seen = set(start)
        stack = list(seen)
        while stack:
            state = stack.pop()
            neighbours = [t for targets in labelled[state].values() for t in targets]
            for other in (*neighbours, *links[state]):
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
        return seen

    def reachable(self) -> set[int]:
        return self._explore(set(self.base.initial), self.succ, self.eps_out)

    def coreachable(self) -> set[int]:
        return self._explore(set(self.base.accepting), self.pred, self.eps_in)

    def read_forward(self, states: set[int], word: str) -> set[int]:
        """Estados q com um caminho rotulado ``word`` a partir de ``states``."""
        current = self._close(states, self.eps_out)
        for symbol in word:
            step = {t for s in current for t in self.succ[s].get(symbol, ())}
            current = self._close(step, self.eps_out)
        return current

    def read_backward(self, states: set[int], word: str) -> set[int]:
        """Estados p com um caminho rotulado ``word`` até ``states``."""
        current = self._close(states, self.eps_in)
        for symbol in reversed(word):
            step = {p for s in current for p in self.pred[s].get(symbol, ())}
            current = self._close(step, self.eps_in)
        return current


def _base_automaton(system: SplicingSystem) -> tuple[Nfa, tuple[int, ...], tuple[int, ...]]:
    axioms = system.axiom_automaton()
    edges = set(axioms.edges)
    state_count = axioms.state_count
    entries, exits = [], []
    for rule in system.rules:
        bridge = rule.to_pixton().v
        entry = state_count
        for offset, symbol in enumerate(bridge):
            edges.add((entry + offset, symbol, entry + offset + 1))
        state_count = entry + len(bridge) + 1
        entries.append(entry)
        exits.append(state_count - 1)
    base = Nfa(axioms.alphabet, state_count, axioms.initial, axioms.accepting, frozenset(edges), axioms.epsilon)
    return base, tuple(entries), tuple(exits)


def build_closure(system: SplicingSystem) -> ClosureAutomaton:
    """Satura o autômato dos axiomas até aceitar exatamente σ_R^*(I)."""
    base, entries, exits = _base_automaton(system)
    saturation = _Saturation(base)
    sites = [rule.to_pixton() for rule in system.rules]
    added: list[BridgeEdge] = []
    rounds = 0
    while True:
        reachable = saturation.reachable()
        coreachable = saturation.coreachable()
        left_points: dict[str, list[int]] = {}
        right_points: dict[str, list[int]] = {}
        pending: list[BridgeEdge] = []
        for rule_id, site in enumerate(sites):
            if site.u1 not in left_points:
                left_points[site.u1] = sorted(reachable & saturation.read_backward(coreachable, site.u1))
            if site.u2 not in right_points:
                right_points[site.u2] = sorted(coreachable & saturation.read_forward(reachable, site.u2))
            entry, exit_ = entries[rule_id], exits[rule_id]
            pending.extend(
                BridgeEdge(p, entry, rule_id, Side.INTO_ENTRY, rounds + 1)
                for p in left_points[site.u1]
                if entry not in saturation.eps_out[p]
            )
            pending.extend(
                BridgeEdge(exit_, q, rule_id, Side.OUT_OF_EXIT, rounds + 1)
                for q in right_points[site.u2]
                if q not in saturation.eps_out[exit_]
            )
        fresh = []
        for edge in pending:
            if edge.target not in saturation.eps_out[edge.source]:
                saturation.add_epsilon(edge.source, edge.target)
                fresh.append(edge)
        if not fresh:
            break
        rounds += 1
        added.extend(fresh)
        logger.debug('saturação: rodada %d acrescentou %d arestas ε', rounds, len(fresh))
        if rounds > base.state_count ** 2:
            raise AssertionError('a saturação excedeu |estados|² rodadas')
    logger.info('fecho com %d estados, %d arestas ε acrescentadas em %d rodadas',
                base.state_count, len(added), rounds)
    return ClosureAutomaton(system, base, entries, exits, tuple(added), rounds)


def closure_language(system: SplicingSystem) -> Dfa:
    """DFA mínimo de L(I, R)."""
    return minimize(determinize(build_closure(system).automaton))
