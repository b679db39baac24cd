"""
Formatos de entrada e saída: JSON de autômatos, sistemas e monoides, DOT para
visualização e a forma compacta de palavras usada nos resumos.

Toda saída JSON é compacta, com chaves na ordem fixa do formato e listas
ordenadas, para que execuções repetidas produzam os mesmos bytes.
"""
from __future__ import annotations

import json
import re
from dataclasses import fields
from itertools import groupby
from typing import Any, Iterable

from .automata import Alphabet, Dfa, Nfa, Word
from .closure import BridgeEdge, ClosureAutomaton
from .exceptions import AutomatonFormatError, RuleSyntaxError, SplicingError
from .splicing import RULE_TYPES, Rule, SplicingSystem, Variant
from .syntactic import SyntacticMonoid

SEPARATORS = (',', ':')

# cores dos caminhos de ponte no DOT, uma por regra (ciclando)
PALETTE = ('red', 'blue', 'darkgreen', 'orange', 'purple', 'brown', 'magenta', 'cyan4')


def dumps(data: Any) -> str:
    return json.dumps(data, separators=SEPARATORS, ensure_ascii=False)


def format_word(word: Word) -> str:
    """ε para a palavra vazia; sequências de mais de 3 símbolos iguais viram a^n."""
    if not word:
        return 'ε'
    parts = []
    for symbol, run in groupby(word):
        count = len(list(run))
        parts.append(f'{symbol}^{count}' if count > 3 else symbol * count)
    return ''.join(parts)


def automaton_to_dict(automaton: Nfa | Dfa) -> dict:
    if isinstance(automaton, Dfa):
        edges = [
            [source, symbol, target]
            for source, row in enumerate(automaton.transitions)
            for symbol, target in zip(automaton.alphabet, row)
        ]
        initial, epsilon = [automaton.initial], []
    else:
        edges = [list(edge) for edge in automaton.edges]
        initial = sorted(automaton.initial)
        epsilon = sorted(list(edge) for edge in automaton.epsilon)
    return {
        'alphabet': list(automaton.alphabet),
        'states': automaton.state_count,
        'initial': initial,
        'accepting': sorted(automaton.accepting),
        'edges': sorted(edges),
        'epsilon': epsilon,
    }


def automaton_to_json(automaton: Nfa | Dfa) -> str:
    return dumps(automaton_to_dict(automaton))


def _expect(data: dict, key: str, kind: type) -> Any:
    if key not in data:
        raise AutomatonFormatError(f'campo {key!r} ausente')
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise AutomatonFormatError(f'campo {key!r} deveria ser {kind.__name__}')
    return value


def _alphabet(value: Any) -> Alphabet:
    if not isinstance(value, list):
        raise AutomatonFormatError('o alfabeto deve ser uma lista de símbolos')
    try:
        return Alphabet.of(value)
    except SplicingError as exc:
        raise AutomatonFormatError(str(exc)) from exc


def automaton_from_dict(data: Any) -> Nfa:
    if not isinstance(data, dict):
        raise AutomatonFormatError('o autômato deve ser um objeto JSON')
    alphabet = _alphabet(data.get('alphabet'))
    states = _expect(data, 'states', int)
    try:
        edges = {(int(s), str(a), int(t)) for s, a, t in _expect(data, 'edges', list)}
        epsilon = {(int(s), int(t)) for s, t in data.get('epsilon', [])}
        return Nfa(
            alphabet,
            states,
            frozenset(_expect(data, 'initial', list)),
            frozenset(_expect(data, 'accepting', list)),
            frozenset(edges),
            frozenset(epsilon),
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, AutomatonFormatError):
            raise
        raise AutomatonFormatError(f'autômato inválido: {exc}') from exc


def automaton_from_json(text: str) -> Nfa:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AutomatonFormatError(f'JSON inválido: {exc.msg} (linha {exc.lineno})') from exc
    return automaton_from_dict(data)


def rule_to_list(rule: Rule) -> list[Word]:
    return list(rule.components)


def system_to_dict(system: SplicingSystem) -> dict:
    axioms = automaton_to_dict(system.axioms) if system.symbolic_axioms else system.alphabet.sorted(system.axioms)
    return {
        'variant': system.variant.value,
        'alphabet': list(system.alphabet),
        'axioms': axioms,
        'rules': [rule_to_list(rule) for rule in system.rules],
    }


def system_to_json(system: SplicingSystem) -> str:
    return dumps(system_to_dict(system))


def system_from_dict(data: Any) -> SplicingSystem:
    """Axiomas como lista de palavras ou como objeto de autômato (sistemas canônicos)."""
    if not isinstance(data, dict):
        raise AutomatonFormatError('o sistema deve ser um objeto JSON')
    try:
        variant = Variant(data.get('variant'))
    except ValueError as exc:
        raise AutomatonFormatError(f'variante desconhecida: {data.get("variant")!r}') from exc
    alphabet = _alphabet(data.get('alphabet'))
    axioms = data.get('axioms', [])
    if isinstance(axioms, dict):
        axioms = automaton_from_dict(axioms)
    elif not isinstance(axioms, list) or not all(isinstance(word, str) for word in axioms):
        raise AutomatonFormatError('axiomas devem ser uma lista de palavras ou um autômato')
    rule_type = RULE_TYPES[variant]
    arity = len(fields(rule_type))
    rules = []
    for components in data.get('rules', []):
        if (
            not isinstance(components, list)
            or len(components) != arity
            or not all(isinstance(c, str) for c in components)
        ):
            raise RuleSyntaxError(f'regra {components!r}: esperados {arity} componentes')
        rules.append(rule_type(*components))
    return SplicingSystem(variant, alphabet, tuple(axioms) if isinstance(axioms, list) else axioms, tuple(rules))


def system_from_json(text: str) -> SplicingSystem:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AutomatonFormatError(f'JSON inválido: {exc.msg} (linha {exc.lineno})') from exc
    return system_from_dict(data)


def monoid_to_dict(monoid: SyntacticMonoid) -> dict:
    return {
        'size': monoid.size,
        'identity': monoid.identity,
        'table': [list(row) for row in monoid.table],
        'generators': monoid.generator_map,
        'representatives': list(monoid.representatives),
        'accepting': sorted(monoid.accepting),
    }


def monoid_to_json(monoid: SyntacticMonoid) -> str:
    return dumps(monoid_to_dict(monoid))


def _dot_label(symbol: str) -> str:
    return re.sub(r'(["\\])', r'\\\1', symbol)


def to_dot(automaton: Nfa | Dfa, bridges: Iterable[BridgeEdge] = (), name: str = 'automaton') -> str:
    """
    Grafo DOT. Arestas ε acrescentadas pela saturação aparecem tracejadas, com a
    cor da regra que as criou.
    """
    data = automaton_to_dict(automaton)
    bridges = list(bridges)
    added = {(edge.source, edge.target) for edge in bridges}
    lines = [f'digraph {name} {{', '    rankdir=LR;', '    node [shape=circle];']
    for state in data['accepting']:
        lines.append(f'    {state} [shape=doublecircle];')
    for position, state in enumerate(data['initial']):
        lines.append(f'    start{position} [shape=point];')
        lines.append(f'    start{position} -> {state};')
    for source, symbol, target in data['edges']:
        lines.append(f'    {source} -> {target} [label="{_dot_label(symbol)}"];')
    for source, target in data['epsilon']:
        if (source, target) not in added:
            lines.append(f'    {source} -> {target} [label="ε"];')
    for edge in bridges:
        colour = PALETTE[edge.rule_id % len(PALETTE)]
        lines.append(
            f'    {edge.source} -> {edge.target} '
            f'[label="ε r{edge.rule_id}", style=dashed, color={colour}, fontcolor={colour}];'
        )
    lines.append('}')
    return '\n'.join(lines) + '\n'


def closure_to_dot(closure: ClosureAutomaton) -> str:
    return to_dot(closure.automaton, closure.added_epsilon, name='closure')
