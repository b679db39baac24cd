"""
Expressões regulares do dialeto mínimo da ferramenta.

Sintaxe: símbolos do alfabeto, concatenação, ``|``, ``*``, ``+`` e parênteses.
Um grupo ou alternativa vazia, como ``()``, denota a palavra vazia.

A tradução para Nfa segue a construção de Thompson.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .automata import Alphabet, Nfa
from .exceptions import RegexSyntaxError, UnknownSymbolError

OPERATORS = frozenset('|*+()')


@dataclass
class _Builder:
    state_count: int = 0
    edges: set[tuple[int, str, int]] = field(default_factory=set)
    epsilon: set[tuple[int, int]] = field(default_factory=set)

    def new_state(self) -> int:
        self.state_count += 1
        return self.state_count - 1

    def symbol(self, symbol: str) -> tuple[int, int]:
        start, end = self.new_state(), self.new_state()
        self.edges.add((start, symbol, end))
        return start, end

    def empty(self) -> tuple[int, int]:
        start, end = self.new_state(), self.new_state()
        self.epsilon.add((start, end))
        return start, end

    def concat(self, first: tuple[int, int], second: tuple[int, int]) -> tuple[int, int]:
        self.epsilon.add((first[1], second[0]))
        return first[0], second[1]

    def alternation(self, fragments: list[tuple[int, int]]) -> tuple[int, int]:
        start, end = self.new_state(), self.new_state()
        for inner_start, inner_end in fragments:
            self.epsilon.add((start, inner_start))
            self.epsilon.add((inner_end, end))
        return start, end

    def repeat(self, fragment: tuple[int, int], at_least_once: bool) -> tuple[int, int]:
        start, end = self.new_state(), self.new_state()
        inner_start, inner_end = fragment
        self.epsilon.add((start, inner_start))
        self.epsilon.add((inner_end, inner_start))
        self.epsilon.add((inner_end, end))
        if not at_least_once:
            self.epsilon.add((start, end))
        return start, end


class _Parser:
    """Descida recursiva: expr := term ('|' term)*; term := factor*; factor := atom ('*'|'+')*."""

    def __init__(self, text: str, alphabet: Alphabet) -> None:
        self.text = text
        self.alphabet = alphabet
        self.position = 0
        self.builder = _Builder()

    def peek(self) -> str | None:
        return self.text[self.position] if self.position < len(self.text) else None

    def parse(self) -> Nfa:
        start, end = self.expression()
        if self.peek() is not None:
            raise RegexSyntaxError(f'{self.peek()!r} inesperado', self.position)
        return Nfa(
            self.alphabet,
            self.builder.state_count,
            frozenset({start}),
            frozenset({end}),
            frozenset(self.builder.edges),
            frozenset(self.builder.epsilon),
        )

    def expression(self) -> tuple[int, int]:
        alternatives = [self.term()]
        while self.peek() == '|':
            self.position += 1
            alternatives.append(self.term())
        if len(alternatives) == 1:
            return alternatives[0]
        return self.builder.alternation(alternatives)

    def term(self) -> tuple[int, int]:
        fragment = None
        while self.peek() is not None and self.peek() not in '|)':
            factor = self.factor()
            fragment = factor if fragment is None else self.builder.concat(fragment, factor)
        return self.builder.empty() if fragment is None else fragment

    def factor(self) -> tuple[int, int]:
        fragment = self.atom()
        while self.peek() in ('*', '+'):
            fragment = self.builder.repeat(fragment, at_least_once=self.peek() == '+')
            self.position += 1
        return fragment

    def atom(self) -> tuple[int, int]:
        char = self.peek()
        if char == '(':
            opening = self.position
            self.position += 1
            fragment = self.expression()
            if self.peek() != ')':
                raise RegexSyntaxError('parêntese não fechado', opening)
            self.position += 1
            return fragment
        if char in ('*', '+'):
            raise RegexSyntaxError(f'{char!r} sem operando', self.position)
        if char not in self.alphabet:
            raise UnknownSymbolError(char)
        self.position += 1
        return self.builder.symbol(char)


def parse_regex(text: str, alphabet: Alphabet) -> Nfa:
    """Traduz ``text`` num Nfa que aceita exatamente a linguagem denotada."""
    clash = OPERATORS.intersection(alphabet)
    if clash:
        raise RegexSyntaxError(f'o alfabeto contém operadores: {"".join(sorted(clash))}', 0)
    return _Parser(text, alphabet).parse()
