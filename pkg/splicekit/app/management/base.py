"""
Base comum dos comandos da ferramenta: opções compartilhadas, leitura de
linguagens e sistemas e a tradução de erros em códigos de saída.
"""
from __future__ import annotations

import logging
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from functools import partial
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError, CommandParser

from app.automata import Alphabet, Dfa, language_of
from app.exceptions import AlphabetMismatchError, SplicingError
from app.regex import OPERATORS, parse_regex
from app.serializers import automaton_from_json, system_from_json
from app.splicing import SplicingSystem, Variant

EX_USAGE = 64
EX_DATAERR = 65
EX_NOINPUT = 66


@dataclass(frozen=True)
class LangSpec:
    """
    Linguagem dada na linha de comando.

    Atributos:
        source (str): expressão regular, ou caminho de um JSON de autômato
            (``@caminho``, ou qualquer valor terminado em ``.json``).
        alphabet (str | None): símbolos do alfabeto; sem ele, o alfabeto vem do
            arquivo ou dos símbolos da expressão, em ordem de código.
    """
    source: str
    alphabet: str | None = None

    @property
    def path(self) -> str | None:
        if self.source.startswith('@'):
            return self.source[1:]
        if self.source.endswith('.json'):
            return self.source
        return None

    def resolve(self) -> Dfa:
        if self.path is not None:
            automaton = automaton_from_json(Path(self.path).read_text(encoding='utf-8'))
            if self.alphabet is not None and automaton.alphabet != Alphabet.of(self.alphabet):
                raise AlphabetMismatchError(
                    f'o arquivo usa o alfabeto {automaton.alphabet}, não {self.alphabet}'
                )
            return language_of(automaton)
        if self.alphabet is None:
            alphabet = Alphabet.of(sorted(set(self.source) - OPERATORS))
        else:
            alphabet = Alphabet.of(self.alphabet)
        return language_of(parse_regex(self.source, alphabet))


def read_system(path: str) -> SplicingSystem:
    return system_from_json(Path(path).read_text(encoding='utf-8'))


def write_text(path: str, content: str) -> None:
    Path(path).write_text(content if content.endswith('\n') else content + '\n', encoding='utf-8')


class SplicingCommand(BaseCommand):
    """
    Comando base. As subclasses implementam ``perform``; erros de dados saem
    com 65, arquivos ausentes com 66 e erros de uso com 64.
    """
    requires_system_checks = []

    def create_parser(self, prog_name: str, subcommand: str, **kwargs) -> CommandParser:
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.error = partial(self._usage_error, parser)
        return parser

    @staticmethod
    def _usage_error(parser: CommandParser, message: str) -> None:
        if getattr(parser, 'called_from_command_line', False):
            parser.print_usage(sys.stderr)
            parser.exit(EX_USAGE, f'{parser.prog}: erro: {message}\n')
        raise CommandError(f'Error: {message}', returncode=EX_USAGE)

    # opções compartilhadas

    def add_lang_arguments(self, parser: CommandParser, alphabet_required: bool = False) -> None:
        parser.add_argument('--lang', required=True, help='expressão regular ou @arquivo JSON de autômato')
        parser.add_argument('--alphabet', required=alphabet_required, help='símbolos do alfabeto, por exemplo "ab"')

    def add_variant_argument(self, parser: CommandParser) -> None:
        parser.add_argument('--variant', required=True, choices=Variant.values)

    def lang(self, options: dict) -> Dfa:
        return LangSpec(options['lang'], options.get('alphabet')).resolve()

    @contextmanager
    def _verbosity(self, verbosity: int):
        app_logger = logging.getLogger('app')
        previous = app_logger.level
        if verbosity >= 2:
            app_logger.setLevel(logging.DEBUG)
        try:
            yield
        finally:
            app_logger.setLevel(previous)

    def handle(self, *args, **options):
        with self._verbosity(options.get('verbosity', 1)):
            try:
                self.perform(*args, **options)
            except FileNotFoundError as exc:
                raise CommandError(f'arquivo não encontrado: {exc.filename}', returncode=EX_NOINPUT) from exc
            except SplicingError as exc:
                raise CommandError(str(exc), returncode=EX_DATAERR) from exc

    def perform(self, *args, **options) -> None:
        raise NotImplementedError('subclasses of SplicingCommand must provide a perform() method')
