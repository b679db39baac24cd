"""
Exceções da ferramenta de splicing.

Todas derivam de SplicingError, que por sua vez é um ValueError: entradas
inválidas são erros de valor, como nos modelos do projeto.
"""


class SplicingError(ValueError):
    """Erro base de todas as operações da aplicação."""


class RegexSyntaxError(SplicingError):
    """
    Expressão regular mal formada.

    Atributos:
        position (int): posição (0-based) do caractere onde o erro foi detectado.
    """

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f'{message} (posição {position})')
        self.position = position


class UnknownSymbolError(SplicingError):
    """
    Símbolo fora do alfabeto.

    Atributos:
        symbol (str): o símbolo encontrado.
    """

    def __init__(self, symbol: str) -> None:
        super().__init__(f'símbolo {symbol!r} não pertence ao alfabeto')
        self.symbol = symbol


class AlphabetError(SplicingError):
    pass


class AlphabetMismatchError(SplicingError):
    pass


class AutomatonFormatError(SplicingError):
    pass


class InfiniteAxiomsError(SplicingError):
    pass


class PreconditionError(SplicingError):
    pass


class RuleSyntaxError(SplicingError):
    pass


class VariantMismatchError(SplicingError):
    pass


class IllegalExtensionError(SplicingError):
    pass


class CandidateLimitError(SplicingError):
    """
    O espaço de regras candidatas excede o limite configurado.

    Atributos:
        count (int): número de candidatas dos limites pedidos.
        limit (int): limite em vigor (SPLICEKIT_CANDIDATE_LIMIT).
    """

    def __init__(self, count: int, limit: int) -> None:
        super().__init__(
            f'{count} regras candidatas excedem o limite de {limit} '
            f'(ajuste SPLICEKIT_CANDIDATE_LIMIT)'
        )
        self.count = count
        self.limit = limit
