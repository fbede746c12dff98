# -*- coding: utf-8 -*-
from typing import List, Optional


class BordismoError(Exception):
    """Erro base de todas as computações do pacote."""


class InfiniteGroupError(BordismoError):
    """Operação que exige enumeração recebeu um grupo infinito."""


class UnsupportedError(BordismoError):
    pass


class MorphismMismatchError(BordismoError):
    """Domínio/contradomínio incompatíveis ou matriz com formato errado."""


class WellDefinednessError(BordismoError):
    pass


class NonIntegralError(BordismoError):
    """Uma fórmula racional que deveria ser inteira não é (dados inválidos)."""


class DegreeOverflowError(BordismoError):
    pass


class DescriptorError(BordismoError):
    """Arquivo de descritor ausente, malformado ou inconsistente."""


class MissingDataError(BordismoError):
    pass


class WindowError(BordismoError):
    pass


class AssertionConflictError(BordismoError):
    """Asserção incompatível com d∘d = 0, com as ordens dos grupos ou com a página."""


class PageNotStabilizedError(BordismoError):
    def __init__(self, message: str, unresolved: Optional[List[str]] = None):
        super().__init__(message)
        self.unresolved = list(unresolved or [])


class UndeterminedEntryError(BordismoError):
    """Entrada que os dados de origem deixam em aberto (célula '?' ou coeficiente indeterminado)."""

    def __init__(self, message: str, candidates: Optional[List[str]] = None):
        super().__init__(message)
        self.candidates = list(candidates or [])


class GoldenMismatchError(BordismoError):
    def __init__(self, message: str, diffs: Optional[List[str]] = None):
        super().__init__(message)
        self.diffs = list(diffs or [])
