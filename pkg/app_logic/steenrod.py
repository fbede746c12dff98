# -*- coding: utf-8 -*-
"""
Quadrados de Steenrod mod 2 sobre álgebras F₂ graduadas finitamente
apresentadas: normalização de Adem, bases admissíveis e fórmula de Wu.

Elementos são conjuntos de monômios (tuplas de expoentes na ordem dos
geradores); a soma é a diferença simétrica.
"""
import functools
import itertools
import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from app_logic.config import get_logger, get_setting
from app_logic.errors import DegreeOverflowError, DescriptorError, UnsupportedError

logger = get_logger(__name__)

Monomial = Tuple[int, ...]

_KINDS = ("polynomial", "exterior", "truncated")
_FACTOR_PATTERN = re.compile(r'^([A-Za-z][A-Za-z0-9_]*)(?:\^(\d+))?$')


def binomial_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2 pelo teorema de Lucas."""
    if k < 0 or n < 0 or k > n:
        return 0
    return 1 if (k & ~n) == 0 else 0


# --- Monômios admissíveis e relações de Adem ---

@dataclass(frozen=True, order=True)
class AdmissibleMonomial:
    sequence: Tuple[int, ...]

    def __post_init__(self):
        seq = tuple(int(i) for i in self.sequence)
        if any(i <= 0 for i in seq):
            raise ValueError(f"Índices de Sq devem ser positivos: {seq}")
        if any(seq[j] < 2 * seq[j + 1] for j in range(len(seq) - 1)):
            raise ValueError(f"Sequência não admissível: {seq}")
        object.__setattr__(self, 'sequence', seq)

    @property
    def degree(self) -> int:
        return sum(self.sequence)

    @property
    def excess(self) -> int:
        if not self.sequence:
            return 0
        return self.sequence[0] - sum(self.sequence[1:])

    def label(self) -> str:
        return "".join(f"Sq{i}" for i in self.sequence) or "1"

    def __str__(self) -> str:
        return self.label()


def _is_admissible(word: Tuple[int, ...]) -> bool:
    return all(word[j] >= 2 * word[j + 1] for j in range(len(word) - 1))


@functools.lru_cache(maxsize=None)
def _adem_pair(a: int, b: int) -> Tuple[Tuple[int, ...], ...]:
    """Sq^a Sq^b (a < 2b) = Σ_c C(b−c−1, a−2c) Sq^{a+b−c} Sq^c."""
    termos = []
    for c in range(a // 2 + 1):
        if binomial_mod2(b - c - 1, a - 2 * c):
            termos.append((a + b - c, c) if c else (a + b,))
    return tuple(termos)


@functools.lru_cache(maxsize=None)
def _normalize_word(word: Tuple[int, ...]) -> FrozenSet[Tuple[int, ...]]:
    word = tuple(i for i in word if i != 0)
    if _is_admissible(word):
        return frozenset({word})
    j = next(k for k in range(len(word) - 1) if word[k] < 2 * word[k + 1])
    resultado: set = set()
    for termo in _adem_pair(word[j], word[j + 1]):
        for normal in _normalize_word(word[:j] + termo + word[j + 2:]):
            resultado ^= {normal}
    return frozenset(resultado)


def adem_normalize(word: Sequence[int]) -> List[AdmissibleMonomial]:
    """Reescreve Sq^{i1}…Sq^{ik} como soma F₂ de monômios admissíveis (ordem determinística)."""
    palavra = tuple(int(i) for i in word)
    if any(i < 0 for i in palavra):
        raise ValueError(f"Índices negativos em {palavra}")
    return [AdmissibleMonomial(s) for s in sorted(_normalize_word(palavra))]


def admissible_monomials(degree: int) -> List[AdmissibleMonomial]:
    """Todos os monômios admissíveis de grau total `degree`."""
    saida: List[AdmissibleMonomial] = []

    def gerar(restante: int, maximo: int, prefixo: Tuple[int, ...]) -> None:
        if restante == 0:
            saida.append(AdmissibleMonomial(prefixo))
            return
        for i in range(min(restante, maximo), 0, -1):
            gerar(restante - i, i // 2, prefixo + (i,))

    gerar(degree, degree, ())
    return sorted(saida)


def serre_basis(n: int, cap: int, coefficients: str = "Z") -> List[AdmissibleMonomial]:
    """
    Sequências admissíveis I com excesso < n e n + |I| ≤ cap: os geradores
    polinomiais Sq^I ι_n de H*(K(π, n), Z₂). Com coeficientes Z nenhuma
    entrada vale 1.
    """
    if n < 1:
        raise ValueError("serre_basis exige n ≥ 1.")
    if coefficients not in ("Z", "Z2"):
        raise UnsupportedError(f"Coeficientes '{coefficients}' não suportados (use Z ou Z2).")
    base = []
    for grau in range(0, cap - n + 1):
        for I in admissible_monomials(grau):
            if I.excess >= n and I.sequence:
                continue
            if coefficients == "Z" and 1 in I.sequence:
                continue
            base.append(I)
    return sorted(base, key=lambda I: (I.degree, I.sequence))


# --- Álgebras F₂ graduadas ---

@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    kind: str = "polynomial"
    height: int = 0
    # x² substituído por esta expressão (classe de Thom: t² = e·t)
    square: Optional[str] = None
    # gerador Sq^I ι de um espaço de Eilenberg–MacLane
    sequence: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DescriptorError(f"Tipo de gerador desconhecido '{self.kind}' em {self.name}.")
        if self.kind == "truncated" and self.height < 2:
            raise DescriptorError(f"Gerador truncado {self.name} precisa de altura ≥ 2.")
        if self.degree < 1:
            raise DescriptorError(f"Gerador {self.name} com grau {self.degree}.")


class GradedF2Algebra:
    """
    Álgebra comutativa graduada sobre F₂ com ação de Steenrod dada nos geradores.

    `sq_table[nome][i]` é a expressão de Sqⁱ(gerador) para 0 < i < grau;
    entradas ausentes valem 0. Com `module_generator`, a base por grau se
    restringe aos monômios em que esse gerador aparece uma vez (H̃* de um
    espaço de Thom como t·H*(B)).
    """

    def __init__(self, name: str, generators: Sequence[Generator], cap: Optional[int] = None,
                 sq_table: Optional[Dict[str, Dict[int, str]]] = None,
                 zero_monomials: Sequence[str] = (),
                 eilenberg_maclane: Optional[Tuple[int, str]] = None,
                 module_generator: Optional[str] = None):
        self.name = name
        self.generators: Tuple[Generator, ...] = tuple(generators)
        self.cap = int(cap if cap is not None else get_setting('degree_cap'))
        self.index: Dict[str, int] = {}
        for k, g in enumerate(self.generators):
            if g.name in self.index:
                raise DescriptorError(f"{name}: gerador repetido '{g.name}'.")
            self.index[g.name] = k
        self.eilenberg_maclane = eilenberg_maclane
        self._by_sequence: Dict[Tuple[int, ...], int] = {
            g.sequence: k for k, g in enumerate(self.generators) if g.sequence is not None}
        if eilenberg_maclane is not None and () not in self._by_sequence:
            raise DescriptorError(f"{name}: falta a classe fundamental (sequência vazia).")
        self.module_generator = module_generator
        if module_generator is not None and module_generator not in self.index:
            raise DescriptorError(f"{name}: gerador de módulo '{module_generator}' inexistente.")
        self.zero_monomials = tuple(zero_monomials)
        self._zero = [self._parse_monomial(m) for m in self.zero_monomials]
        self._sq_text = {nome: {int(i): str(v) for i, v in tabela.items()}
                         for nome, tabela in (sq_table or {}).items()}
        for nome, tabela in self._sq_text.items():
            if nome not in self.index:
                raise DescriptorError(f"{name}: Sq definido para gerador inexistente '{nome}'.")
            grau = self.generators[self.index[nome]].degree
            for i in tabela:
                if not 0 < i < grau:
                    raise DescriptorError(
                        f"{name}: Sq^{i}({nome}) fora de 0 < i < {grau}; use as regras automáticas.")
        self._sq_cache: Dict[Tuple[int, Monomial], FrozenSet[Monomial]] = {}
        self._basis_cache: Dict[int, List[Monomial]] = {}

    def __repr__(self) -> str:
        return f"GradedF2Algebra({self.name!r}, cap={self.cap})"

    # --- Monômios ---
    def monomial_degree(self, m: Monomial) -> int:
        return sum(e * g.degree for e, g in zip(m, self.generators))

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.generators)

    def _parse_monomial(self, texto: str) -> Monomial:
        expo = [0] * len(self.generators)
        texto = texto.strip()
        if texto == "1":
            return tuple(expo)
        for fator in texto.split('*'):
            match = _FACTOR_PATTERN.match(fator.strip())
            if not match or match.group(1) not in self.index:
                raise DescriptorError(f"{self.name}: fator desconhecido '{fator}' em '{texto}'.")
            expo[self.index[match.group(1)]] += int(match.group(2) or 1)
        return tuple(expo)

    def _reduce_monomial(self, m: Monomial) -> FrozenSet[Monomial]:
        """Aplica as relações (exterior, truncamento, regra do quadrado, monômios nulos)."""
        for z in self._zero:
            if all(a >= b for a, b in zip(m, z)):
                return frozenset()
        for k, (e, g) in enumerate(zip(m, self.generators)):
            if g.kind == "exterior" and e >= 2:
                return frozenset()
            if g.kind == "truncated" and e >= g.height:
                return frozenset()
            if g.square is not None and e >= 2:
                resto = list(m)
                resto[k] -= 2
                return self._mul_terms(self._reduce_monomial(tuple(resto)),
                                       self.parse(g.square).terms)
        if self.monomial_degree(m) > self.cap:
            raise DegreeOverflowError(
                f"{self.name}: produto de grau {self.monomial_degree(m)} acima do teto {self.cap}.")
        return frozenset({m})

    def _mul_terms(self, a: Iterable[Monomial], b: Iterable[Monomial]) -> FrozenSet[Monomial]:
        resultado: set = set()
        b = list(b)
        for x in a:
            for y in b:
                for termo in self._reduce_monomial(tuple(p + q for p, q in zip(x, y))):
                    resultado ^= {termo}
        return frozenset(resultado)

    # --- Elementos ---
    def element(self, terms: Iterable[Monomial] = ()) -> 'F2Element':
        return F2Element(self, frozenset(terms))

    def zero(self) -> 'F2Element':
        return self.element()

    def one(self) -> 'F2Element':
        return self.element({self.unit_monomial()})

    def gen(self, name: str) -> 'F2Element':
        if name not in self.index:
            raise DescriptorError(f"{self.name}: gerador desconhecido '{name}'.")
        expo = [0] * len(self.generators)
        expo[self.index[name]] = 1
        return self.element({tuple(expo)})

    def parse(self, text: str) -> 'F2Element':
        """Expressões como 'a*b^2 + c', '0' ou '1'."""
        texto = str(text).strip()
        if texto in ("", "0"):
            return self.zero()
        resultado: set = set()
        for parcela in texto.split('+'):
            bruto = self._parse_monomial(parcela)
            for termo in self._reduce_monomial(bruto):
                resultado ^= {termo}
        return self.element(resultado)

    def format_monomial(self, m: Monomial) -> str:
        fatores = []
        for e, g in zip(m, self.generators):
            if e == 1:
                fatores.append(g.name)
            elif e > 1:
                fatores.append(f"{g.name}^{e}")
        return "*".join(fatores) if fatores else "1"

    def basis(self, degree: int) -> List[Monomial]:
        """Base monomial de grau `degree`, em ordem lexicográfica decrescente de expoentes."""
        if degree > self.cap:
            raise DegreeOverflowError(f"{self.name}: grau {degree} acima do teto {self.cap}.")
        if degree in self._basis_cache:
            return self._basis_cache[degree]
        faixas = []
        for g in self.generators:
            maximo = degree // g.degree
            if g.kind == "exterior" or g.square is not None:
                maximo = min(maximo, 1)
            elif g.kind == "truncated":
                maximo = min(maximo, g.height - 1)
            faixas.append(range(maximo + 1))
        base = []
        for expo in itertools.product(*faixas):
            if self.monomial_degree(expo) != degree:
                continue
            if any(all(a >= b for a, b in zip(expo, z)) for z in self._zero):
                continue
            if self.module_generator is not None and expo[self.index[self.module_generator]] != 1:
                continue
            base.append(tuple(expo))
        base.sort(reverse=True)
        self._basis_cache[degree] = base
        return base

    def basis_names(self, degree: int) -> List[str]:
        return [self.format_monomial(m) for m in self.basis(degree)]

    def coordinates(self, x: 'F2Element', degree: int) -> List[int]:
        """Vetor de x na base de `degree`; erro se x tiver termos fora dela."""
        base = self.basis(degree)
        posicao = {m: k for k, m in enumerate(base)}
        vec = [0] * len(base)
        for termo in x.terms:
            if termo not in posicao:
                raise DescriptorError(
                    f"{self.name}: termo {self.format_monomial(termo)} fora da base de grau {degree}.")
            vec[posicao[termo]] = 1
        return vec

    # --- Quadrados de Steenrod ---
    def _sq_generator(self, i: int, k: int) -> FrozenSet[Monomial]:
        g = self.generators[k]
        expo = [0] * len(self.generators)
        expo[k] = 1
        m = tuple(expo)
        if i == 0:
            return frozenset({m})
        if i == g.degree:
            return self._mul_terms({m}, {m})
        if i > g.degree:
            return frozenset()
        if self.eilenberg_maclane is not None and g.sequence is not None:
            return self._sq_on_fundamental((i,) + g.sequence)
        texto = self._sq_text.get(g.name, {}).get(i)
        if texto is None:
            return frozenset()
        valor = self.parse(texto)
        if any(self.monomial_degree(t) != g.degree + i for t in valor.terms):
            raise DescriptorError(f"{self.name}: Sq^{i}({g.name}) = {texto} com grau errado.")
        return valor.terms

    def _sq_on_fundamental(self, word: Tuple[int, ...]) -> FrozenSet[Monomial]:
        """Sq^{word} ι reescrito nos geradores Sq^J ι via Adem."""
        n, coeficientes = self.eilenberg_maclane
        resultado: set = set()
        for J in _normalize_word(word):
            for termo in self._admissible_on_fundamental(J, n, coeficientes):
                resultado ^= {termo}
        return frozenset(resultado)

    def _admissible_on_fundamental(self, J: Tuple[int, ...], n: int, coeficientes: str) -> FrozenSet[Monomial]:
        if coeficientes == "Z" and J and J[-1] == 1:
            return frozenset()
        if J in self._by_sequence:
            expo = [0] * len(self.generators)
            expo[self._by_sequence[J]] = 1
            return frozenset({tuple(expo)})
        excesso = J[0] - sum(J[1:]) if J else 0
        if excesso > n:
            return frozenset()
        if excesso == n:
            base = self._admissible_on_fundamental(J[1:], n, coeficientes)
            return self._mul_terms(base, base)
        raise DegreeOverflowError(
            f"{self.name}: gerador Sq^{J} ι não registrado (grau {n + sum(J)}, teto {self.cap}).")

    def _sq_monomial(self, i: int, m: Monomial) -> FrozenSet[Monomial]:
        chave = (i, m)
        if chave in self._sq_cache:
            return self._sq_cache[chave]
        if i == 0:
            resultado = frozenset({m})
        else:
            k = next((k for k, e in enumerate(m) if e), None)
            if k is None:
                resultado = frozenset()
            else:
                resto = list(m)
                resto[k] -= 1
                resto = tuple(resto)
                acumulado: set = set()
                # Cartan: Sqⁱ(g·r) = Σ Sq^a(g)·Sq^{i−a}(r)
                for a in range(0, min(i, self.generators[k].degree) + 1):
                    esquerda = self._sq_generator(a, k)
                    if not esquerda:
                        continue
                    direita = self._sq_monomial(i - a, resto)
                    for termo in self._mul_terms(esquerda, direita):
                        acumulado ^= {termo}
                resultado = frozenset(acumulado)
        self._sq_cache[chave] = resultado
        return resultado

    def sq(self, i: int, x: 'F2Element') -> 'F2Element':
        if i < 0:
            raise ValueError("Sq^i exige i ≥ 0.")
        resultado: set = set()
        for m in x.terms:
            grau = self.monomial_degree(m)
            if grau + i > self.cap:
                raise DegreeOverflowError(
                    f"{self.name}: Sq^{i} em grau {grau} ultrapassa o teto {self.cap}.")
            for termo in self._sq_monomial(i, m):
                resultado ^= {termo}
        return self.element(resultado)

    def apply_word(self, word: Sequence[int], x: 'F2Element') -> 'F2Element':
        """Sq^{i1}…Sq^{ik}(x), aplicando da direita para a esquerda."""
        for i in reversed(tuple(word)):
            x = self.sq(i, x)
        return x

    def sq_matrix(self, i: int, degree: int) -> List[List[int]]:
        """Matriz F₂ de Sqⁱ: grau → grau + i (linhas: base de destino)."""
        origem = self.basis(degree)
        destino = self.basis(degree + i)
        matriz = [[0] * len(origem) for _ in destino]
        for col, m in enumerate(origem):
            imagem = self.sq(i, self.element({m}))
            for row, v in enumerate(self.coordinates(imagem, degree + i)):
                matriz[row][col] = v
        return matriz


@dataclass(frozen=True, eq=False)
class F2Element:
    algebra: GradedF2Algebra = field(repr=False)
    terms: FrozenSet[Monomial] = frozenset()

    def _check(self, other: 'F2Element') -> None:
        if other.algebra is not self.algebra:
            raise DescriptorError(f"Elementos de álgebras distintas: {self.algebra.name} e {other.algebra.name}.")

    def __add__(self, other: 'F2Element') -> 'F2Element':
        self._check(other)
        return F2Element(self.algebra, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: 'F2Element') -> 'F2Element':
        self._check(other)
        return F2Element(self.algebra, self.algebra._mul_terms(self.terms, other.terms))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Element):
            return NotImplemented
        return other.algebra is self.algebra and other.terms == self.terms

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> List[int]:
        return sorted({self.algebra.monomial_degree(m) for m in self.terms})

    def sq(self, i: int) -> 'F2Element':
        return self.algebra.sq(i, self)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordenados = sorted(self.terms, key=lambda m: (self.algebra.monomial_degree(m), tuple(-e for e in m)))
        return " + ".join(self.algebra.format_monomial(m) for m in ordenados)


# --- Construtores ---

def eilenberg_maclane_algebra(name: str, n: int, cap: int, coefficients: str = "Z",
                              names: Optional[Dict[Tuple[int, ...], str]] = None) -> GradedF2Algebra:
    """H*(K(π, n), Z₂) polinomial nos Sq^I ι_n da base de Serre."""
    nomes = names or {}
    geradores = []
    for I in serre_basis(n, cap, coefficients):
        padrao = "i" + "_".join(str(i) for i in (n,) + I.sequence)
        geradores.append(Generator(nomes.get(I.sequence, padrao), n + I.degree, sequence=I.sequence))
    return GradedF2Algebra(name, geradores, cap, eilenberg_maclane=(n, coefficients))


def wu_terms(i: int, j: int, rank: Optional[int] = None, oriented: bool = False) -> List[Tuple[int, int]]:
    """
    Pares (a, b) com Sqⁱ(w_j) = Σ w_a·w_b, b ≤ a, w₀ = 1, segundo
    Sqⁱ(w_j) = Σ_k C(j−k−1, i−k) w_{i+j−k} w_k.
    """
    if i >= j:
        raise ValueError(f"Fórmula de Wu exige i < j (recebido i={i}, j={j}).")
    pares = []
    for k in range(0, i + 1):
        if not binomial_mod2(j - k - 1, i - k):
            continue
        a, b = i + j - k, k
        if rank is not None and (a > rank or b > rank):
            continue
        if oriented and 1 in (a, b):
            continue
        pares.append((a, b))
    return pares


def stiefel_whitney_algebra(rank: int, cap: Optional[int] = None, oriented: bool = False,
                            name: Optional[str] = None) -> GradedF2Algebra:
    """H*(BO(k), Z₂) ou H*(BSO(k), Z₂) com a ação gerada pela fórmula de Wu."""
    primeiro = 2 if oriented else 1
    geradores = [Generator(f"w{j}", j) for j in range(primeiro, rank + 1)]
    tabela: Dict[str, Dict[int, str]] = {}
    for j in range(primeiro, rank + 1):
        linhas = {}
        for i in range(1, j):
            termos = [f"w{a}" if b == 0 else f"w{a}*w{b}"
                      for a, b in wu_terms(i, j, rank, oriented)]
            if termos:
                linhas[i] = " + ".join(termos)
        tabela[f"w{j}"] = linhas
    rotulo = name or (f"BSO({rank})" if oriented else f"BO({rank})")
    return GradedF2Algebra(rotulo, geradores, cap, sq_table=tabela)


def wu_formula(i: int, j: int, rank: Optional[int] = None, oriented: bool = False) -> F2Element:
    """Sqⁱ(w_j) como elemento da álgebra de Stiefel–Whitney de posto `rank` (padrão i + j)."""
    if i >= j:
        raise ValueError(f"Fórmula de Wu exige i < j (recebido i={i}, j={j}).")
    posto = rank if rank is not None else i + j
    algebra = stiefel_whitney_algebra(posto, cap=max(i + j, posto), oriented=oriented)
    if j > posto or (oriented and j == 1):
        return algebra.zero()
    return algebra.sq(i, algebra.gen(f"w{j}"))


# --- Verificações ---

def check_adem_relations(algebra: GradedF2Algebra, max_sum: int = 12) -> List[str]:
    """Avalia os dois lados de toda relação de Adem com a + b ≤ max_sum em cada elemento da base."""
    violacoes = []
    for total in range(2, max_sum + 1):
        for a in range(1, total):
            b = total - a
            if a >= 2 * b:
                continue
            for grau in range(0, algebra.cap - total + 1):
                for m in algebra.basis(grau):
                    x = algebra.element({m})
                    esquerda = algebra.apply_word((a, b), x)
                    direita = algebra.zero()
                    for termo in _adem_pair(a, b):
                        direita = direita + algebra.apply_word(termo, x)
                    if esquerda != direita:
                        violacoes.append(
                            f"Sq{a}Sq{b}({algebra.format_monomial(m)}): {esquerda} ≠ {direita}")
    if violacoes:
        logger.warning(f"[check_adem_relations] {algebra.name}: {len(violacoes)} violações.")
    return violacoes


def total_square_is_multiplicative(algebra: GradedF2Algebra, x: F2Element, y: F2Element) -> bool:
    """Sq(xy) = Sq(x)·Sq(y) em todos os graus até o teto."""
    produto = x * y
    if produto.is_zero():
        return True
    grau = max(produto.degrees())
    for k in range(0, algebra.cap - grau + 1):
        direita = algebra.zero()
        for a in range(0, k + 1):
            direita = direita + algebra.sq(a, x) * algebra.sq(k - a, y)
        if algebra.sq(k, produto) != direita:
            return False
    return True


def sq1_squares_to_zero(algebra: GradedF2Algebra) -> bool:
    for grau in range(0, algebra.cap - 1):
        for m in algebra.basis(grau):
            if not algebra.apply_word((1, 1), algebra.element({m})).is_zero():
                return False
    return True
