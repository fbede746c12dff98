# -*- coding: utf-8 -*-
"""
Grupos abelianos finitamente gerados, elementos e morfismos em aritmética inteira exata.

Convenção de coordenadas: primeiro os geradores livres, depois os de torção
em ordem de divisibilidade (forma de fatores invariantes).
"""
import math
import re
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from app_logic.config import get_logger
from app_logic.errors import (
    InfiniteGroupError,
    MorphismMismatchError,
    UnsupportedError,
    WellDefinednessError,
)

logger = get_logger(__name__)

IntMatrix = Union[np.ndarray, Sequence[Sequence[int]]]

_TERM_PATTERN = re.compile(r'^Z(\d*)(?:\^(\d+))?$')


# --- Álgebra linear inteira ---

def _rows(M: IntMatrix, ncols: Optional[int] = None) -> List[List[int]]:
    if isinstance(M, np.ndarray):
        return [[int(v) for v in row] for row in M.tolist()] if M.size else [[] for _ in range(M.shape[0])]
    rows = [[int(v) for v in row] for row in M]
    if ncols is not None:
        for row in rows:
            if len(row) != ncols:
                raise MorphismMismatchError(f"Linha com {len(row)} colunas, esperado {ncols}.")
    return rows


def int_matrix(rows: Sequence[Sequence[int]], nrows: Optional[int] = None, ncols: Optional[int] = None) -> np.ndarray:
    """Matriz numpy de dtype object (inteiros Python, sem estouro)."""
    nrows = len(rows) if nrows is None else nrows
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    out = np.zeros((nrows, ncols), dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            out[i, j] = int(v)
    return out


def identity_matrix(n: int) -> np.ndarray:
    return int_matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)], n, n)


def _shape(M: IntMatrix) -> Tuple[int, int]:
    if isinstance(M, np.ndarray):
        return M.shape[0], (M.shape[1] if M.ndim > 1 else 0)
    return len(M), (len(M[0]) if len(M) else 0)


def smith_normal_form(M: IntMatrix) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Forma normal de Smith D = U·M·V com U, V unimodulares.
    D é diagonal, com entradas não negativas em ordem de divisibilidade (zeros no fim).
    """
    D, U, V, _ = _smith_with_inverse(M)
    return D, U, V


def smith_column_transform(M: IntMatrix) -> Tuple[np.ndarray, np.ndarray]:
    """Somente (D, V) da forma de Smith, sem acumular U (matrizes altas e esparsas)."""
    D, _, V, _ = _smith_with_inverse(M, with_u=False)
    return D, V


def smith_with_inverses(M: IntMatrix) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Como smith_normal_form, devolvendo também U⁻¹ e V⁻¹: (D, U, V, U⁻¹, V⁻¹)."""
    return _smith_with_inverse(M, with_u_inverse=True)


def _smith_with_inverse(M: IntMatrix, with_u_inverse: bool = False, with_u: bool = True):
    m, n = _shape(M)
    A = _rows(M)
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)] if with_u else None
    U_inv = [[1 if i == j else 0 for j in range(m)] for i in range(m)] if with_u_inverse else None
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    V_inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i: int, j: int) -> None:
        A[i], A[j] = A[j], A[i]
        if with_u:
            U[i], U[j] = U[j], U[i]
        if with_u_inverse:
            for row in U_inv:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i: int, j: int) -> None:
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        V_inv[i], V_inv[j] = V_inv[j], V_inv[i]

    def add_row(target: int, source: int, q: int) -> None:
        # linha_target += q * linha_source
        A[target] = [a + q * b for a, b in zip(A[target], A[source])]
        if with_u:
            U[target] = [a + q * b for a, b in zip(U[target], U[source])]
        if with_u_inverse:
            for row in U_inv:
                row[source] -= q * row[target]

    def add_col(target: int, source: int, q: int) -> None:
        # coluna_target += q * coluna_source
        for row in A:
            row[target] += q * row[source]
        for row in V:
            row[target] += q * row[source]
        V_inv[source] = [a - q * b for a, b in zip(V_inv[source], V_inv[target])]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] != 0 and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                        pivot = (i, j)
                        if abs(A[i][j]) == 1:
                            break
                if pivot is not None and abs(A[pivot[0]][pivot[1]]) == 1:
                    break
            if pivot is None:
                break
            if pivot[0] != t:
                swap_rows(t, pivot[0])
            if pivot[1] != t:
                swap_cols(t, pivot[1])
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        clean = False
            if not clean:
                continue
            bad_row = next((i for i in range(t + 1, m)
                            if any(A[i][j] % p for j in range(t + 1, n))), None)
            if bad_row is not None:
                add_row(t, bad_row, 1)
                continue
            break
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            if with_u:
                U[t] = [-a for a in U[t]]
            if with_u_inverse:
                for row in U_inv:
                    row[t] = -row[t]

    result = (int_matrix(A, m, n), int_matrix(U, m, m) if with_u else None, int_matrix(V, n, n))
    if with_u_inverse:
        return result + (int_matrix(U_inv, m, m), int_matrix(V_inv, n, n))
    return result + (int_matrix(V_inv, n, n),)


def diagonal(D: np.ndarray) -> List[int]:
    return [int(D[i, i]) for i in range(min(D.shape))]


def integer_kernel(M: IntMatrix) -> np.ndarray:
    """Base (colunas) do núcleo inteiro de M."""
    m, n = _shape(M)
    if n == 0:
        return np.zeros((0, 0), dtype=object)
    if m == 0:
        return identity_matrix(n)
    D, V = smith_column_transform(M)
    rank = sum(1 for d in diagonal(D) if d != 0)
    return V[:, rank:]


def lattice_basis(M: IntMatrix, dim: Optional[int] = None) -> np.ndarray:
    """Base do reticulado gerado pelas colunas de M."""
    m, n = _shape(M)
    if dim is not None:
        m = dim
    if n == 0 or m == 0:
        return np.zeros((m, 0), dtype=object)
    M = M if isinstance(M, np.ndarray) else int_matrix(M)
    D, V = smith_column_transform(M)
    rank = sum(1 for d in diagonal(D) if d != 0)
    return (M.dot(V))[:, :rank]


def lattice_coordinates(B: np.ndarray, x: np.ndarray) -> Optional[np.ndarray]:
    """
    Resolve B·y = x sobre Z para B de posto coluna completo.
    Retorna None se alguma coluna de x não pertence ao reticulado de B.
    """
    k, r = B.shape
    x = x.reshape(k, -1) if x.ndim == 1 else x
    if r == 0:
        return np.zeros((0, x.shape[1]), dtype=object) if not any(v != 0 for v in x.flatten()) else None
    D, U, V = smith_normal_form(B)
    d = diagonal(D)
    ux = U.dot(x)
    z = np.zeros((r, x.shape[1]), dtype=object)
    for col in range(x.shape[1]):
        for i in range(k):
            val = int(ux[i, col])
            if i < r and d[i] != 0:
                if val % d[i]:
                    return None
                z[i, col] = val // d[i]
            elif val != 0:
                return None
    return V.dot(z)


def lattice_contains(B: np.ndarray, x: np.ndarray) -> bool:
    return lattice_coordinates(B, x) is not None


def hermite_reduce(B: np.ndarray, x: np.ndarray) -> np.ndarray:
    """
    Primeiro representante lexicográfico de x + ⟨colunas de B⟩: linha a linha,
    as colunas com entrada não nula viram um único pivô (Euclides) e a entrada
    de x nessa linha é levada a [0, pivô).
    """
    colunas = [[int(v) for v in B[:, j]] for j in range(B.shape[1])] if B.size else []
    colunas = [c for c in colunas if any(c)]
    y = [int(v) for v in np.asarray(x).flatten()]
    for i in range(len(y)):
        pivo = None
        resto = []
        for c in colunas:
            if c[i] == 0:
                resto.append(c)
                continue
            if pivo is None:
                pivo = c
                continue
            a, b = pivo, c
            while b[i] != 0:
                q = a[i] // b[i]
                a, b = b, [ai - q * bi for ai, bi in zip(a, b)]
            pivo = a
            if any(b):
                resto.append(b)
        colunas = resto
        if pivo is None:
            continue
        if pivo[i] < 0:
            pivo = [-v for v in pivo]
        q = y[i] // pivo[i]
        y = [yi - q * pi for yi, pi in zip(y, pivo)]
    return np.array(y, dtype=object)


def cokernel_with_basis(num_generators: int, relations: IntMatrix) -> Tuple['AbelianGroup', np.ndarray, np.ndarray]:
    """
    Cokernel de Z^r -> Z^k (relações nas linhas) em forma canônica.

    Retorna (grupo, P, S): P leva coordenadas de Z^k às coordenadas canônicas
    (ainda não reduzidas), S leva cada gerador canônico a um vetor de Z^k.
    """
    k = num_generators
    rel = _rows(relations, k) if not isinstance(relations, np.ndarray) else _rows(relations)
    rel = [row for row in rel if any(row)]
    if not rel:
        return AbelianGroup(k, ()), identity_matrix(k), identity_matrix(k)
    D, _, V, V_inv = _smith_with_inverse(int_matrix(rel, len(rel), k))
    d = diagonal(D) + [0] * (k - min(D.shape))
    free_idx = [i for i in range(k) if d[i] == 0]
    torsion_idx = [i for i in range(k) if d[i] > 1]
    order = free_idx + torsion_idx
    P = V.T[order, :] if order else np.zeros((0, k), dtype=object)
    S = V_inv[order, :].T if order else np.zeros((k, 0), dtype=object)
    group = AbelianGroup(len(free_idx), tuple(d[i] for i in torsion_idx))
    return group, P, S


def from_presentation(num_generators: int, relations: IntMatrix) -> 'AbelianGroup':
    """Forma canônica do cokernel de uma apresentação com `num_generators` geradores."""
    group, _, _ = cokernel_with_basis(num_generators, relations)
    return group


# --- Tipos de domínio ---

@dataclass(frozen=True)
class AbelianGroup:
    free_rank: int = 0
    torsion_orders: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free_rank negativo.")
        orders = tuple(int(m) for m in self.torsion_orders)
        if any(m < 1 for m in orders):
            raise ValueError(f"Ordens de torção inválidas: {orders}")
        object.__setattr__(self, 'torsion_orders', _invariant_factors(orders))

    # --- Construtores ---
    @classmethod
    def from_cyclic(cls, orders: Iterable[int]) -> 'AbelianGroup':
        """Soma direta de cíclicos; ordem 0 denota Z."""
        orders = list(orders)
        return cls(sum(1 for m in orders if m == 0), tuple(m for m in orders if m > 1))

    @classmethod
    def parse(cls, text: str) -> 'AbelianGroup':
        texto = text.replace('⊕', '+').replace(' ', '')
        if texto in ('', '0'):
            return cls()
        free = 0
        torsion: List[int] = []
        for termo in texto.split('+'):
            if termo == '0':
                continue
            match = _TERM_PATTERN.match(termo)
            if not match:
                raise ValueError(f"Termo de grupo não reconhecido: '{termo}' em '{text}'")
            ordem = int(match.group(1)) if match.group(1) else 0
            vezes = int(match.group(2)) if match.group(2) else 1
            if ordem == 0:
                free += vezes
            elif ordem > 1:
                torsion.extend([ordem] * vezes)
        return cls(free, tuple(torsion))

    # --- Propriedades ---
    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion_orders)

    @property
    def generator_orders(self) -> Tuple[int, ...]:
        return (0,) * self.free_rank + self.torsion_orders

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def is_trivial(self) -> bool:
        return self.ngens == 0

    def order(self) -> Union[int, float]:
        if not self.is_finite():
            return math.inf
        return math.prod(self.torsion_orders)

    def label(self) -> str:
        partes: List[str] = []
        if self.free_rank:
            partes.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        for ordem, grupo in itertools.groupby(self.torsion_orders):
            vezes = len(list(grupo))
            partes.append(f"Z{ordem}" if vezes == 1 else f"Z{ordem}^{vezes}")
        return "+".join(partes) if partes else "0"

    def __str__(self) -> str:
        return self.label()

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.free_rank, self.torsion_orders)

    # --- Elementos ---
    def zero(self) -> 'GroupElement':
        return GroupElement(self, (0,) * self.ngens)

    def element(self, coefficients: Sequence[int]) -> 'GroupElement':
        return GroupElement(self, tuple(int(c) for c in coefficients))

    def generator(self, index: int) -> 'GroupElement':
        return GroupElement(self, tuple(1 if i == index else 0 for i in range(self.ngens)))

    def elements(self) -> Iterator['GroupElement']:
        """Enumera todos os elementos (somente grupos finitos), em ordem lexicográfica."""
        if not self.is_finite():
            raise InfiniteGroupError(f"Enumeração de elementos exige grupo finito, recebido {self.label()}.")
        for coords in itertools.product(*[range(m) for m in self.torsion_orders]):
            yield GroupElement(self, tuple(coords))

    def reduce(self, coefficients: Sequence[int]) -> Tuple[int, ...]:
        if len(coefficients) != self.ngens:
            raise MorphismMismatchError(
                f"Vetor com {len(coefficients)} coordenadas para grupo {self.label()} com {self.ngens} geradores.")
        out = list(int(c) for c in coefficients)
        for i, m in enumerate(self.torsion_orders):
            out[self.free_rank + i] %= m
        return tuple(out)


def _invariant_factors(orders: Tuple[int, ...]) -> Tuple[int, ...]:
    orders = tuple(m for m in orders if m > 1)
    if not orders:
        return ()
    # Já está em forma canônica?
    if all(orders[i + 1] % orders[i] == 0 for i in range(len(orders) - 1)):
        return orders
    n = len(orders)
    D, _, _ = smith_normal_form(int_matrix([[orders[i] if i == j else 0 for j in range(n)] for i in range(n)]))
    return tuple(d for d in diagonal(D) if d > 1)


def direct_sum(*groups: AbelianGroup) -> AbelianGroup:
    orders: List[int] = []
    for g in groups:
        orders.extend(g.generator_orders)
    return AbelianGroup.from_cyclic(orders)


Z = AbelianGroup(1)
TRIVIAL = AbelianGroup()


def cyclic(m: int) -> AbelianGroup:
    return AbelianGroup(1) if m == 0 else AbelianGroup(0, (m,))


@dataclass(frozen=True)
class GroupElement:
    group: AbelianGroup
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', self.group.reduce(self.coefficients))

    def _check(self, other: 'GroupElement') -> None:
        if other.group != self.group:
            raise MorphismMismatchError(f"Elementos de grupos distintos: {self.group} e {other.group}.")

    def __add__(self, other: 'GroupElement') -> 'GroupElement':
        self._check(other)
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> 'GroupElement':
        return GroupElement(self.group, tuple(-a for a in self.coefficients))

    def __sub__(self, other: 'GroupElement') -> 'GroupElement':
        return self + (-other)

    def __mul__(self, k: int) -> 'GroupElement':
        return GroupElement(self.group, tuple(k * a for a in self.coefficients))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coefficients)


def element_order(x: GroupElement) -> Union[int, float]:
    """Ordem do subgrupo cíclico gerado por x (math.inf se infinita)."""
    g = x.group
    if any(x.coefficients[:g.free_rank]):
        return math.inf
    ordem = 1
    for c, m in zip(x.coefficients[g.free_rank:], g.torsion_orders):
        ordem = math.lcm(ordem, m // math.gcd(c, m))
    return ordem


@dataclass(frozen=True, eq=False)
class GroupMorphism:
    """Morfismo dado pela matriz (codomínio × domínio) nas bases canônicas."""
    domain: AbelianGroup
    codomain: AbelianGroup
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        M = self.matrix if isinstance(self.matrix, np.ndarray) else int_matrix(
            self.matrix, self.codomain.ngens, self.domain.ngens)
        if M.shape != (self.codomain.ngens, self.domain.ngens):
            raise MorphismMismatchError(
                f"Matriz {M.shape} incompatível com {self.domain.label()} -> {self.codomain.label()}.")
        M = M.astype(object)
        cod = self.codomain
        for i, m in enumerate(cod.torsion_orders):
            row = cod.free_rank + i
            for j in range(M.shape[1]):
                M[row, j] = int(M[row, j]) % m
        # Cada gerador de torção deve ir num elemento anulado pela sua ordem
        for j, m in enumerate(self.domain.torsion_orders):
            col = self.domain.free_rank + j
            imagem = cod.element([m * int(v) for v in M[:, col]])
            if not imagem.is_zero():
                raise WellDefinednessError(
                    f"Morfismo mal definido: gerador de ordem {m} vai em elemento de ordem "
                    f"{element_order(cod.element(list(M[:, col])))}.")
        object.__setattr__(self, 'matrix', M)

    @classmethod
    def identity(cls, group: AbelianGroup) -> 'GroupMorphism':
        return cls(group, group, identity_matrix(group.ngens))

    @classmethod
    def zero(cls, domain: AbelianGroup, codomain: AbelianGroup) -> 'GroupMorphism':
        return cls(domain, codomain, np.zeros((codomain.ngens, domain.ngens), dtype=object))

    def __call__(self, x: Union[GroupElement, Sequence[int]]) -> GroupElement:
        if isinstance(x, GroupElement):
            if x.group != self.domain:
                raise MorphismMismatchError(f"Elemento de {x.group} aplicado a morfismo com domínio {self.domain}.")
            coords = x.coefficients
        else:
            coords = tuple(x)
        vec = int_matrix([[c] for c in coords], len(coords), 1)
        return self.codomain.element(list(self.matrix.dot(vec)[:, 0]) if self.codomain.ngens else [])

    def is_zero(self) -> bool:
        return all(self(self.domain.generator(j)).is_zero() for j in range(self.domain.ngens))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupMorphism):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and all(self(self.domain.generator(j)) == other(self.domain.generator(j))
                        for j in range(self.domain.ngens)))

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, tuple(map(tuple, self.matrix.tolist()))))


def compose(f: GroupMorphism, g: GroupMorphism) -> GroupMorphism:
    """f ∘ g."""
    if g.codomain != f.domain:
        raise MorphismMismatchError(
            f"Composição impossível: contradomínio {g.codomain.label()} ≠ domínio {f.domain.label()}.")
    if not f.matrix.size or not g.matrix.size:
        return GroupMorphism.zero(g.domain, f.codomain)
    return GroupMorphism(g.domain, f.codomain, f.matrix.dot(g.matrix))


def hom_group(A: AbelianGroup, B: AbelianGroup) -> AbelianGroup:
    """Forma canônica de Hom(A, B), somando Hom entre os fatores cíclicos."""
    orders: List[int] = []
    for a in A.generator_orders:
        for b in B.generator_orders:
            if a == 0:
                orders.append(b)
            elif b != 0:
                orders.append(math.gcd(a, b))
    return AbelianGroup.from_cyclic(orders)


def two_torsion(A: AbelianGroup) -> Tuple[AbelianGroup, GroupMorphism]:
    """Subgrupo {γ : 2γ = 0}, um Z2 por fator Z_{2^k}, com a inclusão."""
    pares = [(i, m) for i, m in enumerate(A.torsion_orders) if m % 2 == 0]
    G = AbelianGroup(0, (2,) * len(pares))
    M = np.zeros((A.ngens, G.ngens), dtype=object)
    for col, (i, m) in enumerate(pares):
        M[A.free_rank + i, col] = m // 2
    return G, GroupMorphism(G, A, M)


def extension_candidates(quotient: AbelianGroup, sub: AbelianGroup, limit: Optional[int] = None) -> List[AbelianGroup]:
    """
    Classes de isomorfismo dos grupos E em 0 -> sub -> E -> quotient -> 0.

    Para cada fator Z_m do quociente, m·g = a com a percorrendo sub/m·sub
    (Ext(Z_m, A) = A/mA); fatores livres não oferecem escolha.
    """
    k_a = sub.ngens
    escolhas_por_fator = []
    total = 1
    for m in quotient.torsion_orders:
        # a e a + m·sub dão a mesma extensão; basta percorrer representantes de sub/m·sub
        faixas = [range(m) if o == 0 else range(math.gcd(o, m)) for o in sub.generator_orders]
        escolhas = list(itertools.product(*faixas))
        escolhas_por_fator.append(escolhas)
        total *= max(1, len(escolhas))
    if limit is not None and total > limit:
        raise UnsupportedError(
            f"Extensões de {quotient.label()} por {sub.label()}: {total} escolhas excedem o limite {limit}.")

    candidatos = set()
    k_q = quotient.ngens
    for combo in itertools.product(*escolhas_por_fator):
        relacoes: List[List[int]] = []
        for i, o in enumerate(sub.generator_orders):
            if o:
                linha = [0] * (k_a + k_q)
                linha[i] = o
                relacoes.append(linha)
        for t, (m, a) in enumerate(zip(quotient.torsion_orders, combo)):
            linha = [-int(v) for v in a] + [0] * k_q
            linha[k_a + quotient.free_rank + t] = m
            relacoes.append(linha)
        candidatos.add(from_presentation(k_a + k_q, relacoes))
    return sorted(candidatos, key=AbelianGroup.sort_key)


# --- Subquocientes de reticulados ---

class Subquotient:
    """
    Grupo Z/B para reticulados B ⊆ Z ⊆ Z^k dados por colunas geradoras.
    Usado pelas cocadeias (groupcoh) e pelas células da sequência espectral (ahss).
    """

    def __init__(self, cycles: np.ndarray, boundaries: np.ndarray):
        self.dim = cycles.shape[0]
        self.cycles = lattice_basis(cycles, self.dim)
        self.boundaries = lattice_basis(boundaries, self.dim)
        coords = lattice_coordinates(self.cycles, self.boundaries)
        if coords is None:
            raise WellDefinednessError("Subquociente inválido: bordos fora do reticulado de ciclos.")
        z = self.cycles.shape[1]
        self.group, self._projection, self._section = cokernel_with_basis(z, coords.T)

    def representative(self, index: int) -> np.ndarray:
        """Vetor ambiente que representa o gerador canônico `index`."""
        return self.cycles.dot(self._section[:, index])

    def representatives(self) -> List[np.ndarray]:
        return [self.representative(i) for i in range(self.group.ngens)]

    def lexicographic_representatives(self) -> List[np.ndarray]:
        return [hermite_reduce(self.boundaries, self.representative(i)) for i in range(self.group.ngens)]

    def coordinates(self, x: np.ndarray) -> GroupElement:
        """Classe de um ciclo x (vetor ambiente) no grupo canônico."""
        y = lattice_coordinates(self.cycles, x.reshape(self.dim, 1))
        if y is None:
            raise WellDefinednessError("Vetor não é um ciclo do subquociente.")
        coords = self._projection.dot(y)[:, 0] if self.group.ngens else []
        return self.group.element(list(coords))
