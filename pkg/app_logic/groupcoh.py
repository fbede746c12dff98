# -*- coding: utf-8 -*-
"""
Cohomologia de grupos pelo complexo de barras normalizado, formas bilineares e
quadráticas, H²_sym e classes-diferença.

Cocadeias são tabelas densas indexadas por tuplas de coordenadas de elementos
de π₀; o codiferencial segue a convenção

    δβ(x1..x_{n+1}) = λ_{x1} β(x2..x_{n+1})
                      + Σ_{i=1..n} (-1)^i β(x1..x_i + x_{i+1}..x_{n+1})
                      + (-1)^{n+1} β(x1..x_n).
"""
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from app_logic.abgrp import (
    AbelianGroup,
    GroupElement,
    GroupMorphism,
    Subquotient,
    compose,
    cyclic,
    diagonal,
    direct_sum,
    hom_group,
    identity_matrix,
    int_matrix,
    integer_kernel,
    smith_column_transform,
    smith_with_inverses,
    two_torsion,
)
from app_logic.config import get_logger, get_setting
from app_logic.errors import (
    InfiniteGroupError,
    MorphismMismatchError,
    UnsupportedError,
    WellDefinednessError,
)

logger = get_logger(__name__)

Coords = Tuple[int, ...]
Args = Tuple[Coords, ...]
Action = Dict[Coords, GroupMorphism]

_Z2 = cyclic(2)


# --- Auxiliares de enumeração ---

def _require_finite(pi0: AbelianGroup, contexto: str) -> None:
    if not pi0.is_finite():
        raise InfiniteGroupError(f"{contexto}: π₀ = {pi0.label()} precisa ser finito.")


def _check_size(pi0: AbelianGroup, n: int) -> None:
    limite = get_setting('max_pi0_degree3') if n >= 3 else get_setting('max_pi0_degree2')
    if pi0.order() > limite:
        raise UnsupportedError(
            f"|π₀| = {pi0.order()} excede o limite {limite} para cocadeias de grau {n}.")


def _nonzero_elements(pi0: AbelianGroup) -> List[Coords]:
    return [x.coefficients for x in pi0.elements() if not x.is_zero()]


def _add(pi0: AbelianGroup, x: Coords, y: Coords) -> Coords:
    return pi0.reduce([a + b for a, b in zip(x, y)])


def _is_zero(x: Coords) -> bool:
    return not any(x)


def _tuples(pi0: AbelianGroup, n: int) -> List[Args]:
    return list(itertools.product(_nonzero_elements(pi0), repeat=n))


def trivial_action(pi0: AbelianGroup, pi1: AbelianGroup) -> Action:
    ident = GroupMorphism.identity(pi1)
    return {x.coefficients: ident for x in pi0.elements()}


def action_from_generators(pi0: AbelianGroup, pi1: AbelianGroup,
                           automorphisms: Sequence[GroupMorphism]) -> Action:
    """Estende λ dado nos geradores canônicos de π₀ a todos os elementos."""
    _require_finite(pi0, "action_from_generators")
    if len(automorphisms) != pi0.ngens:
        raise MorphismMismatchError(
            f"{len(automorphisms)} automorfismos para {pi0.ngens} geradores de {pi0.label()}.")
    ident = GroupMorphism.identity(pi1)
    for lam, m in zip(automorphisms, pi0.generator_orders):
        potencia = ident
        for _ in range(m):
            potencia = compose(lam, potencia)
        if potencia != ident:
            raise WellDefinednessError(f"λ de um gerador de ordem {m} não tem ordem dividindo {m}.")
    acao: Action = {}
    for x in pi0.elements():
        lam = ident
        for k, c in enumerate(x.coefficients):
            for _ in range(c):
                lam = compose(automorphisms[k], lam)
        acao[x.coefficients] = lam
    return acao


# --- Cocadeias ---

@dataclass
class Cochain:
    degree: int
    pi0: AbelianGroup
    pi1: AbelianGroup
    values: Dict[Args, Coords] = field(default_factory=dict)
    action: Optional[Action] = field(default=None, repr=False)

    def __post_init__(self):
        _require_finite(self.pi0, "Cochain")
        tabela: Dict[Args, Coords] = {}
        for args, valor in self.values.items():
            args = tuple(self.pi0.reduce(a) for a in args)
            if len(args) != self.degree:
                raise MorphismMismatchError(f"Argumento {args} em cocadeia de grau {self.degree}.")
            valor = self.pi1.reduce(valor)
            if any(_is_zero(a) for a in args):
                if any(valor):
                    raise WellDefinednessError(
                        f"Cocadeia não normalizada: valor {valor} em {args} com argumento nulo.")
                continue
            if any(valor):
                tabela[args] = valor
        self.values = tabela

    @classmethod
    def zero(cls, degree: int, pi0: AbelianGroup, pi1: AbelianGroup,
             action: Optional[Action] = None) -> 'Cochain':
        return cls(degree, pi0, pi1, {}, action)

    @classmethod
    def from_function(cls, degree: int, pi0: AbelianGroup, pi1: AbelianGroup,
                      fn: Callable[..., Union[GroupElement, Sequence[int]]],
                      action: Optional[Action] = None) -> 'Cochain':
        """Tabela a partir de fn(x1, ..., xn) nas coordenadas; argumentos nulos são ignorados."""
        valores = {}
        for args in _tuples(pi0, degree):
            v = fn(*args)
            valores[args] = v.coefficients if isinstance(v, GroupElement) else tuple(v)
        return cls(degree, pi0, pi1, valores, action)

    def __call__(self, *args: Union[GroupElement, Sequence[int]]) -> GroupElement:
        chave = tuple(self.pi0.reduce(a.coefficients if isinstance(a, GroupElement) else a) for a in args)
        return self.pi1.element(self.values.get(chave, (0,) * self.pi1.ngens))

    def _check(self, other: 'Cochain') -> None:
        if (self.degree, self.pi0, self.pi1) != (other.degree, other.pi0, other.pi1):
            raise MorphismMismatchError(
                f"Cocadeias incompatíveis: grau {self.degree} em ({self.pi0}, {self.pi1}) "
                f"e grau {other.degree} em ({other.pi0}, {other.pi1}).")

    def __add__(self, other: 'Cochain') -> 'Cochain':
        self._check(other)
        chaves = set(self.values) | set(other.values)
        return Cochain(self.degree, self.pi0, self.pi1,
                       {k: (self(*k) + other(*k)).coefficients for k in chaves}, self.action)

    def __neg__(self) -> 'Cochain':
        return Cochain(self.degree, self.pi0, self.pi1,
                       {k: (-self(*k)).coefficients for k in self.values}, self.action)

    def __sub__(self, other: 'Cochain') -> 'Cochain':
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.values

    def is_symmetric(self) -> bool:
        if self.degree != 2:
            raise UnsupportedError("Simetria só é definida para 2-cocadeias.")
        return all(self(x, y) == self(y, x) for x, y in _tuples(self.pi0, 2))

    # --- Vetores de coordenadas: posição = índice_da_tupla * r1 + j ---
    def to_vector(self) -> np.ndarray:
        r1 = self.pi1.ngens
        indices = _tuples(self.pi0, self.degree)
        vec = np.zeros((len(indices) * r1,), dtype=object)
        for t, args in enumerate(indices):
            valor = self.values.get(args)
            if valor:
                for j, c in enumerate(valor):
                    vec[t * r1 + j] = c
        return vec

    @classmethod
    def from_vector(cls, degree: int, pi0: AbelianGroup, pi1: AbelianGroup,
                    vec: np.ndarray, action: Optional[Action] = None) -> 'Cochain':
        r1 = pi1.ngens
        valores = {}
        for t, args in enumerate(_tuples(pi0, degree)):
            valores[args] = tuple(int(vec[t * r1 + j]) for j in range(r1))
        return cls(degree, pi0, pi1, valores, action)

    def table(self) -> Dict[str, List[int]]:
        """Serialização: chave 'x1|x2|...' com coordenadas separadas por vírgula."""
        return {"|".join(",".join(map(str, a)) for a in args): list(v)
                for args, v in sorted(self.values.items())}


def coboundary(beta: Cochain) -> Cochain:
    """δβ com a ação armazenada (trivial por omissão)."""
    pi0, pi1, n = beta.pi0, beta.pi1, beta.degree
    _require_finite(pi0, "coboundary")
    lam = beta.action
    valores: Dict[Args, Coords] = {}
    for args in _tuples(pi0, n + 1):
        termo = beta(*args[1:])
        if lam is not None:
            termo = lam[args[0]](termo)
        total = termo
        for i in range(1, n + 1):
            meio = args[:i - 1] + (_add(pi0, args[i - 1], args[i]),) + args[i + 1:]
            total = total + beta(*meio) * ((-1) ** i)
        total = total + beta(*args[:n]) * ((-1) ** (n + 1))
        valores[args] = total.coefficients
    return Cochain(n + 1, pi0, pi1, valores, lam)


def is_cocycle(beta: Cochain) -> bool:
    return coboundary(beta).is_zero()


# --- Matrizes do complexo de barras ---

def _bar_matrix_trivial(pi0: AbelianGroup, n: int) -> np.ndarray:
    """δ: C^n -> C^{n+1} com coeficientes inteiros e ação trivial (uma coordenada)."""
    fontes = _tuples(pi0, n)
    indice = {args: k for k, args in enumerate(fontes)}
    alvos = _tuples(pi0, n + 1)
    M = np.zeros((len(alvos), len(fontes)), dtype=object)
    if n == 0:
        return M
    for r, args in enumerate(alvos):
        M[r, indice[args[1:]]] += 1
        for i in range(1, n + 1):
            soma = _add(pi0, args[i - 1], args[i])
            if not _is_zero(soma):
                M[r, indice[args[:i - 1] + (soma,) + args[i + 1:]]] += (-1) ** i
        M[r, indice[args[:n]]] += (-1) ** (n + 1)
    return M


def _bar_matrix(pi0: AbelianGroup, pi1: AbelianGroup, n: int, action: Action) -> np.ndarray:
    """δ: C^n -> C^{n+1} em todas as coordenadas de π₁, com ação λ."""
    r1 = pi1.ngens
    fontes = _tuples(pi0, n)
    indice = {args: k for k, args in enumerate(fontes)}
    alvos = _tuples(pi0, n + 1)
    M = np.zeros((len(alvos) * r1, len(fontes) * r1), dtype=object)
    ident = identity_matrix(r1)

    def soma_bloco(r: int, c: int, bloco: np.ndarray, sinal: int) -> None:
        for a in range(r1):
            for b in range(r1):
                M[r * r1 + a, c * r1 + b] += sinal * bloco[a, b]

    for r, args in enumerate(alvos):
        soma_bloco(r, indice[args[1:]], action[args[0]].matrix, 1)
        if n == 0:
            soma_bloco(r, 0, ident, -1)
            continue
        for i in range(1, n + 1):
            soma = _add(pi0, args[i - 1], args[i])
            if not _is_zero(soma):
                soma_bloco(r, indice[args[:i - 1] + (soma,) + args[i + 1:]], ident, (-1) ** i)
        soma_bloco(r, indice[args[:n]], ident, (-1) ** (n + 1))
    return M


def _relations(pi1: AbelianGroup, count: int) -> np.ndarray:
    """Colunas t_j·e para cada coordenada de torção de π₁ em `count` tuplas."""
    r1 = pi1.ngens
    colunas = []
    for t in range(count):
        for j, m in enumerate(pi1.generator_orders):
            if m:
                col = [0] * (count * r1)
                col[t * r1 + j] = m
                colunas.append(col)
    if not colunas:
        return np.zeros((count * r1, 0), dtype=object)
    return int_matrix(colunas).T


def _cycles_mod(delta: np.ndarray, t: int) -> np.ndarray:
    """Base de {x : δx ≡ 0 mod t} (t = 0: núcleo inteiro)."""
    ncols = delta.shape[1]
    if ncols == 0:
        return np.zeros((0, 0), dtype=object)
    if delta.shape[0] == 0:
        return identity_matrix(ncols)
    D, V = smith_column_transform(delta)
    d = diagonal(D) + [0] * (ncols - min(D.shape))
    colunas = []
    for i in range(ncols):
        if d[i] == 0:
            colunas.append(V[:, i])
        elif t:
            colunas.append(V[:, i] * (t // math.gcd(d[i], t)))
    if not colunas:
        return np.zeros((ncols, 0), dtype=object)
    return np.column_stack(colunas).astype(object)


def _boundaries_mod(delta_prev: Optional[np.ndarray], dim: int, t: int) -> np.ndarray:
    """Base de im δ + t·Z^dim."""
    if delta_prev is None or delta_prev.shape[1] == 0 or dim == 0:
        return identity_matrix(dim) * t if t else np.zeros((dim, 0), dtype=object)
    D, _, _, U_inv, _ = smith_with_inverses(delta_prev)
    d = diagonal(D) + [0] * (dim - min(D.shape))
    colunas = []
    for i in range(dim):
        g = math.gcd(d[i], t)
        if g:
            colunas.append(U_inv[:, i] * g)
    if not colunas:
        return np.zeros((dim, 0), dtype=object)
    return np.column_stack(colunas).astype(object)


def _embed_block(block: np.ndarray, r1: int, j: int) -> np.ndarray:
    count, ncols = block.shape
    out = np.zeros((count * r1, ncols), dtype=object)
    for t in range(count):
        out[t * r1 + j, :] = block[t, :]
    return out


def _stack(blocos: List[np.ndarray], dim: int) -> np.ndarray:
    blocos = [b for b in blocos if b.shape[1]]
    if not blocos:
        return np.zeros((dim, 0), dtype=object)
    return np.hstack(blocos).astype(object)


def _cohomology_subquotient(n: int, pi0: AbelianGroup, pi1: AbelianGroup,
                            action: Optional[Action],
                            cochain_basis: Optional[np.ndarray] = None) -> Subquotient:
    """
    Subquociente Zⁿ/Bⁿ nas coordenadas de Cⁿ.

    Com `cochain_basis` (colunas em coordenadas de uma coordenada de π₁), os
    ciclos são procurados apenas no subreticulado gerado por ela.
    """
    r1 = pi1.ngens
    count = len(_tuples(pi0, n))
    dim = count * r1
    if action is None:
        delta = _bar_matrix_trivial(pi0, n)
        delta_prev = _bar_matrix_trivial(pi0, n - 1) if n >= 1 else None
        ciclos, bordos = [], []
        for j, t in enumerate(pi1.generator_orders):
            if cochain_basis is None:
                z = _cycles_mod(delta, t)
            else:
                z = cochain_basis.dot(_cycles_mod(delta.dot(cochain_basis), t))
                if t:
                    z = _stack([z, identity_matrix(count) * t], count)
            ciclos.append(_embed_block(z, r1, j))
            bordos.append(_embed_block(_boundaries_mod(delta_prev, count, t), r1, j))
        return Subquotient(_stack(ciclos, dim), _stack(bordos, dim))

    if cochain_basis is not None:
        raise UnsupportedError("Restrição a subcomplexos exige ação trivial.")
    delta = _bar_matrix(pi0, pi1, n, action)
    rel_next = _relations(pi1, len(_tuples(pi0, n + 1)))
    nucleo = integer_kernel(np.hstack([delta, -rel_next]).astype(object))
    ciclos = nucleo[:dim, :] if nucleo.shape[1] else np.zeros((dim, 0), dtype=object)
    bordos = [_relations(pi1, count)]
    if n >= 1:
        bordos.insert(0, _bar_matrix(pi0, pi1, n - 1, action))
    return Subquotient(ciclos, _stack(bordos, dim))


def cohomology_group(n: int, pi0: AbelianGroup, pi1: AbelianGroup,
                     action: Optional[Action] = None) -> Tuple[AbelianGroup, List[Cochain]]:
    """Hⁿ(π₀, π₁) e, por gerador canônico, o primeiro cociclo representante na ordem lexicográfica da tabela."""
    _require_finite(pi0, "cohomology_group")
    if n not in (0, 1, 2, 3):
        raise UnsupportedError(f"Grau {n} não suportado (apenas 0 ≤ n ≤ 3).")
    _check_size(pi0, n)
    sq = _cohomology_subquotient(n, pi0, pi1, action)
    reps = [Cochain.from_vector(n, pi0, pi1, v, action) for v in sq.lexicographic_representatives()]
    logger.info(f"[cohomology_group] H^{n}({pi0.label()}, {pi1.label()}) = {sq.group.label()}")
    return sq.group, reps


def cohomology_class(beta: Cochain) -> GroupElement:
    """Classe de um cociclo em H^n, nas coordenadas do grupo devolvido por cohomology_group."""
    if not is_cocycle(beta):
        raise WellDefinednessError("A cocadeia não é um cociclo.")
    sq = _cohomology_subquotient(beta.degree, beta.pi0, beta.pi1, beta.action)
    return sq.coordinates(beta.to_vector())


def cohomologous(a: Cochain, b: Cochain) -> bool:
    a._check(b)
    return cohomology_class(a - b).is_zero()


def difference_class(phi: Cochain, gamma: Cochain) -> Tuple[GroupElement, bool]:
    """[φ − γ] em H² e se a classe se anula."""
    if phi.degree != 2 or gamma.degree != 2:
        raise MorphismMismatchError("Classe-diferença exige duas 2-cocadeias.")
    phi._check(gamma)
    classe = cohomology_class(phi - gamma)
    return classe, classe.is_zero()


# --- H²_sym ---

def _symmetric_basis(pi0: AbelianGroup) -> np.ndarray:
    """Colunas: cocadeias simétricas elementares, uma por par não ordenado {x, y}."""
    pares = _tuples(pi0, 2)
    indice = {args: k for k, args in enumerate(pares)}
    colunas = []
    vistos = set()
    for x, y in pares:
        chave = tuple(sorted((x, y)))
        if chave in vistos:
            continue
        vistos.add(chave)
        col = [0] * len(pares)
        col[indice[(x, y)]] = 1
        col[indice[(y, x)]] = 1
        colunas.append(col)
    if not colunas:
        return np.zeros((len(pares), 0), dtype=object)
    return int_matrix(colunas).T


def h2_sym_group(pi0: AbelianGroup, pi1: AbelianGroup) -> Tuple[AbelianGroup, List[Cochain]]:
    """H²_sym por enumeração das tabelas (π₀ finito), com representantes simétricos."""
    _require_finite(pi0, "h2_sym")
    _check_size(pi0, 2)
    sq = _cohomology_subquotient(2, pi0, pi1, None, cochain_basis=_symmetric_basis(pi0))
    reps = [Cochain.from_vector(2, pi0, pi1, v) for v in sq.representatives()]
    return sq.group, reps


def h2_sym_closed_form(pi0: AbelianGroup) -> AbelianGroup:
    """H²_sym(π₀, Z₂): um Z₂ por fator cíclico de ordem par; fatores livres não contribuem."""
    return AbelianGroup(0, (2,) * sum(1 for m in pi0.torsion_orders if m % 2 == 0))


def h2_sym(pi0: AbelianGroup, pi1: AbelianGroup) -> AbelianGroup:
    if pi0.is_finite():
        grupo, _ = h2_sym_group(pi0, pi1)
        return grupo
    if pi1 == _Z2:
        return h2_sym_closed_form(pi0)
    raise UnsupportedError(
        f"H²_sym({pi0.label()}, {pi1.label()}): π₀ infinito só é suportado com π₁ = Z2.")


def psi_iso(C: Cochain) -> GroupMorphism:
    """γ ↦ C(γ,γ) + C(0,0) na 2-torção de π₀, para C cociclo simétrico com π₁ = Z₂."""
    if C.pi1 != _Z2:
        raise MorphismMismatchError(f"psi_iso exige π₁ = Z2, recebido {C.pi1.label()}.")
    if C.degree != 2 or not C.is_symmetric():
        raise WellDefinednessError("psi_iso exige uma 2-cocadeia simétrica.")
    if not is_cocycle(C):
        raise WellDefinednessError("psi_iso exige um cociclo.")
    G, inclusao = two_torsion(C.pi0)
    zero = C.pi0.zero()
    colunas = []
    for k in range(G.ngens):
        gamma = inclusao(G.generator(k))
        colunas.append((C(gamma, gamma) + C(zero, zero)).coefficients[0])
    return GroupMorphism(G, _Z2, int_matrix([colunas], 1, G.ngens))


# --- Formas bilineares e quadráticas ---

@dataclass(frozen=True, eq=False)
class BilinearForm:
    """α: π₀ × π₀ -> π₁ dada por values[i][j] = α(e_i, e_j) nos geradores canônicos."""
    pi0: AbelianGroup
    pi1: AbelianGroup
    values: Tuple[Tuple[Coords, ...], ...]

    def __post_init__(self):
        n = self.pi0.ngens
        if len(self.values) != n or any(len(linha) != n for linha in self.values):
            raise MorphismMismatchError(f"Forma bilinear precisa de matriz {n}×{n}.")
        vals = tuple(tuple(self.pi1.reduce(v) for v in linha) for linha in self.values)
        ordens = self.pi0.generator_orders
        for i in range(n):
            for j in range(n):
                for m in (ordens[i], ordens[j]):
                    if m and not (self.pi1.element(vals[i][j]) * m).is_zero():
                        raise WellDefinednessError(
                            f"α(e{i}, e{j}) = {vals[i][j]} não é anulado pela ordem {m}.")
        object.__setattr__(self, 'values', vals)

    @classmethod
    def zero(cls, pi0: AbelianGroup, pi1: AbelianGroup) -> 'BilinearForm':
        z = (0,) * pi1.ngens
        return cls(pi0, pi1, tuple(tuple(z for _ in range(pi0.ngens)) for _ in range(pi0.ngens)))

    def __call__(self, x: Union[GroupElement, Sequence[int]], y: Union[GroupElement, Sequence[int]]) -> GroupElement:
        xs = x.coefficients if isinstance(x, GroupElement) else tuple(x)
        ys = y.coefficients if isinstance(y, GroupElement) else tuple(y)
        total = self.pi1.zero()
        for i, a in enumerate(xs):
            for j, b in enumerate(ys):
                if a and b:
                    total = total + self.pi1.element(self.values[i][j]) * (a * b)
        return total

    def entry(self, i: int, j: int) -> GroupElement:
        return self.pi1.element(self.values[i][j])

    def is_symmetric(self) -> bool:
        n = self.pi0.ngens
        return all(self.entry(i, j) == self.entry(j, i) for i in range(n) for j in range(n))

    def is_skew(self) -> bool:
        n = self.pi0.ngens
        return all((self.entry(i, j) + self.entry(j, i)).is_zero() for i in range(n) for j in range(n))

    def is_alternating(self) -> bool:
        return self.is_skew() and all(self.entry(i, i).is_zero() for i in range(self.pi0.ngens))

    def is_zero(self) -> bool:
        return all(not any(v) for linha in self.values for v in linha)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return (self.pi0, self.pi1, self.values) == (other.pi0, other.pi1, other.values)

    def __hash__(self) -> int:
        return hash((self.pi0, self.pi1, self.values))


@dataclass(frozen=True, eq=False)
class QuadraticMap:
    """
    q: π₀ -> π₁. No caso linear-quadrático guarda q(e_i) nos geradores
    canônicos; no caso geral (π₀ finito) guarda a tabela completa.
    """
    pi0: AbelianGroup
    pi1: AbelianGroup
    generator_values: Optional[Tuple[Coords, ...]] = None
    table: Optional[Dict[Coords, Coords]] = field(default=None, repr=False)

    def __post_init__(self):
        if (self.generator_values is None) == (self.table is None):
            raise ValueError("QuadraticMap exige exatamente um de generator_values ou table.")
        if self.generator_values is not None:
            if len(self.generator_values) != self.pi0.ngens:
                raise MorphismMismatchError(
                    f"{len(self.generator_values)} valores para {self.pi0.ngens} geradores.")
            vals = tuple(self.pi1.reduce(v) for v in self.generator_values)
            for k, (v, m) in enumerate(zip(vals, self.pi0.generator_orders)):
                elem = self.pi1.element(v)
                if not (elem * 2).is_zero():
                    raise WellDefinednessError(f"q(e{k}) = {v} não satisfaz 2q = 0.")
                if m and not (elem * m).is_zero():
                    raise WellDefinednessError(f"q(e{k}) = {v} não é anulado pela ordem {m}.")
            object.__setattr__(self, 'generator_values', vals)
        else:
            _require_finite(self.pi0, "QuadraticMap (tabela)")
            tabela = {self.pi0.reduce(k): self.pi1.reduce(v) for k, v in self.table.items()}
            for x in self.pi0.elements():
                tabela.setdefault(x.coefficients, (0,) * self.pi1.ngens)
            object.__setattr__(self, 'table', tabela)
            if not self.polarization_is_bilinear():
                raise WellDefinednessError("b_q(x,y) = q(x+y) − q(x) − q(y) não é bilinear.")

    @classmethod
    def zero(cls, pi0: AbelianGroup, pi1: AbelianGroup) -> 'QuadraticMap':
        return cls(pi0, pi1, tuple((0,) * pi1.ngens for _ in range(pi0.ngens)))

    def is_linear_quadratic(self) -> bool:
        if self.generator_values is not None:
            return True
        for x in self.pi0.elements():
            qx = self(x)
            if not (qx * 2).is_zero():
                return False
            for y in self.pi0.elements():
                if self(x + y) != qx + self(y):
                    return False
        return True

    def __call__(self, x: Union[GroupElement, Sequence[int]]) -> GroupElement:
        xs = self.pi0.reduce(x.coefficients if isinstance(x, GroupElement) else tuple(x))
        if self.table is not None:
            return self.pi1.element(self.table[xs])
        total = self.pi1.zero()
        for c, v in zip(xs, self.generator_values):
            if c:
                total = total + self.pi1.element(v) * c
        return total

    def polarization(self, x, y) -> GroupElement:
        xe = x if isinstance(x, GroupElement) else self.pi0.element(x)
        ye = y if isinstance(y, GroupElement) else self.pi0.element(y)
        return self(xe + ye) - self(xe) - self(ye)

    def polarization_is_bilinear(self) -> bool:
        elementos = list(self.pi0.elements())
        for x in elementos:
            for y in elementos:
                for z in elementos:
                    if self.polarization(x + y, z) != self.polarization(x, z) + self.polarization(y, z):
                        return False
        return True

    def as_linear(self) -> 'QuadraticMap':
        """Forma por geradores de uma q linear-quadrática dada por tabela."""
        if self.generator_values is not None:
            return self
        if not self.is_linear_quadratic():
            raise WellDefinednessError("q não é linear-quadrática.")
        return QuadraticMap(self.pi0, self.pi1,
                            tuple(self(self.pi0.generator(k)).coefficients for k in range(self.pi0.ngens)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadraticMap):
            return NotImplemented
        if (self.pi0, self.pi1) != (other.pi0, other.pi1):
            return False
        if self.pi0.is_finite():
            return all(self(x) == other(x) for x in self.pi0.elements())
        return self.as_linear().generator_values == other.as_linear().generator_values

    def __hash__(self) -> int:
        return hash((self.pi0, self.pi1))


def diagonal_restriction(sigma: BilinearForm) -> QuadraticMap:
    """Δ*(σ)(x) = σ(x, x), linear-quadrática quando σ é antissimétrica."""
    if not sigma.is_skew():
        raise WellDefinednessError("diagonal_restriction exige forma antissimétrica.")
    return QuadraticMap(sigma.pi0, sigma.pi1,
                        tuple(sigma.values[k][k] for k in range(sigma.pi0.ngens)))


def skew_lift(q: QuadraticMap) -> BilinearForm:
    """Forma diagonal α(e_k, e_l) = δ_kl q(e_k): inversa à direita de Δ*."""
    if not q.is_linear_quadratic():
        raise WellDefinednessError("skew_lift exige q linear-quadrática.")
    q = q.as_linear()
    n = q.pi0.ngens
    z = (0,) * q.pi1.ngens
    valores = tuple(tuple(q.generator_values[k] if k == l else z for l in range(n)) for k in range(n))
    return BilinearForm(q.pi0, q.pi1, valores)


def alternation(F: Cochain) -> BilinearForm:
    """(x, y) ↦ F(x,y) − F(y,x) para um 2-cociclo F (ação trivial)."""
    if F.degree != 2:
        raise MorphismMismatchError("alternation exige uma 2-cocadeia.")
    if F.action is not None:
        raise UnsupportedError("alternation exige ação trivial.")
    if not is_cocycle(F):
        raise WellDefinednessError("alternation exige um cociclo.")
    n = F.pi0.ngens
    gens = [F.pi0.generator(k) for k in range(n)]
    valores = tuple(tuple((F(gens[i], gens[j]) - F(gens[j], gens[i])).coefficients for j in range(n))
                    for i in range(n))
    return BilinearForm(F.pi0, F.pi1, valores)


def alt_group(pi0: AbelianGroup, pi1: AbelianGroup) -> AbelianGroup:
    """Alt(π₀, π₁): um Hom(Z_gcd(m_i,m_j), π₁) por par de geradores i < j."""
    ordens = pi0.generator_orders
    partes = []
    for i, j in itertools.combinations(range(len(ordens)), 2):
        a, b = ordens[i], ordens[j]
        g = math.gcd(a, b) if a and b else (a or b)
        partes.append(hom_group(cyclic(g), pi1))
    return direct_sum(*partes) if partes else AbelianGroup()


# --- Oráculos por força bruta ---

def brute_force_h2_order(pi0: AbelianGroup, pi1: AbelianGroup, limit: int = 1 << 20) -> int:
    """|H²| contando cociclos e cobordos entre todas as 2-cocadeias normalizadas (ação trivial)."""
    _require_finite(pi0, "brute_force_h2_order")
    if not pi1.is_finite():
        raise InfiniteGroupError("Força bruta exige π₁ finito.")
    pares = _tuples(pi0, 2)
    elementos1 = [v.coefficients for v in pi1.elements()]
    total = len(elementos1) ** len(pares)
    if total > limit:
        raise UnsupportedError(f"{total} cocadeias excedem o limite de força bruta {limit}.")
    cociclos = 0
    for valores in itertools.product(elementos1, repeat=len(pares)):
        if is_cocycle(Cochain(2, pi0, pi1, dict(zip(pares, valores)))):
            cociclos += 1
    return cociclos // brute_force_b2_order(pi0, pi1)


def brute_force_b2_order(pi0: AbelianGroup, pi1: AbelianGroup) -> int:
    """|B²| = |C¹| / |Z¹|, com Z¹ contado entre todas as 1-cocadeias."""
    singulares = _tuples(pi0, 1)
    elementos1 = [v.coefficients for v in pi1.elements()]
    z1 = sum(1 for valores in itertools.product(elementos1, repeat=len(singulares))
             if is_cocycle(Cochain(1, pi0, pi1, dict(zip(singulares, valores)))))
    return len(elementos1) ** len(singulares) // z1


def brute_force_is_coboundary(beta: Cochain) -> bool:
    """Procura D com δD = β entre todas as (n-1)-cocadeias."""
    if not beta.pi1.is_finite():
        raise InfiniteGroupError("Força bruta exige π₁ finito.")
    argumentos = _tuples(beta.pi0, beta.degree - 1)
    elementos1 = [v.coefficients for v in beta.pi1.elements()]
    for valores in itertools.product(elementos1, repeat=len(argumentos)):
        D = Cochain(beta.degree - 1, beta.pi0, beta.pi1, dict(zip(argumentos, valores)), beta.action)
        if (coboundary(D) - beta).is_zero():
            return True
    return False
