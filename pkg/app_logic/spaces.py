# -*- coding: utf-8 -*-
"""
Descritores de (co)homologia dos espaços classificantes, de Thom e de
Eilenberg–MacLane, o construtor de espaços de Thom e a sequência espectral
de Bockstein em p = 2.

Homologia Z₂ em grau n é a base dual da base monomial de H^n(T, Z₂);
cada gerador de homologia Z₂ guarda o monômio dual.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from app_logic.abgrp import AbelianGroup
from app_logic.config import get_logger
from app_logic.errors import (
    DegreeOverflowError,
    DescriptorError,
    MissingDataError,
    WellDefinednessError,
    WindowError,
)
from app_logic.steenrod import F2Element, Generator, GradedF2Algebra, check_adem_relations

logger = get_logger(__name__)


# --- Álgebra linear F₂ ---

def to_gf2(matrix) -> np.ndarray:
    return np.array(matrix, dtype=np.uint8).reshape(np.shape(matrix)) % 2


def gf2_row_reduce(matrix) -> Tuple[np.ndarray, List[int]]:
    """Forma escalonada reduzida por linhas e colunas pivô."""
    mat = to_gf2(matrix).copy()
    if mat.ndim != 2 or mat.size == 0:
        return mat, []
    m, n = mat.shape
    pivots: List[int] = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, m) if mat[r, col]), None)
        if pivot is None:
            continue
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        for r in range(m):
            if r != row and mat[r, col]:
                mat[r, :] ^= mat[row, :]
        pivots.append(col)
        row += 1
        if row == m:
            break
    return mat, pivots


def gf2_rank(matrix) -> int:
    return len(gf2_row_reduce(matrix)[1])


def gf2_nullspace(matrix, ncols: int) -> np.ndarray:
    """Base (linhas) de {x : M·x = 0} em F₂^ncols."""
    mat = to_gf2(matrix)
    if mat.size == 0:
        return np.eye(ncols, dtype=np.uint8)
    reduzida, pivots = gf2_row_reduce(mat)
    livres = [c for c in range(ncols) if c not in pivots]
    base = []
    for f in livres:
        v = np.zeros(ncols, dtype=np.uint8)
        v[f] = 1
        for linha, p in enumerate(pivots):
            if reduzida[linha, f]:
                v[p] = 1
        base.append(v)
    return np.array(base, dtype=np.uint8).reshape(len(base), ncols)


def gf2_span_basis(vectors: np.ndarray, ncols: int) -> np.ndarray:
    """Base escalonada (linhas) do espaço gerado pelas linhas de `vectors`."""
    vecs = to_gf2(vectors).reshape(-1, ncols)
    if vecs.shape[0] == 0:
        return np.zeros((0, ncols), dtype=np.uint8)
    reduzida, pivots = gf2_row_reduce(vecs)
    return reduzida[:len(pivots)].copy()


def gf2_in_span(basis: np.ndarray, v: np.ndarray) -> bool:
    ncols = v.shape[0]
    if basis.shape[0] == 0:
        return not v.any()
    return gf2_rank(np.vstack([basis, v.reshape(1, ncols)])) == gf2_rank(basis)


def gf2_complement(sub: np.ndarray, total: np.ndarray, ncols: int) -> np.ndarray:
    """Vetores de `total` que completam `sub` a uma base de span(total), escolha gulosa."""
    atual = sub.reshape(-1, ncols)
    extra = []
    for v in total.reshape(-1, ncols):
        if not gf2_in_span(atual, v):
            atual = np.vstack([atual, v.reshape(1, ncols)])
            extra.append(v)
    return np.array(extra, dtype=np.uint8).reshape(len(extra), ncols)


# --- Descritores ---

@dataclass
class HomologyDegree:
    degree: int
    # (nome, ordem); ordem 0 denota Z
    integral: List[Tuple[str, int]] = field(default_factory=list)
    # (nome, monômio dual em H^n(T, Z₂))
    z2: List[Tuple[str, str]] = field(default_factory=list)
    # nome integral -> nomes Z₂ da redução (ausente = 0)
    rho2: Dict[str, List[str]] = field(default_factory=dict)

    @property
    def integral_group(self) -> AbelianGroup:
        return AbelianGroup.from_cyclic(o for _, o in self.integral)

    @property
    def integral_names(self) -> List[str]:
        return [n for n, _ in self.integral]

    @property
    def integral_orders(self) -> List[int]:
        return [o for _, o in self.integral]

    @property
    def z2_names(self) -> List[str]:
        return [n for n, _ in self.z2]


@dataclass
class SpaceDescriptor:
    name: str
    algebra: GradedF2Algebra
    degrees: Dict[int, HomologyDegree]
    valid_through: int
    title: str = ""
    reduced: bool = True
    # anotações livres (classes características inteiras, proveniência)
    notes: Dict[str, str] = field(default_factory=dict)

    def degree(self, n: int) -> HomologyDegree:
        if n > self.valid_through:
            raise WindowError(f"{self.name}: grau {n} além do validado ({self.valid_through}).")
        return self.degrees.get(n, HomologyDegree(n))

    def nonzero_degrees(self) -> List[int]:
        return sorted(n for n, d in self.degrees.items() if d.integral or d.z2)

    def integral_group(self, n: int) -> AbelianGroup:
        return self.degree(n).integral_group

    def z2_dimension(self, n: int) -> int:
        return len(self.degree(n).z2)

    def _dual_positions(self, n: int) -> List[int]:
        """Posição, na base monomial de H^n, do dual de cada gerador Z₂ de H_n."""
        if n < 0 or (n == 0 and self.reduced):
            return []
        nomes = self.algebra.basis_names(n)
        posicao = {nome: k for k, nome in enumerate(nomes)}
        saida = []
        for h, dual in self.degree(n).z2:
            monomio = str(self.algebra.parse(dual))
            if monomio not in posicao:
                raise DescriptorError(f"{self.name}: dual '{dual}' de {h} fora da base de grau {n}.")
            saida.append(posicao[monomio])
        return saida

    def rho2_matrix(self, n: int) -> np.ndarray:
        """Matriz inteira (Z₂ × integrais) de ρ₂: H_n(T,Z) → H_n(T,Z₂)."""
        grau = self.degree(n)
        indice = {h: k for k, h in enumerate(grau.z2_names)}
        M = np.zeros((len(grau.z2), len(grau.integral)), dtype=object)
        for col, nome in enumerate(grau.integral_names):
            for alvo in grau.rho2.get(nome, []):
                if alvo not in indice:
                    raise DescriptorError(f"{self.name}: ρ₂({nome}) = {alvo} não é gerador Z₂ do grau {n}.")
                M[indice[alvo], col] = (M[indice[alvo], col] + 1) % 2
        return M

    def sq_dual_matrix(self, i: int, n: int) -> np.ndarray:
        """(Sqⁱ)_*: H_n(T,Z₂) → H_{n−i}(T,Z₂), transposta de Sqⁱ: H^{n−i} → H^n."""
        origem, destino = self.degree(n), self.degree(n - i) if n - i >= 0 else HomologyDegree(n - i)
        M = np.zeros((len(destino.z2), len(origem.z2)), dtype=object)
        if not origem.z2 or not destino.z2:
            return M
        sq = self.algebra.sq_matrix(i, n - i)
        pos_origem = self._dual_positions(n)
        pos_destino = self._dual_positions(n - i)
        for col, a in enumerate(pos_origem):
            for row, b in enumerate(pos_destino):
                M[row, col] = sq[a][b]
        return M

    def sq_element(self, i: int, monomial: str) -> F2Element:
        return self.algebra.sq(i, self.algebra.parse(monomial))


@dataclass
class ThomInput:
    base: SpaceDescriptor
    rank: int
    euler: Optional[str]
    stiefel_whitney: Dict[int, str] = field(default_factory=dict)
    characteristic: Dict[str, str] = field(default_factory=dict)
    name: str = ""
    title: str = ""
    valid_through: Optional[int] = None
    unit_names: Tuple[str, str] = ("tau", "taub")


def _thom_name(nome: str, unidades: Tuple[str, str], unidade_base: Tuple[str, str]) -> str:
    if nome == unidade_base[0]:
        return unidades[0]
    if nome == unidade_base[1]:
        return unidades[1]
    return f"{nome}_T"


def _thom_dual(algebra: GradedF2Algebra, dual: str) -> str:
    if dual.strip() == "1":
        return "t"
    return str(algebra.parse(dual) * algebra.gen("t"))


def thom_space(data: ThomInput) -> SpaceDescriptor:
    """
    Espaço de Thom: H̃_{n+k}(MH) ≅ H_n(BH), Sq¹t = 0, Sq^k t = w_k t e t² = e·t.
    """
    base = data.base
    if base.reduced or 0 not in base.degrees:
        raise DescriptorError(f"{base.name}: a base de um espaço de Thom precisa do grau 0.")
    if not data.euler:
        raise MissingDataError(f"{data.name or base.name}: classe de Euler mod 2 ausente.")
    k = data.rank
    if k in data.stiefel_whitney and str(base.algebra.parse(data.stiefel_whitney[k])) != str(base.algebra.parse(data.euler)):
        raise WellDefinednessError(f"{data.name}: w_{k} difere da classe de Euler mod 2.")

    tabela_t: Dict[int, str] = {}
    for i in range(1, k):
        w = data.stiefel_whitney.get(i)
        if i == 1 and w and str(base.algebra.parse(w)) != "0":
            raise WellDefinednessError(f"{data.name}: fibrado não orientável (w₁ ≠ 0).")
        if w and str(base.algebra.parse(w)) != "0":
            tabela_t[i] = " + ".join(f"{p.strip()}*t" for p in w.split("+"))
    euler_t = " + ".join(f"{p.strip()}*t" for p in data.euler.split("+"))

    algebra_base = base.algebra
    geradores = list(algebra_base.generators) + [Generator("t", k, square=euler_t)]
    tabela = dict(algebra_base._sq_text)
    tabela["t"] = tabela_t
    teto = (data.valid_through or base.valid_through + k)
    algebra = GradedF2Algebra(
        data.name or f"M({base.name})", geradores, max(teto, algebra_base.cap),
        sq_table=tabela, zero_monomials=algebra_base.zero_monomials, module_generator="t")
    logger.debug(f"[thom_space] {algebra.name}: t² = {euler_t}")

    base_unit = (base.degrees[0].integral[0][0], base.degrees[0].z2[0][0])
    graus: Dict[int, HomologyDegree] = {}
    for n, grau in sorted(base.degrees.items()):
        if n + k > teto:
            continue
        novo = HomologyDegree(n + k)
        novo.integral = [(_thom_name(h, data.unit_names, base_unit), o) for h, o in grau.integral]
        novo.z2 = [(_thom_name(h, data.unit_names, base_unit),
                    _thom_dual(algebra, dual))
                   for h, dual in grau.z2]
        novo.rho2 = {_thom_name(h, data.unit_names, base_unit): [_thom_name(a, data.unit_names, base_unit) for a in alvos]
                     for h, alvos in grau.rho2.items()}
        graus[n + k] = novo
    return SpaceDescriptor(
        name=data.name or f"M{base.name}", algebra=algebra, degrees=graus,
        valid_through=min(teto, base.valid_through + k), title=data.title,
        reduced=True, notes=dict(data.characteristic))


def unreduced(descriptor: SpaceDescriptor) -> SpaceDescriptor:
    """Acrescenta H₀ = Z⟨1⟩ (sequências espectrais dos espaços de laços)."""
    if not descriptor.reduced:
        return descriptor
    graus = dict(descriptor.degrees)
    graus[0] = HomologyDegree(0, [("1", 0)], [("1b", "1")], {"1": ["1b"]})
    return SpaceDescriptor(descriptor.name, descriptor.algebra, graus, descriptor.valid_through,
                           descriptor.title, reduced=False, notes=dict(descriptor.notes))


# --- Validação ---

def validate_descriptor(d: SpaceDescriptor) -> List[str]:
    """Lista de verificações violadas; vazia quando o descritor é consistente."""
    problemas: List[str] = []
    inicio = 1 if d.reduced else 0
    for n in range(inicio, d.valid_through + 1):
        grau = d.degrees.get(n, HomologyDegree(n))
        try:
            base = set(d.algebra.basis_names(n))
        except DegreeOverflowError as e:
            problemas.append(str(e))
            continue
        duais = [str(d.algebra.parse(dual)) for _, dual in grau.z2]
        if set(duais) != base or len(duais) != len(base):
            problemas.append(f"grau {n}: duais {sorted(duais)} ≠ base de cohomologia {sorted(base)}")
            continue
        # coeficientes universais: dim H_n(Z₂) = #(Z e Z_{2^k} em H_n) + #(Z_{2^k} em H_{n−1})
        anterior = d.degrees.get(n - 1, HomologyDegree(n - 1))
        esperado = (sum(1 for o in grau.integral_orders if o % 2 == 0)
                    + sum(1 for o in anterior.integral_orders if o and o % 2 == 0))
        if esperado != len(grau.z2):
            problemas.append(f"grau {n}: dim H_n(Z₂) = {len(grau.z2)}, coeficientes universais dão {esperado}")
        try:
            rho = d.rho2_matrix(n)
        except DescriptorError as e:
            problemas.append(str(e))
            continue
        for col, (nome, o) in enumerate(grau.integral):
            if o % 2 == 1 and any(rho[:, col]):
                problemas.append(f"grau {n}: ρ₂({nome}) ≠ 0 para classe de ordem ímpar {o}")
        pares = [c for c, o in enumerate(grau.integral_orders) if o % 2 == 0]
        if pares and gf2_rank(rho[:, pares].astype(int)) != len(pares):
            problemas.append(f"grau {n}: ρ₂ não é injetiva em H_n(Z)⊗Z₂")
        if n >= 1 and pares and grau.z2:
            sq1 = d.sq_dual_matrix(1, n)
            if sq1.size and (to_gf2(sq1.astype(int)) @ to_gf2(rho[:, pares].astype(int)) % 2).any():
                problemas.append(f"grau {n}: Sq¹_* ∘ ρ₂ ≠ 0")
    for violacao in check_adem_relations(d.algebra, max_sum=d.algebra.cap):
        problemas.append(f"Adem: {violacao}")
    if problemas:
        logger.warning(f"[validate_descriptor] {d.name}: {len(problemas)} problema(s).")
    return problemas


# --- Sequência espectral de Bockstein ---

@dataclass
class BocksteinAssertion:
    r: int
    degree: int
    # representante de origem -> imagem (expressões na álgebra)
    images: Dict[str, str]
    provenance: str = ""


@dataclass
class IntegralSummand:
    degree: int
    order: int
    name: str


@dataclass
class BocksteinReport:
    space: str
    pages: Dict[int, Dict[int, List[str]]]
    summands: List[IntegralSummand]
    free_ranks: Dict[int, int]
    valid_through: int

    def e2(self, degree: int) -> List[str]:
        return self.pages.get(2, {}).get(degree, [])

    def integral_cohomology(self) -> Dict[int, AbelianGroup]:
        """H^n(T, Z) localizado em 2: parte livre de E_∞ e um Z_{2^r} por imagem de d_r."""
        grupos: Dict[int, AbelianGroup] = {}
        graus = set(self.free_ranks) | {s.degree for s in self.summands}
        for n in sorted(graus):
            ordens = [0] * self.free_ranks.get(n, 0) + [s.order for s in self.summands if s.degree == n]
            grupos[n] = AbelianGroup.from_cyclic(ordens)
        return grupos


def _vector(algebra: GradedF2Algebra, x: F2Element, degree: int) -> np.ndarray:
    return np.array(algebra.coordinates(x, degree), dtype=np.uint8)


def _element(algebra: GradedF2Algebra, v: np.ndarray, degree: int) -> F2Element:
    base = algebra.basis(degree)
    return algebra.element({m for m, c in zip(base, v) if c})


def bockstein_e1(descriptor: SpaceDescriptor, assertions: Sequence[BocksteinAssertion] = (),
                 max_page: int = 4) -> BocksteinReport:
    """
    E₁ = H*(T, Z₂), d₁ = Sq¹; d_r (r ≥ 2) só por asserção. Cada vetor de uma
    base da imagem de d_r no grau n dá um somando Z_{2^r} de H^n(T, Z).
    """
    algebra = descriptor.algebra
    teto = min(algebra.cap, descriptor.valid_through)
    inicio = 1 if descriptor.reduced else 0
    dims = {n: len(algebra.basis(n)) for n in range(inicio, teto + 1)}

    # d₁ = Sq¹, verificando Sq¹Sq¹ = 0
    d1: Dict[int, np.ndarray] = {}
    for n in range(inicio, teto):
        d1[n] = to_gf2(np.array(algebra.sq_matrix(1, n), dtype=np.uint8).reshape(dims[n + 1], dims[n]))
    for n in range(inicio, teto - 1):
        if dims[n] and dims[n + 2] and ((d1[n + 1].astype(int) @ d1[n].astype(int)) % 2).any():
            raise WellDefinednessError(f"{descriptor.name}: Sq¹∘Sq¹ ≠ 0 a partir do grau {n}.")

    ciclos: Dict[int, np.ndarray] = {}
    bordos: Dict[int, np.ndarray] = {n: np.zeros((0, dims[n]), dtype=np.uint8) for n in dims}
    for n in dims:
        if n < teto:
            ciclos[n] = gf2_nullspace(d1[n], dims[n]) if dims[n + 1] else np.eye(dims[n], dtype=np.uint8)
        else:
            ciclos[n] = np.eye(dims[n], dtype=np.uint8)
    somandos: List[IntegralSummand] = []
    for n in range(inicio, teto):
        imagem = gf2_span_basis(d1[n].T, dims[n + 1]) if dims[n] and dims[n + 1] else np.zeros((0, dims[n + 1]), dtype=np.uint8)
        bordos[n + 1] = imagem
        for v in imagem:
            somandos.append(IntegralSummand(n + 1, 2, str(_element(algebra, v, n + 1))))

    paginas: Dict[int, Dict[int, List[str]]] = {}
    por_pagina: Dict[int, List[BocksteinAssertion]] = {}
    for a in assertions:
        if a.r < 2:
            raise DescriptorError("Asserções de Bockstein começam na página 2.")
        por_pagina.setdefault(a.r, []).append(a)

    for r in range(2, max_page + 1):
        reps: Dict[int, np.ndarray] = {}
        for n in dims:
            reps[n] = gf2_complement(bordos[n], ciclos[n], dims[n])
        paginas[r] = {n: [str(_element(algebra, v, n)) for v in reps[n]] for n in dims if reps[n].shape[0]}
        novos_ciclos = dict(ciclos)
        novos_bordos = dict(bordos)
        for a in por_pagina.get(r, []):
            n = a.degree
            if n + 1 > teto:
                raise WindowError(f"{descriptor.name}: d_{r} a partir do grau {n} sai da janela.")
            fontes, alvos = [], []
            for origem, destino in a.images.items():
                v = _vector(algebra, algebra.parse(origem), n)
                w = _vector(algebra, algebra.parse(destino), n + 1)
                if not gf2_in_span(ciclos[n], v) or gf2_in_span(bordos[n], v):
                    raise WellDefinednessError(f"d_{r}: {origem} não representa classe não nula de E_{r}^{n}.")
                if not gf2_in_span(ciclos[n + 1], w):
                    raise WellDefinednessError(f"d_{r}: {destino} não é ciclo em E_{r}^{n + 1}.")
                fontes.append(v)
                alvos.append(w)
            # d_r se anula em B_r e nos representantes não listados
            fonte_mat = np.array(fontes, dtype=np.uint8).reshape(len(fontes), dims[n])
            # núcleo: B_r + representantes restantes + combinações das fontes com imagem em B_r
            restantes = gf2_complement(np.vstack([bordos[n], fonte_mat]), ciclos[n], dims[n])
            combinacoes = []
            for coef in gf2_nullspace(
                    np.vstack([np.array(alvos, dtype=np.uint8).reshape(len(alvos), dims[n + 1]).T,
                               bordos[n + 1].T]) if bordos[n + 1].shape[0] else
                    np.array(alvos, dtype=np.uint8).reshape(len(alvos), dims[n + 1]).T,
                    len(fontes) + bordos[n + 1].shape[0]):
                parte = coef[:len(fontes)]
                if parte.any():
                    combinacoes.append((parte.astype(int) @ fonte_mat.astype(int)) % 2)
            novos_ciclos[n] = gf2_span_basis(
                np.vstack([bordos[n], restantes] + [np.array(c, dtype=np.uint8).reshape(1, dims[n]) for c in combinacoes]),
                dims[n])
            imagem_nova = gf2_complement(bordos[n + 1], np.array(alvos, dtype=np.uint8).reshape(len(alvos), dims[n + 1]),
                                         dims[n + 1])
            novos_bordos[n + 1] = gf2_span_basis(np.vstack([bordos[n + 1], imagem_nova]), dims[n + 1])
            for w in imagem_nova:
                somandos.append(IntegralSummand(n + 1, 2 ** r, str(_element(algebra, w, n + 1))))
            logger.info(f"[bockstein_e1] {descriptor.name}: d_{r} no grau {n} ({a.provenance})")
        ciclos, bordos = novos_ciclos, novos_bordos

    # E_∞ = última página calculada; graus no teto não têm núcleo conhecido
    livres = {}
    valido = teto - 1
    for n in dims:
        if n <= valido:
            livres[n] = gf2_complement(bordos[n], ciclos[n], dims[n]).shape[0]
    return BocksteinReport(descriptor.name, paginas, somandos, livres, valido)
