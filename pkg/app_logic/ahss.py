# -*- coding: utf-8 -*-
"""
Sequência espectral de Atiyah–Hirzebruch para bordismo spin reduzido.

Cada célula E^r_{p,q} é um subquociente Z_r/B_r de Z^k, onde Z^k tem base
nos nomes de E²: o nome da classe de homologia (linha q = 0) ou
"coef.classe" (demais linhas). O d² da linha do ponto é calculado a partir
de Sq² dual e de ρ₂; as páginas seguintes só avançam por asserções.
"""
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from app_logic.abgrp import (
    AbelianGroup,
    GroupMorphism,
    Subquotient,
    extension_candidates,
    hom_group,
    identity_matrix,
    integer_kernel,
    lattice_basis,
    lattice_contains,
)
from app_logic.config import get_logger, get_setting
from app_logic.errors import (
    AssertionConflictError,
    DescriptorError,
    PageNotStabilizedError,
    UndeterminedEntryError,
    UnsupportedError,
    WindowError,
)
from app_logic.spaces import SpaceDescriptor

logger = get_logger(__name__)

Position = Tuple[int, int]

_TERM = re.compile(r'^(?:(-?\d+)\s*\*\s*)?([^\s*]+)$')


# --- Linhas de coeficientes ---

@dataclass(frozen=True)
class CoefficientRow:
    """Grupos de coeficientes por q: lista de (nome, ordem), ordem 0 = Z."""
    name: str
    entries: Dict[int, Tuple[Tuple[str, int], ...]]
    max_q: int
    # multiplicação por α₁ entre nomes de coeficientes (d² calculado segue esse mapa)
    alpha1: Dict[str, str] = field(default_factory=dict)
    undetermined: Dict[int, Tuple[str, ...]] = field(default_factory=dict)
    computed_d2: bool = False

    def coefficients(self, q: int) -> Tuple[Tuple[str, int], ...]:
        if q > self.max_q:
            raise WindowError(f"Linha '{self.name}': Ω_{q} fora da faixa conhecida (q ≤ {self.max_q}).")
        return self.entries.get(q, ())

    def group(self, q: int) -> Optional[AbelianGroup]:
        if q in self.undetermined:
            return None
        return AbelianGroup.from_cyclic(o for _, o in self.coefficients(q))

    def label(self, q: int) -> str:
        grupo = self.group(q)
        return "?" if grupo is None else grupo.label()


POINT_ROW = CoefficientRow(
    name="spin",
    entries={
        0: (("", 0),),
        1: (("a1", 2),),
        2: (("a1^2", 2),),
        4: (("a4", 0),),
        8: (("a8", 0), ("a8p", 0)),
        9: (("a1a8", 2), ("a1a8p", 2)),
    },
    max_q=9,
    alpha1={"": "a1", "a1": "a1^2", "a8": "a1a8", "a8p": "a1a8p"},
    computed_d2=True,
)


def generic_row(name: str, groups: Dict[int, Sequence[Tuple[str, int]]],
                undetermined: Optional[Dict[int, Sequence[str]]] = None, max_q: Optional[int] = None) -> CoefficientRow:
    """Linha arbitrária (bordismo reduzido de uma fibra); todos os diferenciais vêm de asserções."""
    for q, itens in groups.items():
        for nome, ordem in itens:
            if ordem not in (0, 2):
                raise UnsupportedError(f"Linha '{name}': coeficiente {nome} de ordem {ordem} (só Z e Z2).")
    indeterminados = {int(q): tuple(c) for q, c in (undetermined or {}).items()}
    topo = max_q if max_q is not None else max(list(groups) + list(indeterminados) + [0])
    return CoefficientRow(name, {int(q): tuple((n, int(o)) for n, o in v) for q, v in groups.items()},
                          topo, undetermined=indeterminados)


# --- Células ---

def _cell_name(coef: str, homology: str) -> str:
    return f"{coef}.{homology}" if coef else homology


@dataclass
class Cell:
    p: int
    q: int
    names: List[str]
    orders: List[int]
    cycles: np.ndarray
    boundaries: np.ndarray
    candidates: List[str] = field(default_factory=list)

    @property
    def undetermined(self) -> bool:
        return bool(self.candidates)

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def subquotient(self) -> Subquotient:
        return Subquotient(self.cycles, self.boundaries)

    @property
    def group(self) -> Optional[AbelianGroup]:
        if self.undetermined:
            return None
        return self.subquotient.group

    def is_zero(self) -> bool:
        return not self.undetermined and self.group.is_trivial()

    def label(self) -> str:
        return "?" if self.undetermined else self.group.label()

    def vector(self, expression: str) -> np.ndarray:
        """Vetor ambiente de uma expressão 'k*nome + nome'."""
        v = np.zeros((self.dim, 1), dtype=object)
        texto = expression.strip()
        if texto in ("", "0"):
            return v
        indice = {n: i for i, n in enumerate(self.names)}
        for parcela in texto.split('+'):
            match = _TERM.match(parcela.strip())
            if not match or match.group(2) not in indice:
                raise AssertionConflictError(
                    f"E_{{{self.p},{self.q}}}: termo '{parcela.strip()}' não é gerador ({', '.join(self.names)}).")
            v[indice[match.group(2)], 0] += int(match.group(1) or 1)
        return v


def _initial_cell(p: int, q: int, names: List[str], orders: List[int]) -> Cell:
    k = len(names)
    torcao = [i for i, o in enumerate(orders) if o]
    B = np.zeros((k, len(torcao)), dtype=object)
    for col, i in enumerate(torcao):
        B[i, col] = orders[i]
    return Cell(p, q, names, orders, identity_matrix(k), B)


def _coefficient_block(descriptor: SpaceDescriptor, p: int, coef: str, ordem: int) -> Tuple[List[str], List[int]]:
    grau = descriptor.degree(p)
    if ordem == 0:
        return [_cell_name(coef, h) for h, _ in grau.integral], [o for _, o in grau.integral]
    if ordem == 2:
        return [_cell_name(coef, h) for h, _ in grau.z2], [2] * len(grau.z2)
    raise UnsupportedError(f"Coeficiente {coef} de ordem {ordem} não suportado.")


def _homology_nonzero(descriptor: SpaceDescriptor, p: int) -> bool:
    grau = descriptor.degree(p)
    anterior = descriptor.degrees.get(p - 1)
    return bool(grau.integral or grau.z2) or bool(anterior and any(o for o in anterior.integral_orders))


# --- Páginas ---

@dataclass
class DifferentialRecord:
    r: int
    source: Position
    target: Position
    morphism: Optional[GroupMorphism]
    origin: str  # "calculado", "asserção" ou "colapso"
    provenance: str = ""

    @property
    def key(self) -> str:
        return f"d{self.r}_{{{self.source[0]},{self.source[1]}}}"

    def is_zero(self) -> bool:
        return self.morphism is None or self.morphism.is_zero()


@dataclass
class SpectralPage:
    space: str
    row: CoefficientRow
    r: int
    window: int
    cells: Dict[Position, Cell]
    min_p: int = 1
    differentials: List[DifferentialRecord] = field(default_factory=list)
    unresolved: List[Tuple[int, int, int]] = field(default_factory=list)
    final: bool = False

    def cell(self, p: int, q: int) -> Optional[Cell]:
        return self.cells.get((p, q))

    def group(self, p: int, q: int) -> Optional[AbelianGroup]:
        c = self.cell(p, q)
        return AbelianGroup() if c is None else c.group

    def label(self, p: int, q: int) -> str:
        c = self.cell(p, q)
        return "0" if c is None else c.label()

    def total_degree(self, n: int) -> List[Cell]:
        return [c for (p, q), c in sorted(self.cells.items()) if p + q == n]

    def table(self) -> Dict[Position, str]:
        return {pos: c.label() for pos, c in sorted(self.cells.items()) if c.undetermined or not c.is_zero()}

    def unresolved_keys(self) -> List[str]:
        return [f"d{r}_{{{p},{q}}}" for r, p, q in self.unresolved]

    def title(self) -> str:
        return "E^∞" if self.final else f"E^{self.r}"


def e2_page(descriptor: SpaceDescriptor, row: CoefficientRow = POINT_ROW, window: Optional[int] = None) -> SpectralPage:
    """E²_{p,q} = H̃_p(T, Ω_q) a partir da homologia inteira e Z₂ do descritor."""
    N = int(window if window is not None else get_setting('window'))
    if N > descriptor.valid_through:
        raise WindowError(
            f"{descriptor.name}: janela {N} excede o intervalo validado do descritor ({descriptor.valid_through}).")
    minimo = 1 if descriptor.reduced else 0
    celulas: Dict[Position, Cell] = {}
    for p in range(minimo, N + 1):
        if not _homology_nonzero(descriptor, p):
            continue
        for q in range(0, N - p + 1):
            if q > row.max_q:
                # células de grau total N com p < 2 não são fonte nem alvo de d^r relevante
                if p >= 2 or p + q < N:
                    raise WindowError(f"{descriptor.name}: E_{{{p},{q}}} exige Ω_{q}, fora da linha '{row.name}'.")
                continue
            if q in row.undetermined:
                celulas[(p, q)] = Cell(p, q, [], [], np.zeros((0, 0), dtype=object),
                                       np.zeros((0, 0), dtype=object), list(row.undetermined[q]))
                continue
            nomes: List[str] = []
            ordens: List[int] = []
            for coef, ordem in row.coefficients(q):
                n_bloco, o_bloco = _coefficient_block(descriptor, p, coef, ordem)
                nomes += n_bloco
                ordens += o_bloco
            if nomes:
                celulas[(p, q)] = _initial_cell(p, q, nomes, ordens)
    logger.debug(f"[e2_page] {descriptor.name}: {len(celulas)} células não nulas (janela {N}).")
    return SpectralPage(descriptor.name, row, 2, N, celulas, minimo)


# --- Diferenciais ---

def _target(r: int, p: int, q: int) -> Position:
    return p - r, q + r - 1


def _d2_matrix(descriptor: SpaceDescriptor, row: CoefficientRow, source: Cell, target: Cell) -> np.ndarray:
    """d²_{p,q}: coeficiente c → α₁c, Sq²_* (c em Z₂) ou Sq²_* ∘ ρ₂ (c em Z)."""
    p, q = source.p, source.q
    D = np.zeros((target.dim, source.dim), dtype=object)
    sq2 = descriptor.sq_dual_matrix(2, p)
    rho = descriptor.rho2_matrix(p)
    col0 = 0
    row0_alvo = {}
    inicio = 0
    for c, o in row.coefficients(q + 1):
        bloco, _ = _coefficient_block(descriptor, p - 2, c, o)
        row0_alvo[c] = inicio
        inicio += len(bloco)
    for c, o in row.coefficients(q):
        bloco, _ = _coefficient_block(descriptor, p, c, o)
        destino = row.alpha1.get(c)
        if destino in row0_alvo and bloco:
            M = sq2.dot(rho) if o == 0 else sq2
            for i in range(M.shape[0]):
                for j in range(M.shape[1]):
                    D[row0_alvo[destino] + i, col0 + j] = int(M[i, j]) % 2
        col0 += len(bloco)
    return D


def _assertion_matrix(assertion: 'Assertion', source: Cell, target: Optional[Cell]) -> np.ndarray:
    dim_alvo = target.dim if target is not None else 0
    D = np.zeros((dim_alvo, source.dim), dtype=object)
    indice = {n: i for i, n in enumerate(source.names)}
    for origem, imagem in assertion.images.items():
        if origem not in indice:
            raise AssertionConflictError(
                f"{assertion.key}: '{origem}' não é gerador de E_{{{source.p},{source.q}}} ({', '.join(source.names)}).")
        if target is None:
            if imagem.strip() not in ("", "0"):
                raise AssertionConflictError(f"{assertion.key}: imagem não nula num grupo nulo.")
            continue
        D[:, indice[origem]] = target.vector(imagem)[:, 0]
    return D


def _columns(M: np.ndarray, rows: int) -> np.ndarray:
    return M if M.size else np.zeros((rows, M.shape[1] if M.ndim == 2 else 0), dtype=object)


def _contained(lattice: np.ndarray, vectors: np.ndarray) -> bool:
    if vectors.shape[1] == 0 or not any(v != 0 for v in vectors.flatten()):
        return True
    return lattice_contains(lattice, vectors)


def _induced(D: np.ndarray, source: Cell, target: Cell) -> GroupMorphism:
    S, T = source.subquotient, target.subquotient
    M = np.zeros((T.group.ngens, S.group.ngens), dtype=object)
    for j in range(S.group.ngens):
        imagem = D.dot(S.representative(j).reshape(source.dim, 1))
        coords = T.coordinates(imagem[:, 0]).coefficients
        for i, v in enumerate(coords):
            M[i, j] = v
    return GroupMorphism(S.group, T.group, M)


@dataclass
class Assertion:
    kind: str
    r: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    n: Optional[int] = None
    images: Dict[str, str] = field(default_factory=dict)
    group: Optional[str] = None
    provenance: str = ""
    # diferencial obtido por contradição entre filtrações; não verificável aqui
    unverifiable: bool = False

    KINDS = ("higher_differential", "extension_resolution", "page_collapse")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise DescriptorError(f"Tipo de asserção desconhecido: '{self.kind}'.")
        if self.kind == "higher_differential" and None in (self.r, self.p, self.q):
            raise DescriptorError("Asserção de diferencial exige r, p e q.")
        if self.kind == "extension_resolution" and (self.n is None or not self.group):
            raise DescriptorError("Asserção de extensão exige n e group.")
        if self.kind == "page_collapse" and self.r is None:
            raise DescriptorError("Asserção de colapso exige r.")

    @property
    def key(self) -> str:
        if self.kind == "higher_differential":
            return f"d{self.r}_{{{self.p},{self.q}}}"
        if self.kind == "extension_resolution":
            return f"ext_{self.n}"
        return f"colapso_{self.r}"

    def is_zero(self) -> bool:
        return all(v.strip() in ("", "0") for v in self.images.values())


def _index_assertions(assertions: Iterable[Assertion]) -> Tuple[Dict[Tuple[int, int, int], Assertion], Optional[int]]:
    por_local: Dict[Tuple[int, int, int], Assertion] = {}
    colapso: Optional[int] = None
    vistos = set()
    for a in assertions:
        if a.key in vistos:
            raise AssertionConflictError(f"Asserção duplicada para {a.key}.")
        vistos.add(a.key)
        if a.kind == "higher_differential":
            por_local[(a.r, a.p, a.q)] = a
        elif a.kind == "page_collapse":
            colapso = a.r if colapso is None else min(colapso, a.r)
    return por_local, colapso


def _advance(page: SpectralPage, matrices: Dict[Position, np.ndarray], records: List[DifferentialRecord]) -> SpectralPage:
    """Homologia simultânea de E^r em relação aos d^r dados em `matrices` (fonte -> D ambiente)."""
    r = page.r
    # d∘d = 0
    for fonte, D in matrices.items():
        meio = _target(r, *fonte)
        if meio not in matrices:
            continue
        fim = _target(r, *meio)
        alvo_final = page.cell(*fim)
        if alvo_final is None or alvo_final.undetermined:
            continue
        composto = matrices[meio].dot(D.dot(page.cells[fonte].cycles))
        if not _contained(alvo_final.boundaries, composto):
            raise AssertionConflictError(
                f"{page.space}: d{r}∘d{r} ≠ 0 de E_{{{fonte[0]},{fonte[1]}}} para E_{{{fim[0]},{fim[1]}}}.")

    novas: Dict[Position, Cell] = {}
    entradas: Dict[Position, List[np.ndarray]] = {}
    for fonte, D in matrices.items():
        origem = page.cells[fonte]
        entradas.setdefault(_target(r, *fonte), []).append(D.dot(origem.cycles))

    for pos, celula in page.cells.items():
        if celula.undetermined:
            novas[pos] = celula
            continue
        Z, B = celula.cycles, celula.boundaries
        if pos in matrices:
            alvo = page.cells[_target(r, *pos)]
            DZ = matrices[pos].dot(Z)
            bloco = np.hstack([DZ, -alvo.boundaries]) if alvo.boundaries.shape[1] else DZ
            nucleo = integer_kernel(_columns(bloco, alvo.dim))
            x = nucleo[:Z.shape[1], :] if nucleo.size else np.zeros((Z.shape[1], 0), dtype=object)
            Z = lattice_basis(Z.dot(x), celula.dim) if x.shape[1] else np.zeros((celula.dim, 0), dtype=object)
        if pos in entradas:
            B = lattice_basis(np.hstack([B] + entradas[pos]), celula.dim)
        novas[pos] = Cell(celula.p, celula.q, celula.names, celula.orders, Z, B)
    return SpectralPage(page.space, page.row, r + 1, page.window, novas, page.min_p,
                        page.differentials + records, list(page.unresolved), False)


def _check_and_record(page: SpectralPage, fonte: Position, D: np.ndarray, origem: str,
                      assertion: Optional[Assertion] = None) -> DifferentialRecord:
    r = page.r
    src = page.cells[fonte]
    tgt = page.cells[_target(r, *fonte)]
    DZ = D.dot(src.cycles)
    if not _contained(tgt.cycles, DZ):
        raise AssertionConflictError(
            f"{page.space}: d{r}_{{{fonte[0]},{fonte[1]}}} leva ciclos fora de Z_{r} do alvo.")
    if not _contained(tgt.boundaries, D.dot(src.boundaries)):
        raise AssertionConflictError(
            f"{page.space}: d{r}_{{{fonte[0]},{fonte[1]}}} não se anula nos bordos (mal definido em E^{r}).")
    if assertion is not None and not assertion.is_zero() and _contained(tgt.boundaries, DZ):
        raise AssertionConflictError(
            f"{page.space}: {assertion.key} afirmada não nula, mas o mapa induzido em E^{r} é zero.")
    morfismo = _induced(D, src, tgt)
    return DifferentialRecord(r, fonte, _target(r, *fonte), morfismo, origem,
                              assertion.provenance if assertion else "")


def d2(page: SpectralPage, descriptor: SpaceDescriptor) -> Tuple[List[DifferentialRecord], SpectralPage]:
    """d² calculado (Sq² dual) e a página E³ resultante."""
    if page.r != 2:
        raise WindowError(f"d2 exige a página E², recebida E^{page.r}.")
    if not page.row.computed_d2:
        raise UnsupportedError(f"Linha '{page.row.name}' não tem d² calculado; use asserções.")
    matrizes: Dict[Position, np.ndarray] = {}
    registros: List[DifferentialRecord] = []
    for fonte, src in sorted(page.cells.items()):
        alvo_pos = _target(2, *fonte)
        alvo = page.cell(*alvo_pos)
        if alvo is None or alvo_pos[0] < page.min_p:
            continue
        D = _d2_matrix(descriptor, page.row, src, alvo)
        registro = _check_and_record(page, fonte, D, "calculado")
        registros.append(registro)
        if not registro.is_zero():
            matrizes[fonte] = D
            logger.info(f"[d2] {page.space}: d2_{{{fonte[0]},{fonte[1]}}} não nulo.")
    return registros, _advance(page, matrizes, registros)


def apply_assertions(page: SpectralPage, assertions: Sequence[Assertion] = (),
                     descriptor: Optional[SpaceDescriptor] = None) -> SpectralPage:
    """
    Avança até E^∞ na janela aplicando os diferenciais afirmados. Um d^r não
    afirmado com Hom(E^r_fonte, E^r_alvo) ≠ 0 fica registrado como pendente.
    """
    por_local, colapso = _index_assertions(assertions)
    if page.r == 2 and page.row.computed_d2:
        if descriptor is None:
            raise DescriptorError("A página E² da linha do ponto exige o descritor para calcular d².")
        if any(r == 2 for r, _, _ in por_local):
            raise AssertionConflictError("d² é calculado; asserções de página 2 não são aceitas nesta linha.")
        _, page = d2(page, descriptor)

    usados = set()
    while page.r <= page.window:
        r = page.r
        matrizes: Dict[Position, np.ndarray] = {}
        registros: List[DifferentialRecord] = []
        pendentes: List[Tuple[int, int, int]] = []
        for fonte, src in sorted(page.cells.items()):
            alvo_pos = _target(r, *fonte)
            asserc = por_local.get((r,) + fonte)
            alvo = page.cell(*alvo_pos) if alvo_pos[0] >= page.min_p else None
            if asserc is not None:
                usados.add(asserc.key)
            if alvo is None or src.is_zero() or alvo.is_zero():
                if asserc is not None and not asserc.is_zero():
                    raise AssertionConflictError(f"{page.space}: {asserc.key} não nula entre grupos nulos.")
                continue
            if src.undetermined or alvo.undetermined:
                if asserc is not None and asserc.is_zero():
                    registros.append(DifferentialRecord(r, fonte, alvo_pos, None, "asserção", asserc.provenance))
                elif asserc is not None:
                    raise UndeterminedEntryError(
                        f"{asserc.key} envolve célula indeterminada.", src.candidates or alvo.candidates)
                elif colapso is None or r < colapso:
                    pendentes.append((r,) + fonte)
                continue
            if asserc is not None:
                D = _assertion_matrix(asserc, src, alvo)
                registro = _check_and_record(page, fonte, D, "asserção", asserc)
                registros.append(registro)
                if not registro.is_zero():
                    matrizes[fonte] = D
                continue
            if colapso is not None and r >= colapso:
                continue
            if not hom_group(src.group, alvo.group).is_trivial():
                pendentes.append((r,) + fonte)
        if pendentes:
            logger.warning(f"[apply_assertions] {page.space}: d{r} pendentes em "
                           f"{', '.join(f'({p},{q})' for _, p, q in pendentes)}")
        page = _advance(page, matrizes, registros)
        page.unresolved.extend(pendentes)

    ignoradas = [a.key for a in por_local.values() if a.key not in usados]
    for chave in ignoradas:
        asserc = next(a for a in por_local.values() if a.key == chave)
        if not asserc.is_zero():
            raise AssertionConflictError(f"{page.space}: {chave} não corresponde a nenhuma célula da janela.")
        logger.debug(f"[apply_assertions] {page.space}: {chave} (nula) fora da janela.")
    page.final = True
    return page


# --- Montagem da filtração ---

def _check_stabilized(page: SpectralPage, n: int) -> None:
    if not page.final:
        raise PageNotStabilizedError(f"{page.space}: página {page.title()} ainda não é E^∞.")
    pendentes = [(r, p, q) for r, p, q in page.unresolved if p + q in (n, n + 1)]
    if pendentes:
        chaves = [f"d{r}_{{{p},{q}}}" for r, p, q in pendentes]
        raise PageNotStabilizedError(
            f"{page.space}: grau {n} depende de diferenciais não resolvidos: {', '.join(chaves)}.", chaves)
    if n > page.window - 1:
        raise WindowError(f"{page.space}: grau total {n} exige janela ≥ {n + 1} (atual {page.window}).")


def assemble_filtration(page: SpectralPage, n: int,
                        assertions: Sequence[Assertion] = ()) -> Tuple[Optional[AbelianGroup], List[str]]:
    """
    Monta Ω̃_n por extensões sucessivas 0 → F_{p−1} → F_p → E^∞_{p,n−p} → 0.
    Retorna (grupo, []) se único; (None, candidatos ordenados) se ambíguo.
    """
    _check_stabilized(page, n)
    celulas = page.total_degree(n)
    limite = get_setting('max_extension_choices')
    possiveis = {AbelianGroup()}
    for c in sorted(celulas, key=lambda c: c.p):
        # célula indeterminada: ramifica sobre cada candidato do coeficiente
        quocientes = [AbelianGroup.parse(g) for g in c.candidates] if c.undetermined else [c.group]
        proximos = set()
        for quociente in quocientes:
            for sub in possiveis:
                if quociente.is_trivial():
                    proximos.add(sub)
                else:
                    proximos.update(extension_candidates(quociente, sub, limite))
        possiveis = proximos
    candidatos = sorted(possiveis, key=AbelianGroup.sort_key)
    indeterminadas = [c for c in celulas if c.undetermined]
    if indeterminadas:
        c = indeterminadas[0]
        raise UndeterminedEntryError(
            f"{page.space}: E_{{{c.p},{c.q}}} indeterminada no grau {n}.",
            [g.label() for g in candidatos])
    escolha = [a for a in assertions if a.kind == "extension_resolution" and a.n == n]
    if len(escolha) > 1:
        raise AssertionConflictError(f"{page.space}: mais de uma asserção de extensão para n = {n}.")
    if escolha:
        grupo = AbelianGroup.parse(escolha[0].group)
        if grupo not in possiveis:
            raise AssertionConflictError(
                f"{page.space}: extensão afirmada {grupo.label()} fora dos candidatos "
                f"{[g.label() for g in candidatos]} para n = {n}.")
        return grupo, []
    if len(candidatos) == 1:
        return candidatos[0], []
    logger.info(f"[assemble_filtration] {page.space}: grau {n} ambíguo: {[g.label() for g in candidatos]}")
    return None, sorted(g.label() for g in candidatos)


@dataclass(frozen=True)
class EdgeFlags:
    degree: int
    injective: bool
    surjective: bool


def edge_morphism_tests(page: SpectralPage, degrees: Optional[Iterable[int]] = None) -> Dict[int, EdgeFlags]:
    """Ψ_n: Ω̃_n(T) → H̃_n(T, Z): injetiva sse E^∞_{n−q,q} = 0 para q ≥ 1; sobrejetiva sse nenhum d^r sai de (n, 0)."""
    graus = list(degrees) if degrees is not None else list(range(page.min_p, page.window))
    saida: Dict[int, EdgeFlags] = {}
    for n in graus:
        _check_stabilized(page, n)
        superiores = [c for c in page.total_degree(n) if c.q >= 1]
        for c in superiores:
            if c.undetermined:
                raise UndeterminedEntryError(f"{page.space}: E_{{{c.p},{c.q}}} indeterminada.", c.candidates)
        injetiva = all(c.is_zero() for c in superiores)
        base = page.cell(n, 0)
        sobrejetiva = base is None or _contained(base.cycles, identity_matrix(base.dim))
        saida[n] = EdgeFlags(n, injetiva, sobrejetiva)
    return saida


# --- Execução completa ---

@dataclass
class SpectralRun:
    e2: SpectralPage
    e3: Optional[SpectralPage]
    final: SpectralPage
    groups: Dict[int, Optional[AbelianGroup]]
    ambiguities: Dict[int, List[str]]
    # grau -> candidatos de uma célula indeterminada
    undetermined: Dict[int, List[str]] = field(default_factory=dict)


def run_spectral_sequence(descriptor: SpaceDescriptor, row: CoefficientRow = POINT_ROW,
                          window: Optional[int] = None, assertions: Sequence[Assertion] = (),
                          degrees: Optional[Iterable[int]] = None) -> SpectralRun:
    """E², E³ (quando d² é calculado), E^∞ e os grupos montados nos graus pedidos."""
    e2 = e2_page(descriptor, row, window)
    e3 = d2(e2, descriptor)[1] if row.computed_d2 else None
    final = apply_assertions(e3 if e3 is not None else e2, assertions, descriptor)
    graus = list(degrees) if degrees is not None else list(range(final.min_p, final.window))
    grupos: Dict[int, Optional[AbelianGroup]] = {}
    ambiguidades: Dict[int, List[str]] = {}
    indeterminados: Dict[int, List[str]] = {}
    for n in graus:
        try:
            grupo, amb = assemble_filtration(final, n, assertions)
        except UndeterminedEntryError as e:
            logger.warning(f"[run_spectral_sequence] {descriptor.name}: {e}")
            grupos[n] = None
            indeterminados[n] = list(e.candidates)
            continue
        grupos[n] = grupo
        if amb:
            ambiguidades[n] = amb
    return SpectralRun(e2, e3, final, grupos, ambiguidades, indeterminados)
