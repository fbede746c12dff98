# -*- coding: utf-8 -*-
"""
Leitura dos arquivos TOML de data/: espaços, asserções, manifestos,
variedades, famílias de fórmulas, tabelas de functores, Picard e golden.
"""
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import toml

from app_logic.abgrp import AbelianGroup, GroupMorphism
from app_logic.ahss import POINT_ROW, Assertion, CoefficientRow, generic_row
from app_logic.config import data_path, get_logger, get_setting
from app_logic.errors import DescriptorError, MissingDataError
from app_logic.orient import (
    CharNumbers,
    FormulaFamily,
    FunctorTable,
    GeneratorClass,
    IntegralDegree,
    ManifoldDescriptor,
    OrientCatalog,
    Witness,
    check_witnesses,
)
from app_logic.picard import PicardGroupoid, bordism_picard
from app_logic.spaces import (
    BocksteinAssertion,
    HomologyDegree,
    SpaceDescriptor,
    ThomInput,
    thom_space,
    unreduced,
)
from app_logic.steenrod import (
    GradedF2Algebra,
    Generator,
    eilenberg_maclane_algebra,
    stiefel_whitney_algebra,
)

logger = get_logger(__name__)

logger.info("descriptor_io.py: Módulo inicializado.")

SUBDIRS = ("spaces", "assertions", "manifests", "manifolds", "functors", "families", "picard", "golden")


def _resolve(kind: str, name_or_path: str) -> str:
    """Aceita um caminho explícito ou um nome relativo a data/<kind>/."""
    if os.path.exists(name_or_path):
        return name_or_path
    if os.path.exists(name_or_path + ".toml"):
        return name_or_path + ".toml"
    caminho = data_path(kind, name_or_path if name_or_path.endswith(".toml") else name_or_path + ".toml")
    if not os.path.exists(caminho):
        raise MissingDataError(f"Arquivo de {kind} não encontrado: '{name_or_path}' (procurado em {caminho}).")
    return caminho


def read_toml(kind: str, name_or_path: str) -> Dict[str, Any]:
    caminho = _resolve(kind, name_or_path)
    try:
        conteudo = toml.load(caminho)
    except toml.TomlDecodeError as e:
        logger.error(f"descriptor_io.py: Erro de sintaxe em {caminho}: {e}")
        raise DescriptorError(f"{caminho}: TOML inválido ({e}).")
    logger.debug(f"descriptor_io.py: {caminho} carregado ({len(conteudo)} chaves).")
    return conteudo


def list_names(kind: str) -> List[str]:
    pasta = data_path(kind)
    if not os.path.isdir(pasta):
        return []
    return sorted(f[:-5] for f in os.listdir(pasta) if f.endswith(".toml"))


def _int_keys(tabela: Dict[str, Any]) -> Dict[int, Any]:
    try:
        return {int(k): v for k, v in tabela.items()}
    except ValueError as e:
        raise DescriptorError(f"Chave de grau não inteira: {e}")


# --- Álgebras ---

def parse_algebra(name: str, dados: Dict[str, Any]) -> GradedF2Algebra:
    cap = dados.get("cap", get_setting('degree_cap'))
    if "eilenberg_maclane" in dados:
        em = dados["eilenberg_maclane"]
        nomes = {(): em["fundamental"]} if "fundamental" in em else {}
        for chave, nome in dados.get("names", {}).items():
            # "4_2_1" -> Sq⁴Sq²Sq¹ aplicado à classe fundamental
            sequencia = tuple(int(i) for i in chave.split("_") if i.strip())
            nomes[sequencia] = nome
        return eilenberg_maclane_algebra(name, int(em["degree"]), int(cap), em.get("coefficients", "Z"), nomes)
    if "stiefel_whitney" in dados:
        sw = dados["stiefel_whitney"]
        return stiefel_whitney_algebra(int(sw["rank"]), int(cap), bool(sw.get("oriented", False)), name)
    geradores = []
    for g in dados.get("generators", []):
        geradores.append(Generator(g["name"], int(g["degree"]), g.get("kind", "polynomial"),
                                   int(g.get("height", 0)), g.get("square")))
    if not geradores:
        raise DescriptorError(f"{name}: álgebra sem geradores.")
    tabela = {gerador: {int(i): str(v) for i, v in linhas.items()}
              for gerador, linhas in dados.get("sq", {}).items()}
    return GradedF2Algebra(name, geradores, int(cap), sq_table=tabela,
                           zero_monomials=dados.get("zero_monomials", ()))


# --- Espaços ---

def _homology_degree(n: int, dados: Dict[str, Any]) -> HomologyDegree:
    integral = [(nome, int(ordem)) for nome, ordem in dados.get("integral", {}).items()]
    z2 = [(nome, str(dual)) for nome, dual in dados.get("z2", {}).items()]
    rho2 = {nome: list(alvos) for nome, alvos in dados.get("rho2", {}).items()}
    return HomologyDegree(n, integral, z2, rho2)


def load_space(name_or_path: str) -> SpaceDescriptor:
    """Descritor de espaço; arquivos com seção [thom] constroem o espaço de Thom a partir da base."""
    dados = read_toml("spaces", name_or_path)
    nome = dados.get("name") or os.path.basename(name_or_path).replace(".toml", "")
    if "thom" in dados:
        t = dados["thom"]
        base = load_space(t["base"])
        entrada = ThomInput(
            base=base, rank=int(t["rank"]), euler=t.get("euler"),
            stiefel_whitney={int(k): str(v) for k, v in t.get("stiefel_whitney", {}).items()},
            characteristic=dict(t.get("characteristic", {})),
            name=nome, title=dados.get("title", ""),
            valid_through=dados.get("valid_through"),
            unit_names=tuple(t.get("unit_names", ("tau", "taub"))))
        descritor = thom_space(entrada)
    else:
        if "algebra" not in dados:
            raise DescriptorError(f"{nome}: descritor sem seção [algebra].")
        algebra = parse_algebra(dados.get("title") or nome, dados["algebra"])
        graus = {n: _homology_degree(n, g) for n, g in _int_keys(dados.get("degrees", {})).items()}
        descritor = SpaceDescriptor(nome, algebra, graus, int(dados["valid_through"]),
                                    dados.get("title", ""), bool(dados.get("reduced", True)),
                                    dict(dados.get("notes", {})))
    logger.info(f"descriptor_io.py: Espaço '{nome}' carregado (válido até {descritor.valid_through}).")
    return descritor


# --- Asserções ---

@dataclass
class AssertionFile:
    space: str
    assertions: List[Assertion] = field(default_factory=list)
    bockstein: List[BocksteinAssertion] = field(default_factory=list)


def load_assertions(name_or_path: Optional[str]) -> AssertionFile:
    if not name_or_path:
        return AssertionFile("")
    dados = read_toml("assertions", name_or_path)
    lista = []
    for a in dados.get("assertion", []):
        lista.append(Assertion(
            kind=a["kind"], r=a.get("r"), p=a.get("p"), q=a.get("q"), n=a.get("n"),
            images={str(k): str(v) for k, v in a.get("images", {}).items()},
            group=a.get("group"), provenance=a.get("provenance", ""),
            unverifiable=bool(a.get("unverifiable", False))))
    bock = [BocksteinAssertion(int(b["r"]), int(b["degree"]),
                               {str(k): str(v) for k, v in b.get("images", {}).items()},
                               b.get("provenance", ""))
            for b in dados.get("bockstein", [])]
    return AssertionFile(dados.get("space", ""), lista, bock)


# --- Manifestos ---

@dataclass
class RunManifest:
    id: str
    command: str
    space: str
    assertions: Optional[str] = None
    window: Optional[int] = None
    degrees: Optional[List[int]] = None
    golden: Optional[str] = None
    xi: Optional[str] = None
    row: Optional[Dict[str, Any]] = None
    unreduced: bool = False
    title: str = ""

    def coefficient_row(self) -> CoefficientRow:
        if not self.row:
            return POINT_ROW
        grupos = {}
        for q, itens in _int_keys(self.row.get("groups", {})).items():
            grupos[q] = [(nome, int(ordem)) for nome, ordem in itens.items()]
        indeterminados = {q: list(c) for q, c in _int_keys(self.row.get("undetermined", {})).items()}
        return generic_row(self.row.get("name", self.id), grupos, indeterminados, self.row.get("max_q"))


def load_manifest(name_or_path: str) -> RunManifest:
    dados = read_toml("manifests", name_or_path)
    ident = dados.get("id") or os.path.basename(name_or_path).replace(".toml", "")
    if "space" not in dados:
        raise DescriptorError(f"Manifesto '{ident}' sem 'space'.")
    return RunManifest(
        id=ident, command=dados.get("command", "ahss"), space=dados["space"],
        assertions=dados.get("assertions"), window=dados.get("window"),
        degrees=dados.get("degrees"), golden=dados.get("golden"), xi=dados.get("xi"),
        row=dados.get("row"), unreduced=bool(dados.get("unreduced", False)),
        title=dados.get("title", ""))


def load_manifest_space(manifest: RunManifest) -> SpaceDescriptor:
    descritor = load_space(manifest.space)
    return unreduced(descritor) if manifest.unreduced else descritor


# --- Golden ---

@dataclass
class GoldenTable:
    id: str
    groups: Dict[int, str] = field(default_factory=dict)
    ambiguous: Dict[int, List[str]] = field(default_factory=dict)
    undetermined: Dict[int, List[str]] = field(default_factory=dict)
    cohomology: Dict[int, str] = field(default_factory=dict)
    source: str = ""


def load_golden(name_or_path: str) -> GoldenTable:
    dados = read_toml("golden", name_or_path)
    return GoldenTable(
        id=dados.get("id", name_or_path),
        groups={n: str(g) for n, g in _int_keys(dados.get("groups", {})).items()},
        ambiguous={n: list(c) for n, c in _int_keys(dados.get("ambiguous", {})).items()},
        undetermined={n: list(c) for n, c in _int_keys(dados.get("undetermined", {})).items()},
        cohomology={n: str(g) for n, g in _int_keys(dados.get("cohomology", {})).items()},
        source=dados.get("source", ""))


# --- Variedades ---

def load_manifold(name_or_path: str) -> ManifoldDescriptor:
    dados = read_toml("manifolds", name_or_path)
    nome = dados.get("name") or os.path.basename(name_or_path).replace(".toml", "")
    algebra = parse_algebra(dados.get("title") or nome, dados["algebra"]) if "algebra" in dados else None
    integral = {}
    for k, grau in _int_keys(dados.get("integral", {})).items():
        integral[k] = IntegralDegree(k, [(n, int(o)) for n, o in grau.get("classes", {}).items()],
                                     {n: str(e) for n, e in grau.get("rho2", {}).items()})
    return ManifoldDescriptor(
        name=nome, dimension=int(dados["dimension"]), algebra=algebra,
        fundamental=dados.get("fundamental"), integral=integral,
        form=dados.get("form"), p1=dados.get("p1"), signature=dados.get("signature"),
        title=dados.get("title", ""))


# --- Catálogo de orientação ---

def _load_families() -> Tuple[Dict[str, FormulaFamily], List[Witness]]:
    dados = read_toml("families", "coordinates")
    familias = {}
    for ident, f in dados.get("family", {}).items():
        familias[ident] = FormulaFamily(ident, f["context"], int(f["degree"]), list(f["labels"]),
                                        [str(x) for x in f["formulas"]], int(f.get("modulus", 0)),
                                        f.get("title", ""))
    testemunhas = [Witness(w["generator"], w["family"], tuple(int(v) for v in w["expected"]))
                   for w in dados.get("witness", [])]
    return familias, testemunhas


def _load_generators() -> Dict[str, GeneratorClass]:
    dados = read_toml("families", "generators")
    geradores: Dict[str, GeneratorClass] = {}
    for nome, g in dados.get("generator", {}).items():
        contextos = {}
        for contexto, valores in g.items():
            if contexto == "title":
                continue
            contextos[contexto] = CharNumbers(contexto, {k: int(v) for k, v in valores.items()})
        geradores[nome] = GeneratorClass(nome, contextos, g.get("title", ""))
    return geradores


def _load_functors() -> Dict[str, FunctorTable]:
    dados = read_toml("functors", "functors")
    tabelas = {}
    for ident, t in dados.get("functor", {}).items():
        faixa = tuple(t["m_range"]) if "m_range" in t else ((t["m"], t["m"]) if "m" in t else (0, 0))
        tabelas[ident] = FunctorTable(
            id=ident, dimension=int(t["dimension"]), group=t["group"], space=t["space"],
            values={g: str(v) for g, v in t["values"].items()}, title=t.get("title", ""),
            context=t.get("context", ""), index=t.get("index", ""),
            m_range=(int(faixa[0]), int(faixa[1])), fueter=bool(t.get("fueter", False)))
    return tabelas


def _load_xi() -> Dict[str, Dict[int, List[str]]]:
    dados = read_toml("families", "xi_images")
    return {espaco: {n: list(g) for n, g in _int_keys(graus).items()}
            for espaco, graus in dados.get("xi", {}).items()}


def load_orient_catalog() -> OrientCatalog:
    """Famílias, geradores, tabelas de π₁ e Im ξ̂; as testemunhas são conferidas na carga."""
    familias, testemunhas = _load_families()
    geradores = _load_generators()
    catalogo = OrientCatalog(familias, geradores, _load_functors(), _load_xi(), testemunhas)
    problemas = check_witnesses(familias, geradores, testemunhas)
    if problemas:
        for p in problemas:
            logger.error(f"descriptor_io.py: Testemunha divergente: {p}")
        raise DescriptorError(f"{len(problemas)} testemunha(s) de coordenadas divergem: {problemas[0]}")
    for tabela in catalogo.functors.values():
        for gen in tabela.values:
            if gen not in geradores:
                raise DescriptorError(f"Tabela '{tabela.id}': gerador desconhecido '{gen}'.")
    logger.info(f"descriptor_io.py: Catálogo de orientação com {len(familias)} famílias e "
                f"{len(catalogo.functors)} tabelas.")
    return catalogo


# --- Picard ---

def load_picard(name_or_path: str) -> PicardGroupoid:
    dados = read_toml("picard", name_or_path)
    nome = dados.get("name", name_or_path)
    pi0_itens = list(dados["pi0"].items())
    pi1_itens = list(dados["pi1"].items())
    pi0 = AbelianGroup.from_cyclic(int(o) for _, o in pi0_itens)
    pi1 = AbelianGroup.from_cyclic(int(o) for _, o in pi1_itens)
    for grupo, itens in ((pi0, pi0_itens), (pi1, pi1_itens)):
        if tuple(int(o) for _, o in itens) != grupo.generator_orders:
            raise DescriptorError(
                f"{nome}: geradores {[n for n, _ in itens]} fora da ordem canônica {grupo.generator_orders}.")
    indice = {n: k for k, (n, _) in enumerate(pi1_itens)}
    matriz = [[0] * len(pi0_itens) for _ in pi1_itens]
    for col, (gerador, _) in enumerate(pi0_itens):
        imagem = str(dados.get("q", {}).get(gerador, "0")).strip()
        if imagem == "0":
            continue
        for termo in imagem.split("+"):
            termo = termo.strip()
            if termo not in indice:
                raise DescriptorError(f"{nome}: q({gerador}) = '{termo}' não é gerador de π₁.")
            matriz[indice[termo]][col] += 1
    q = GroupMorphism(pi0, pi1, matriz)
    return bordism_picard(pi0, pi1, q, nome, tuple(n for n, _ in pi0_itens), tuple(n for n, _ in pi1_itens),
                          int(dados.get("point_rank", 0)))
