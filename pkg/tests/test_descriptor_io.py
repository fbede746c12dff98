# -*- coding: utf-8 -*-
import pytest

from app_logic import descriptor_io
from app_logic.abgrp import AbelianGroup

ARQUIVOS = [(tipo, nome) for tipo in descriptor_io.SUBDIRS for nome in descriptor_io.list_names(tipo)]

CARREGADORES = {
    "spaces": descriptor_io.load_space,
    "assertions": descriptor_io.load_assertions,
    "manifests": descriptor_io.load_manifest,
    "manifolds": descriptor_io.load_manifold,
    "picard": descriptor_io.load_picard,
    "golden": descriptor_io.load_golden,
}


# --- Todo arquivo embarcado carrega ---

@pytest.mark.parametrize("tipo, nome", ARQUIVOS)
def test_arquivo_embarcado_carrega(tipo, nome):
    assert descriptor_io.read_toml(tipo, nome)
    carregar = CARREGADORES.get(tipo)
    if carregar is not None:
        assert carregar(nome) is not None


@pytest.mark.parametrize("nome", descriptor_io.list_names("assertions"))
def test_assercoes_apontam_para_espaco_existente(nome):
    arquivo = descriptor_io.load_assertions(nome)
    assert arquivo.space in descriptor_io.list_names("spaces")


@pytest.mark.parametrize("nome", descriptor_io.list_names("manifests"))
def test_manifesto_resolve_referencias(nome):
    manifesto = descriptor_io.load_manifest(nome)
    descritor = descriptor_io.load_manifest_space(manifesto)
    if manifesto.assertions:
        assert descriptor_io.load_assertions(manifesto.assertions).space == manifesto.space
    if manifesto.window is not None:
        assert manifesto.window <= descritor.valid_through
    assert descriptor_io.load_golden(manifesto.golden or manifesto.id)


@pytest.mark.parametrize("nome", descriptor_io.list_names("golden"))
def test_golden_tem_grupos_validos(nome):
    golden = descriptor_io.load_golden(nome)
    for rotulo in list(golden.groups.values()) + list(golden.cohomology.values()):
        AbelianGroup.parse(rotulo)
    for candidatos in list(golden.ambiguous.values()) + list(golden.undetermined.values()):
        assert all(AbelianGroup.parse(c) is not None for c in candidatos)


def test_catalogo_de_orientacao_carrega(catalog):
    assert catalog.families and catalog.functors


# --- Nomes das classes de Eilenberg–MacLane ---

def test_nomes_por_sequencia_admissivel():
    A = descriptor_io.parse_algebra("K(Z,4)", {
        "cap": 10,
        "eilenberg_maclane": {"degree": 4, "coefficients": "Z", "fundamental": "e4"},
        "names": {"2": "e6p", "4_2": "e10p"},
    })
    e4 = A.gen("e4")
    assert A.sq(2, e4) == A.gen("e6p")
    assert A.sq(4, A.gen("e6p")) == A.gen("e10p")


def test_nomes_embarcados_de_kz2_3():
    A = descriptor_io.load_space("KZ2_3").algebra
    assert "c10p" in A.basis_names(10)
