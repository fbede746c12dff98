# -*- coding: utf-8 -*-
import pytest

from app_logic import cli, descriptor_io, report_utils
from app_logic.abgrp import AbelianGroup
from app_logic.ahss import (
    POINT_ROW,
    Assertion,
    EdgeFlags,
    apply_assertions,
    assemble_filtration,
    d2,
    e2_page,
    edge_morphism_tests,
    generic_row,
    run_spectral_sequence,
)
from app_logic.errors import (
    AssertionConflictError,
    DescriptorError,
    PageNotStabilizedError,
    UnsupportedError,
    WindowError,
)

MANIFESTOS_AHSS = [n for n in descriptor_io.list_names("manifests")
                   if descriptor_io.load_manifest(n).command == "ahss"]


@pytest.fixture(scope="module")
def su_run():
    return cli.run_manifest(descriptor_io.load_manifest("SU"))


# --- Linha de coeficientes ---

def test_linha_do_ponto():
    assert [POINT_ROW.label(q) for q in range(10)] == ["Z", "Z2", "Z2", "0", "Z", "0", "0", "0", "Z^2", "Z2^2"]
    with pytest.raises(WindowError):
        POINT_ROW.coefficients(10)


def test_linha_generica():
    linha = generic_row("fibra", {3: [("z3", 2)]}, {7: ["Z2^2", "Z4"]})
    assert linha.max_q == 7
    assert linha.label(3) == "Z2" and linha.label(7) == "?"
    with pytest.raises(UnsupportedError):
        generic_row("fibra", {3: [("z3", 4)]})


# --- Páginas ---

def test_e2_de_su():
    pagina = e2_page(descriptor_io.load_space("SU"), POINT_ROW, 9)
    assert pagina.label(3, 0) == "Z"
    assert pagina.label(3, 1) == "Z2"
    assert pagina.label(3, 4) == "Z"
    assert pagina.label(3, 3) == "0"
    assert pagina.title() == "E^2"


def test_d2_calculado_em_su():
    su = descriptor_io.load_space("SU")
    registros, e3 = d2(e2_page(su, POINT_ROW, 9), su)
    chaves = {r.key for r in registros if not r.is_zero()}
    assert "d2_{5,0}" in chaves and "d2_{5,1}" in chaves
    assert e3.label(3, 1) == "0" and e3.label(3, 2) == "0"
    assert e3.label(5, 0) == "Z"


def test_janela_alem_do_descritor():
    with pytest.raises(WindowError):
        e2_page(descriptor_io.load_space("SU"), POINT_ROW, 11)


# --- Golden ---

@pytest.mark.parametrize("nome", MANIFESTOS_AHSS)
def test_manifestos_conferem_com_golden(nome):
    manifesto = descriptor_io.load_manifest(nome)
    run = cli.run_manifest(manifesto)
    assert report_utils.golden_diff(run, descriptor_io.load_golden(manifesto.golden or manifesto.id)) == []


def test_su_montado(su_run):
    assert su_run.groups[7] == AbelianGroup.parse("Z^2")
    assert su_run.final.title() == "E^∞"
    assert su_run.ambiguities == {}


def test_ambiguidade_kz2_3():
    run = cli.run_manifest(descriptor_io.load_manifest("KZ2_3"))
    assert run.groups[7] is None
    assert run.ambiguities[7] == ["Z2^2", "Z4"]


def test_celula_indeterminada_no_laco():
    run = cli.run_manifest(descriptor_io.load_manifest("LKZ2_4"))
    assert run.groups[7] is None
    assert run.undetermined[7] == ["Z2^3", "Z2+Z4", "Z8"]


# --- Estabilização e asserções ---

def test_kz4_sem_assercoes_nao_estabiliza():
    with pytest.raises(PageNotStabilizedError) as info:
        run_spectral_sequence(descriptor_io.load_space("KZ4"), POINT_ROW, 10, (), [9])
    assert "d3_{10,0}" in info.value.unresolved


def test_grau_fora_da_janela(su_run):
    with pytest.raises(WindowError):
        assemble_filtration(su_run.final, 20)


def test_assercao_nao_nula_sem_celula():
    su = descriptor_io.load_space("SU")
    e3 = d2(e2_page(su, POINT_ROW, 9), su)[1]
    sobra = Assertion("higher_differential", r=3, p=30, q=0, images={"x": "y"})
    with pytest.raises(AssertionConflictError):
        apply_assertions(e3, [sobra], su)


def test_extensao_fora_dos_candidatos(su_run):
    errada = Assertion("extension_resolution", n=8, group="Z8")
    with pytest.raises(AssertionConflictError):
        assemble_filtration(su_run.final, 8, [errada])


def test_assercoes_mal_formadas():
    with pytest.raises(DescriptorError):
        Assertion("chute")
    with pytest.raises(DescriptorError):
        Assertion("higher_differential", r=3, p=5)
    with pytest.raises(DescriptorError):
        Assertion("extension_resolution", n=7)
    su = descriptor_io.load_space("SU")
    e2 = e2_page(su, POINT_ROW, 9)
    with pytest.raises(DescriptorError):
        apply_assertions(e2)
    d2_afirmado = Assertion("higher_differential", r=2, p=5, q=0, images={"beta3": "0"})
    with pytest.raises(AssertionConflictError):
        apply_assertions(e2, [d2_afirmado], su)
    repetida = Assertion("extension_resolution", n=7, group="Z^2")
    with pytest.raises(AssertionConflictError):
        apply_assertions(d2(e2, su)[1], [repetida, repetida], su)


def test_morfismo_de_borda(su_run):
    assert edge_morphism_tests(su_run.final, [3])[3] == EdgeFlags(3, True, True)


def test_golden_diff_aponta_graus_ausentes(su_run):
    golden = descriptor_io.load_golden("SU")
    assert report_utils.golden_diff(su_run, golden) == []
    parcial = descriptor_io.GoldenTable(golden.id, groups={n: g for n, g in golden.groups.items() if n != 6})
    assert report_utils.golden_diff(su_run, parcial) == ["n=6: calculado 0, ausente da tabela golden"]


def test_extensao_de_mso4_no_grau_9():
    run = cli.run_manifest(descriptor_io.load_manifest("MSO4"))
    assert run.groups[9] == AbelianGroup.parse("Z2^3")
    assert 9 not in run.ambiguities


def test_kz4_no_grau_9():
    # d³ mata a1²·ε₇; sobra a1·ε₄² em E_{8,1}
    run = cli.run_manifest(descriptor_io.load_manifest("KZ4"))
    assert run.groups[9] == AbelianGroup.parse("Z2")
    assert run.final.label(8, 1) == "Z2"
