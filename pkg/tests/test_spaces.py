# -*- coding: utf-8 -*-
import numpy as np
import pytest

from app_logic import descriptor_io, spaces
from app_logic.abgrp import AbelianGroup
from app_logic.errors import DescriptorError, MissingDataError, WellDefinednessError, WindowError
from app_logic.report_utils import cohomology_diff
from app_logic.spaces import (
    BocksteinAssertion,
    ThomInput,
    bockstein_e1,
    gf2_complement,
    gf2_in_span,
    gf2_nullspace,
    gf2_rank,
    gf2_span_basis,
    thom_space,
    unreduced,
    validate_descriptor,
)


# --- Álgebra linear F₂ ---

def test_gf2_posto_e_nucleo():
    M = np.array([[1, 1, 0], [1, 1, 0]])
    assert gf2_rank(M) == 1
    N = gf2_nullspace(M, 3)
    assert N.shape == (2, 3)
    assert not ((M @ N.T.astype(int)) % 2).any()
    assert gf2_nullspace(np.zeros((0, 3)), 3).shape == (3, 3)


def test_gf2_span_e_complemento():
    total = np.eye(3, dtype=np.uint8)
    sub = gf2_span_basis(np.array([[1, 1, 0]]), 3)
    assert gf2_in_span(sub, np.array([1, 1, 0], dtype=np.uint8))
    assert not gf2_in_span(sub, np.array([1, 0, 0], dtype=np.uint8))
    extra = gf2_complement(sub, total, 3)
    assert extra.shape[0] == 2
    assert gf2_rank(np.vstack([sub, extra])) == 3


# --- Descritores embarcados ---

@pytest.mark.parametrize("nome", descriptor_io.list_names("spaces"))
def test_descritores_embarcados_sao_consistentes(nome):
    assert validate_descriptor(descriptor_io.load_space(nome)) == []


def test_validacao_confere_adem_ate_o_teto(monkeypatch):
    pedidos = []

    def registrar(algebra, max_sum=12):
        pedidos.append(max_sum)
        return []

    monkeypatch.setattr(spaces, "check_adem_relations", registrar)
    kz4 = descriptor_io.load_space("KZ4")
    assert validate_descriptor(kz4) == []
    assert pedidos == [kz4.algebra.cap] == [10]


def test_janela_de_validade():
    su = descriptor_io.load_space("SU")
    assert su.integral_group(8) == AbelianGroup.parse("Z")
    assert su.degree(6).integral == []
    with pytest.raises(WindowError):
        su.degree(11)


def test_rho2_e_sq_dual():
    su = descriptor_io.load_space("SU")
    assert su.rho2_matrix(5).tolist() == [[1]]
    # (Sq²)_*: H_5 → H_3 dual de Sq² b2 = b3
    assert su.sq_dual_matrix(2, 5).tolist() == [[1]]
    assert su.sq_dual_matrix(1, 5).size == 0


# --- Espaços de Thom ---

def test_msu2_como_espaco_de_thom():
    msu2 = descriptor_io.load_space("MSU2")
    assert msu2.valid_through == 10
    assert msu2.degree(4).integral == [("tau", 0)]
    assert msu2.degree(8).integral_names == ["gamma2_T"]
    A = msu2.algebra
    t = A.gen("t")
    assert t * t == A.parse("c2*t")
    assert A.sq(4, t) == A.parse("c2*t")
    assert A.sq(1, t).is_zero() and A.sq(2, t).is_zero()


@pytest.mark.parametrize("nome", ["MSU2", "MSpin4"])
def test_thom_descarta_graus_alem_da_janela(nome):
    # a base vai até o grau 8; o grau 12 do espaço de Thom fica de fora
    descritor = descriptor_io.load_space(nome)
    assert descritor.valid_through == 10
    assert max(descritor.degrees) <= 10
    assert 12 not in descritor.degrees
    assert validate_descriptor(descritor) == []


def _entrada(**kw):
    padrao = dict(base=descriptor_io.load_space("BSU2"), rank=4, euler="c2", name="teste")
    padrao.update(kw)
    return ThomInput(**padrao)


def test_thom_exige_base_nao_reduzida():
    with pytest.raises(DescriptorError):
        thom_space(_entrada(base=descriptor_io.load_space("SU")))


def test_thom_exige_euler():
    with pytest.raises(MissingDataError):
        thom_space(_entrada(euler=None))


def test_thom_orientacao_e_euler():
    with pytest.raises(WellDefinednessError):
        thom_space(_entrada(stiefel_whitney={4: "0"}))
    with pytest.raises(WellDefinednessError):
        thom_space(_entrada(stiefel_whitney={1: "c2"}))
    assert thom_space(_entrada(stiefel_whitney={4: "c2"})).degree(4).integral_names == ["tau"]


def test_unreduced():
    su = descriptor_io.load_space("SU")
    livre = unreduced(su)
    assert not livre.reduced
    assert livre.degree(0).integral == [("1", 0)]
    assert unreduced(livre) is livre
    assert 0 not in su.degrees


# --- Bockstein ---

def test_bockstein_kz2_4_com_d2():
    arquivo = descriptor_io.load_assertions("KZ2_4")
    relatorio = bockstein_e1(descriptor_io.load_space("KZ2_4"), arquivo.bockstein)
    grupos = relatorio.integral_cohomology()
    assert grupos[9] == AbelianGroup.parse("Z4")
    assert cohomology_diff(grupos, descriptor_io.load_golden("KZ2_4_bock")) == []


def test_bockstein_kz2_3_sem_assercoes():
    relatorio = bockstein_e1(descriptor_io.load_space("KZ2_3"))
    grupos = relatorio.integral_cohomology()
    assert grupos[10] == AbelianGroup.parse("Z2^3")
    assert cohomology_diff(grupos, descriptor_io.load_golden("KZ2_3_bock")) == []
    assert relatorio.e2(3) == []


def test_bockstein_assercao_invalida():
    kz = descriptor_io.load_space("KZ2_4")
    with pytest.raises(DescriptorError):
        bockstein_e1(kz, [BocksteinAssertion(1, 4, {"f4": "f5"})])
    # f5 = Sq¹f4 é bordo em E₂
    with pytest.raises(WellDefinednessError):
        bockstein_e1(kz, [BocksteinAssertion(2, 5, {"f5": "0"})])
