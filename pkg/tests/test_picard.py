# -*- coding: utf-8 -*-
import pytest

from app_logic import descriptor_io
from app_logic.abgrp import AbelianGroup, GroupMorphism, cyclic
from app_logic.errors import MorphismMismatchError, WellDefinednessError
from app_logic.groupcoh import Cochain, QuadraticMap, h2_sym_group
from app_logic.picard import (
    CategoricalGroup,
    FunctorData,
    PicardGroupoid,
    bordism_picard,
    catgroup_functor_exists,
    functor_exists,
    functor_torsor_group,
    functor_witness,
    monoidal_iso_exists,
    nat_iso_torsor_group,
    nat_iso_torsor_group_restricted,
)

Z2 = cyclic(2)


@pytest.mark.parametrize("origem, funtores, isos, restritos", [
    ("BSU2_7", "0", "0", "0"),
    ("BSU2_8", "0", "Z2^4", "Z2^2"),
    ("MSO4_8", "0", "Z2^5", "Z2^3"),
    ("KZ2_4_8", "Z2", "Z2^3", "Z2"),
])
def test_torsores_para_z2_torsores(origem, funtores, isos, restritos, z2_torsors):
    P = descriptor_io.load_picard(origem)
    assert functor_torsor_group(P, z2_torsors).label() == funtores
    assert nat_iso_torsor_group(P, z2_torsors).label() == isos
    assert nat_iso_torsor_group_restricted(P, z2_torsors).label() == restritos


def test_tabela_q_de_bsu2():
    P = descriptor_io.load_picard("BSU2_8")
    assert P.pi0.label() == "Z^4"
    assert P.pi1.label() == "Z2^3"
    assert P.q_table() == {"alpha8": "a1alpha8", "alpha8p": "a1alpha8p", "zeta1": "0", "zeta2": "a1zeta2"}
    assert P.point_inclusion().domain.label() == "Z^2"


def test_todas_as_triplas_carregam():
    for nome in descriptor_io.list_names("picard"):
        P = descriptor_io.load_picard(nome)
        assert P.q.is_linear_quadratic()
        assert P.sigma.is_skew()


def test_q_deve_ser_2_torcao():
    Z4 = cyclic(4)
    with pytest.raises(WellDefinednessError):
        bordism_picard(Z4, Z4, GroupMorphism.identity(Z4))


def test_funtor_identidade_e_isomorfismos(z2_torsors):
    P = z2_torsors
    ident0 = GroupMorphism.identity(P.pi0)
    ident1 = GroupMorphism.identity(P.pi1)
    assert functor_exists(P, P, ident0, ident1)
    F = functor_witness(P, P, ident0, ident1)
    assert monoidal_iso_exists(F, F)

    # torce φ pela classe não trivial de H²_sym(Z2, Z2)
    grupo, reps = h2_sym_group(P.pi0, P.pi1)
    assert grupo == Z2
    G = FunctorData(P, P, ident0, ident1, F.phi + reps[0])
    assert not monoidal_iso_exists(F, G)


def test_funtor_inexistente(z2_torsors):
    trivial = PicardGroupoid(Z2, Z2, QuadraticMap.zero(Z2, Z2), "trivial")
    ident = GroupMorphism.identity(Z2)
    # q(odd) = minus1 não é preservado por um alvo com q = 0
    assert not functor_exists(z2_torsors, trivial, ident, ident)
    with pytest.raises(WellDefinednessError):
        functor_witness(z2_torsors, trivial, ident, ident)


def test_testemunha_deve_ser_cociclo(z2_torsors):
    P = z2_torsors
    ident = GroupMorphism.identity(Z2)
    Z4 = cyclic(4)
    with pytest.raises(MorphismMismatchError):
        FunctorData(P, P, ident, ident, Cochain.zero(2, Z4, Z2))


def test_grupos_categoricos():
    alpha = Cochain.zero(3, Z2, Z2)
    G = CategoricalGroup(Z2, Z2, alpha)
    ident = GroupMorphism.identity(Z2)
    assert catgroup_functor_exists(G, G, ident, ident)
    assert G.act(Z2.generator(0)) == ident

    # α não trivial em H³(Z2, Z2): α(x, y, z) = xyz
    alpha_nt = Cochain.from_function(3, Z2, Z2, lambda x, y, z: (x[0] * y[0] * z[0],))
    H = CategoricalGroup(Z2, Z2, alpha_nt)
    assert not catgroup_functor_exists(G, H, ident, ident)
    assert catgroup_functor_exists(G, H, GroupMorphism.zero(Z2, Z2), ident)


def test_tripla_com_dimensoes_erradas():
    with pytest.raises(MorphismMismatchError):
        PicardGroupoid(Z2, Z2, QuadraticMap.zero(AbelianGroup.parse("Z2^2"), Z2))
