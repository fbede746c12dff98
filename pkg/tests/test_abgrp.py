# -*- coding: utf-8 -*-
import math

import numpy as np
import pytest
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors

from app_logic.abgrp import (
    TRIVIAL,
    Z,
    AbelianGroup,
    GroupMorphism,
    Subquotient,
    compose,
    cyclic,
    diagonal,
    direct_sum,
    extension_candidates,
    from_presentation,
    hermite_reduce,
    hom_group,
    int_matrix,
    integer_kernel,
    lattice_contains,
    smith_normal_form,
    two_torsion,
)
from app_logic.errors import InfiniteGroupError, MorphismMismatchError, UnsupportedError, WellDefinednessError


# --- Rótulos ---

@pytest.mark.parametrize("texto, rotulo", [
    ("0", "0"),
    ("Z", "Z"),
    ("Z ⊕ Z", "Z^2"),
    ("Z2+Z2+Z2", "Z2^3"),
    ("Z4 + Z2 + Z^2", "Z^2+Z2+Z4"),
    ("Z2+Z3", "Z6"),
    ("Z1+Z", "Z"),
])
def test_parse_label(texto, rotulo):
    assert AbelianGroup.parse(texto).label() == rotulo


def test_parse_rejeita_termo_desconhecido():
    with pytest.raises(ValueError):
        AbelianGroup.parse("Q")


def test_invariantes_basicos():
    G = AbelianGroup.parse("Z+Z2+Z4")
    assert G.ngens == 3
    assert G.generator_orders == (0, 2, 4)
    assert not G.is_finite()
    assert G.order() == math.inf
    assert AbelianGroup.parse("Z2+Z4").order() == 8
    assert TRIVIAL.is_trivial() and TRIVIAL.label() == "0"
    assert cyclic(0) == Z
    assert direct_sum(cyclic(2), Z, cyclic(3)) == AbelianGroup.parse("Z+Z6")


def test_elementos_so_de_grupo_finito():
    assert len(list(AbelianGroup.parse("Z2+Z4").elements())) == 8
    with pytest.raises(InfiniteGroupError):
        list(Z.elements())


def test_aritmetica_de_elementos():
    G = AbelianGroup.parse("Z+Z4")
    x = G.element([3, 3])
    assert (x + x).coefficients == (6, 2)
    assert (x * 4).coefficients == (12, 0)
    assert (-x).coefficients == (-3, 1)


# --- Forma de Smith contra o oráculo do sympy ---

MATRIZES = [
    [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
    [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]],
    [[2, 0], [0, 3]],
    [[0, 0], [0, 0]],
    [[4, 6, 8]],
    [[1], [2], [3]],
    [[6, 4], [4, 6], [0, 2]],
]


@pytest.mark.parametrize("linhas", MATRIZES)
def test_smith_confere_com_sympy(linhas):
    M = int_matrix(linhas)
    D, U, V = smith_normal_form(M)
    assert (U.dot(M).dot(V) == D).all()
    nossos = [d for d in diagonal(D) if d != 0]
    esperados = sorted(abs(int(d)) for d in invariant_factors(DM(linhas, ZZ)) if int(d) != 0)
    assert nossos == esperados
    assert all(b % a == 0 for a, b in zip(nossos, nossos[1:]))


def test_nucleo_inteiro():
    M = int_matrix([[1, 2, 3], [2, 4, 6]])
    K = integer_kernel(M)
    assert K.shape == (3, 2)
    assert not M.dot(K).any()


def test_apresentacao_e_reticulado():
    assert from_presentation(2, [[2, 0], [0, 3]]) == cyclic(6)
    assert from_presentation(3, [[2, 2, 0]]) == AbelianGroup.parse("Z^2+Z2")
    B = int_matrix([[2, 0], [0, 2]])
    assert lattice_contains(B, np.array([4, 2], dtype=object))
    assert not lattice_contains(B, np.array([1, 0], dtype=object))


def test_subquociente():
    # Z² / ⟨(2, 0), (0, 4)⟩ = Z2 ⊕ Z4
    sq = Subquotient(int_matrix([[1, 0], [0, 1]]), int_matrix([[2, 0], [0, 4]]))
    assert sq.group == AbelianGroup.parse("Z2+Z4")
    for k in range(sq.group.ngens):
        assert sq.coordinates(sq.representative(k)) == sq.group.generator(k)
    assert sq.coordinates(np.array([2, 4], dtype=object)).is_zero()


# --- Hom, 2-torção e extensões ---

@pytest.mark.parametrize("A, B, esperado", [
    ("Z^4", "Z2", "Z2^4"),
    ("Z4", "Z6", "Z2"),
    ("Z+Z4", "Z", "Z"),
    ("Z2", "Z", "0"),
    ("Z^2+Z4", "Z2", "Z2^3"),
])
def test_hom_group(A, B, esperado):
    assert hom_group(AbelianGroup.parse(A), AbelianGroup.parse(B)).label() == esperado


def test_two_torsion():
    G, inclusao = two_torsion(AbelianGroup.parse("Z+Z3+Z4+Z8"))
    assert G == AbelianGroup.parse("Z2^2")
    for k in range(G.ngens):
        assert (inclusao(G.generator(k)) * 2).is_zero()
        assert not inclusao(G.generator(k)).is_zero()


@pytest.mark.parametrize("quociente, sub, esperados", [
    ("Z4", "Z2", ["Z2+Z4", "Z8"]),
    ("Z2", "Z", ["Z", "Z+Z2"]),
    ("Z2", "Z2", ["Z2^2", "Z4"]),
    ("Z", "Z2", ["Z+Z2"]),
    ("Z3", "Z2", ["Z6"]),
    ("Z2", "0", ["Z2"]),
])
def test_extension_candidates(quociente, sub, esperados):
    candidatos = extension_candidates(AbelianGroup.parse(quociente), AbelianGroup.parse(sub))
    assert [g.label() for g in candidatos] == esperados


def test_extension_candidates_respeita_limite():
    with pytest.raises(UnsupportedError):
        extension_candidates(AbelianGroup.parse("Z2^3"), AbelianGroup.parse("Z2^3"), limit=100)


# --- Morfismos ---

def test_morfismo_reduz_e_compoe():
    f = GroupMorphism(Z, cyclic(4), [[6]])
    assert f(Z.generator(0)).coefficients == (2,)
    g = GroupMorphism(cyclic(4), cyclic(2), [[1]])
    h = compose(g, f)
    assert h.is_zero()
    assert compose(GroupMorphism.identity(cyclic(4)), f) == f


def test_morfismo_mal_definido():
    # Z2 -> Z4 só pode mandar o gerador em 0 ou 2
    GroupMorphism(cyclic(2), cyclic(4), [[2]])
    with pytest.raises(WellDefinednessError):
        GroupMorphism(cyclic(2), cyclic(4), [[1]])
    with pytest.raises(WellDefinednessError):
        GroupMorphism(cyclic(2), Z, [[1]])


def test_morfismo_formato_errado():
    with pytest.raises(MorphismMismatchError):
        GroupMorphism(Z, AbelianGroup.parse("Z^2"), int_matrix([[1, 0]]))
    with pytest.raises(MorphismMismatchError):
        compose(GroupMorphism.identity(Z), GroupMorphism.identity(cyclic(2)))


def test_hermite_reduce():
    diagonal_2_3 = int_matrix([[2, 0], [0, 3]])
    assert hermite_reduce(diagonal_2_3, np.array([5, 7], dtype=object)).tolist() == [1, 1]
    # ⟨(1, 1)⟩: a primeira coordenada vai a zero e a segunda fica determinada
    assert hermite_reduce(int_matrix([[1], [1]]), np.array([3, 5], dtype=object)).tolist() == [0, 2]
    assert hermite_reduce(int_matrix([[4, 6]]), np.array([9], dtype=object)).tolist() == [1]
    assert hermite_reduce(np.zeros((2, 0), dtype=object), np.array([-1, 4], dtype=object)).tolist() == [-1, 4]
