# -*- coding: utf-8 -*-
import math

import pytest

from app_logic.abgrp import Z, AbelianGroup, GroupMorphism, cyclic
from app_logic.errors import InfiniteGroupError, UnsupportedError, WellDefinednessError
from app_logic.groupcoh import (
    BilinearForm,
    Cochain,
    QuadraticMap,
    action_from_generators,
    alt_group,
    alternation,
    brute_force_h2_order,
    brute_force_is_coboundary,
    coboundary,
    cohomologous,
    cohomology_class,
    cohomology_group,
    diagonal_restriction,
    difference_class,
    h2_sym,
    h2_sym_closed_form,
    h2_sym_group,
    is_cocycle,
    psi_iso,
    skew_lift,
)

Z2 = cyclic(2)
Z4 = cyclic(4)


def _carry(m: int) -> Cochain:
    """Cociclo de 'vai um' de Z_m em Z2: 1 quando x + y ≥ m."""
    return Cochain.from_function(2, cyclic(m), Z2, lambda x, y: (1 if x[0] + y[0] >= m else 0,))


# --- H² contra contagem por força bruta ---

@pytest.mark.parametrize("m, coef", [(2, 2), (2, 4), (3, 2), (3, 4), (4, 2)])
def test_h2_confere_com_forca_bruta(m, coef):
    grupo, _ = cohomology_group(2, cyclic(m), cyclic(coef))
    assert grupo.order() == brute_force_h2_order(cyclic(m), cyclic(coef))


@pytest.mark.parametrize("m", range(1, 9))
@pytest.mark.parametrize("coef", [2, 4])
def test_h2_de_ciclico(m, coef):
    # H²(Z_m, Z_c) = Z_c / m Z_c
    grupo, reps = cohomology_group(2, cyclic(m), cyclic(coef))
    assert grupo == cyclic(math.gcd(m, coef))
    assert all(is_cocycle(r) for r in reps)


def test_h2_sym_ciclicos():
    for k in (1, 2, 3):
        assert h2_sym(cyclic(2 ** k), Z2) == Z2
    for p in (3, 5, 7):
        assert h2_sym(cyclic(p), Z2).is_trivial()


@pytest.mark.parametrize("pi0", ["Z", "Z^2", "Z^4"])
def test_h2_sym_de_livre_se_anula(pi0):
    assert h2_sym(AbelianGroup.parse(pi0), Z2).is_trivial()


def test_h2_sym_com_parte_livre():
    assert h2_sym(AbelianGroup.parse("Z^2+Z4"), Z2) == Z2
    with pytest.raises(UnsupportedError):
        h2_sym(Z, Z4)


@pytest.mark.parametrize("pi0", ["Z2", "Z4", "Z2^2", "Z6", "Z2+Z4", "Z8"])
def test_h2_sym_forma_fechada(pi0):
    G = AbelianGroup.parse(pi0)
    grupo, reps = h2_sym_group(G, Z2)
    assert grupo == h2_sym_closed_form(G)
    assert all(r.is_symmetric() and is_cocycle(r) for r in reps)


@pytest.mark.parametrize("pi0", ["Z2^2", "Z2+Z4", "Z4"])
def test_h2_e_sym_mais_alt(pi0):
    G = AbelianGroup.parse(pi0)
    h2, _ = cohomology_group(2, G, Z2)
    sym, _ = h2_sym_group(G, Z2)
    assert h2.order() == sym.order() * alt_group(G, Z2).order()


# --- Cocadeias e classes ---

def test_cociclo_de_vai_um_nao_e_cobordo():
    c = _carry(4)
    assert is_cocycle(c)
    assert not brute_force_is_coboundary(c)
    assert not cohomology_class(c).is_zero()


def test_cobordo_tem_classe_nula():
    f = Cochain.from_function(1, Z4, Z2, lambda x: (x[0] % 2,) if x[0] != 2 else (1,))
    b = coboundary(f)
    assert brute_force_is_coboundary(b)
    assert cohomology_class(b).is_zero()
    assert cohomologous(_carry(4), _carry(4) + b)


def test_difference_class():
    c = _carry(2)
    classe, anula = difference_class(c, Cochain.zero(2, Z2, Z2))
    assert not anula and not classe.is_zero()
    _, anula = difference_class(c, c)
    assert anula


def test_cocadeia_nao_normalizada():
    with pytest.raises(WellDefinednessError):
        Cochain(2, Z2, Z2, {((0,), (1,)): (1,)})


def test_cohomology_class_exige_cociclo():
    nao_cociclo = Cochain(2, Z4, Z2, {((1,), (1,)): (1,)})
    assert not is_cocycle(nao_cociclo)
    with pytest.raises(WellDefinednessError):
        cohomology_class(nao_cociclo)


def test_pi0_infinito_rejeitado():
    with pytest.raises(InfiniteGroupError):
        cohomology_group(2, Z, Z2)


def test_grau_alto_e_limite_de_tamanho():
    assert cohomology_group(3, Z2, Z2)[0] == Z2
    with pytest.raises(UnsupportedError):
        cohomology_group(4, Z2, Z2)
    with pytest.raises(UnsupportedError):
        cohomology_group(3, AbelianGroup.parse("Z2^4"), Z2)


def test_representante_lexicografico():
    # B²(Z4, Z2) é gerado por duas tabelas; o "vai um" é o primeiro cociclo da sua classe
    grupo, reps = cohomology_group(2, Z4, Z2)
    assert grupo == Z2
    assert reps[0].to_vector().tolist() == [0, 0, 1, 0, 1, 1, 1, 1, 1]
    assert reps[0].to_vector().tolist() == _carry(4).to_vector().tolist()
    assert cohomology_class(_carry(4)) == grupo.generator(0)


def test_pi0_trivial():
    grupo, reps = cohomology_group(2, AbelianGroup(), Z2)
    assert grupo.is_trivial() and reps == []


# --- Ação não trivial ---

def test_acao_por_sinal():
    menos = GroupMorphism(Z, Z, [[-1]])
    acao = action_from_generators(Z2, Z, [menos])
    assert cohomology_group(1, Z2, Z, acao)[0] == Z2
    assert cohomology_group(2, Z2, Z, acao)[0].is_trivial()
    # ação trivial: H¹ = 0 e H² = Z2
    assert cohomology_group(1, Z2, Z)[0].is_trivial()
    assert cohomology_group(2, Z2, Z)[0] == Z2


def test_acao_de_ordem_errada():
    tres = GroupMorphism(Z4, Z4, [[3]])
    with pytest.raises(WellDefinednessError):
        action_from_generators(cyclic(3), Z4, [tres])


# --- ψ e formas ---

def test_psi_iso_e_isomorfismo():
    grupo, reps = h2_sym_group(Z4, Z2)
    assert grupo == Z2
    psi = psi_iso(reps[0])
    assert not psi.is_zero()
    assert psi_iso(_carry(4))(psi.domain.generator(0)).coefficients == (1,)


def test_formas_bilineares():
    G = AbelianGroup.parse("Z2^2")
    um, zero = (1,), (0,)
    antissim = BilinearForm(G, Z2, ((um, um), (um, zero)))
    assert antissim.is_symmetric() and antissim.is_skew()
    assert not antissim.is_alternating()
    with pytest.raises(WellDefinednessError):
        BilinearForm(Z2, Z4, (((1,),),))


def test_quadratica_linear_e_levantamento():
    q = QuadraticMap(Z4, Z2, table={(1,): (1,), (2,): (0,), (3,): (1,)})
    assert q.is_linear_quadratic()
    assert q.as_linear().generator_values == ((1,),)
    assert diagonal_restriction(skew_lift(q)) == q


def test_quadratica_nao_linear():
    quadrado = QuadraticMap(Z4, Z4, table={(x,): (x * x,) for x in range(4)})
    assert not quadrado.is_linear_quadratic()
    assert quadrado.polarization((1,), (1,)).coefficients == (2,)
    with pytest.raises(WellDefinednessError):
        quadrado.as_linear()


def test_alternacao_de_cociclo_bilinear():
    G = AbelianGroup.parse("Z2^2")
    F = Cochain.from_function(2, G, Z2, lambda x, y: (x[0] * y[1],))
    alt = alternation(F)
    assert alt.is_alternating() and not alt.is_zero()
    assert alt_group(G, Z2) == Z2
