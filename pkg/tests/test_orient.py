# -*- coding: utf-8 -*-
import pytest

from app_logic.errors import (
    DescriptorError,
    MissingDataError,
    NonIntegralError,
    UndeterminedEntryError,
    UnsupportedError,
)
from app_logic.orient import (
    NO_FLAG_STRUCTURE,
    CharNumbers,
    bordism_coordinates,
    characteristic_numbers,
    check_index_tables,
    check_mod2_coherence,
    check_witnesses,
    condition_dagger,
    condition_star,
    flag_torsor_size,
    fueter_indices,
    functor_grid,
    in_kernel,
    index_sp,
    index_su,
    loop_xi_parity,
    orientable_for_all,
    orientable_grid,
    parse_class,
    parse_functor_id,
    pi1_on_class,
    pontrjagin_square_lifted,
)


def _dados(catalog, gerador, contexto):
    return catalog.generators[gerador].charnumbers(contexto)


# --- Índices ---

@pytest.mark.parametrize("m", range(2, 9))
def test_index_su(m, catalog):
    assert index_su(m, _dados(catalog, "zeta1_2", "bsum")) == -2 * m
    assert index_su(m, _dados(catalog, "zeta2", "bsum")) == 1
    assert index_su(m, _dados(catalog, "zeta3", "bsum")) == 0


@pytest.mark.parametrize("m", range(2, 9))
def test_index_sp(m, catalog):
    assert index_sp(m, _dados(catalog, "zeta1", "bspm")) == -4 * (m + 1)
    assert index_sp(m, _dados(catalog, "zeta2", "bspm")) == 1
    assert index_sp(m, _dados(catalog, "zeta2p", "bspm")) == 0


def test_index_exige_m_minimo(catalog):
    with pytest.raises(UnsupportedError):
        index_su(1, _dados(catalog, "zeta2", "bsum"))
    with pytest.raises(MissingDataError):
        index_su(3, CharNumbers("bsum", {"p1c2": 0}))
    with pytest.raises(NonIntegralError):
        index_su(2, CharNumbers("bsum", {"p1c2": 1, "c2sq": 0, "c4": 0}))


def test_fueter(catalog):
    assert fueter_indices(_dados(catalog, "zeta1_4", "mso4")) == (-1, -1, 0)
    assert fueter_indices(_dados(catalog, "zeta2", "mso4")) == (0, 1, 1)
    assert fueter_indices(_dados(catalog, "zeta3", "mso4")) == (0, 0, 0)


# --- Coordenadas ---

def test_coordenadas(catalog):
    familias = catalog.families
    assert bordism_coordinates(familias["sp_dim7"], _dados(catalog, "theta2", "sp")) == (0, -1)
    assert bordism_coordinates(familias["mu2_dim8"], _dados(catalog, "zeta1_2", "mu2")) == (1, 0, 0)
    assert bordism_coordinates(familias["kz4_dim8"], _dados(catalog, "zeta2", "kz4")) == (1, 0)
    with pytest.raises(NonIntegralError):
        bordism_coordinates(familias["kz4_dim8"], CharNumbers("kz4", {"alpha2": 1, "alpha_p1": 0}))
    with pytest.raises(DescriptorError):
        bordism_coordinates(familias["kz4_dim8"], _dados(catalog, "zeta2", "mu2"))


def test_testemunhas(catalog):
    assert check_witnesses(catalog.families, catalog.generators, catalog.witnesses) == []


# --- Variedades ---

def test_su3_falha_estrela_e_adaga(manifolds):
    su3 = manifolds["su3"]
    assert not condition_star(su3)
    assert not condition_dagger(su3)
    assert loop_xi_parity(su3, "b2") == (1, 0)
    assert flag_torsor_size(su3) == NO_FLAG_STRUCTURE
    assert flag_torsor_size(su3, "plain", dim=7).size == 2
    assert flag_torsor_size(su3, "natural_at_zero", dim=7).size == 1


def test_rp7_s1(manifolds):
    X = manifolds["rp7_s1"]
    assert condition_star(X) and condition_dagger(X)
    assert loop_xi_parity(X, "t^3", "t^3*s") == (0, 1)
    assert flag_torsor_size(X).size == 4
    assert flag_torsor_size(X, "natural_at_zero").size == 2
    assert flag_torsor_size(X, "factor_Z2").size == 4
    with pytest.raises(DescriptorError):
        loop_xi_parity(X, "t^4")


def test_hp2(manifolds):
    X = manifolds["hp2"]
    assert pontrjagin_square_lifted(X, "u") == 1
    plano = flag_torsor_size(X)
    assert plano.infinite and plano.size is None
    assert flag_torsor_size(X, "factor_Z2").size == 4
    assert flag_torsor_size(X, "factor_and_natural").size == 2
    assert flag_torsor_size(X, "additive", dim=7).size == 2
    with pytest.raises(UnsupportedError):
        flag_torsor_size(X, "additive")
    with pytest.raises(UnsupportedError):
        flag_torsor_size(X, "plain", dim=6)


def test_k3_s4(manifolds, catalog):
    X = manifolds["k3_s4"]
    dados = characteristic_numbers(X, "sigma")
    assert dados.values == {"alpha2": 0, "alpha_p1": 48}
    assert bordism_coordinates(catalog.families["kz4_dim8"], dados) == (0, 12)
    assert pontrjagin_square_lifted(X, "sigma") == 0
    assert pontrjagin_square_lifted(X, "kappa + sigma") == 2
    with pytest.raises(DescriptorError):
        characteristic_numbers(X, "tau")


# --- Functores de orientação ---

def test_parse_functor_id():
    ref = parse_functor_id("O84Z6_Spin4_minus")
    assert (ref.base, ref.coefficient, ref.dimension, ref.sign) == ("O84_Spin4_minus", 6, 8, "minus")
    assert parse_functor_id("N7Z5_SUm").coefficient == 5
    for invalido in ("N8Z3_SU2", "O84Z5_SO4_plus", "O74_SU2", "X9_SU2", "N7Z1_SU2"):
        with pytest.raises(DescriptorError):
            parse_functor_id(invalido)


def test_parse_class():
    assert parse_class("2*zeta2 - zeta2p") == {"zeta2": 2, "zeta2p": -1}
    assert parse_class("0") == {}
    with pytest.raises(DescriptorError):
        parse_class("zeta2/2")


def test_pi1_em_classes(catalog):
    assert pi1_on_class(catalog, "N7_SUm", "zeta1_2", m=5) == -10
    assert pi1_on_class(catalog, "N7Z4_SUm", "zeta1_2", m=5) == 2
    assert pi1_on_class(catalog, "N8Z4_SU2", "a1zeta2") == 1
    assert in_kernel(catalog, "N7Z2_SU2", "zeta1")
    with pytest.raises(MissingDataError):
        pi1_on_class(catalog, "N7_SUm", "zeta2")
    with pytest.raises(UndeterminedEntryError):
        pi1_on_class(catalog, "O84_SO4_plus", "eta")


def test_orientavel_para_toda_variedade(catalog):
    assert orientable_for_all(catalog, "N7Z2_E8")
    assert not orientable_for_all(catalog, "N7_E8")
    assert not orientable_for_all(catalog, "O84_SO4_zero")
    assert orientable_for_all(catalog, "N7Z2_SUm", m=6)


def _variantes(base, coeficientes):
    familia, resto = base.split("_", 1)
    return [base] + [f"{familia}Z{k}_{resto}" for k in coeficientes]


def test_grade_de_orientabilidade(catalog):
    pares = range(4, 17, 2)
    esperado = {
        "N7Z2_SU2", "N7Z2_SUm", "N7Z2_E8",
        "O74Z2_SO4_zero",
        "O74Z2_SU2_plus", "O74Z4_SU2_plus", "O74Z2_SU2_minus", "O74Z2_SU2_zero",
        "O74Z2_U2_plus", "O74Z2_U2_minus", "O74Z2_U2_zero",
        "O74Z2_Spin4_plus", "O74Z4_Spin4_plus", "O74Z2_Spin4_minus", "O74Z2_Spin4_zero",
    }
    esperado.update(_variantes("N8_SU2", pares))
    esperado.update(_variantes("O84_U2_plus", pares))
    for sinal in ("plus", "minus", "zero"):
        esperado.update(_variantes(f"O84_SU2_{sinal}", pares))
        esperado.update(_variantes(f"O84_Spin4_{sinal}", pares))
    assert set(orientable_grid(catalog)) == esperado
    assert len(functor_grid(catalog)) == 8 * len(catalog.functors)


def test_tabelas_conferem_com_indices(catalog):
    assert check_index_tables(catalog) == []
    assert check_mod2_coherence(catalog) == []
