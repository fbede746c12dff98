# -*- coding: utf-8 -*-
import pytest

from app_logic import descriptor_io
from app_logic.errors import DegreeOverflowError, DescriptorError, UnsupportedError
from app_logic.steenrod import (
    AdmissibleMonomial,
    Generator,
    GradedF2Algebra,
    adem_normalize,
    admissible_monomials,
    binomial_mod2,
    check_adem_relations,
    eilenberg_maclane_algebra,
    serre_basis,
    sq1_squares_to_zero,
    stiefel_whitney_algebra,
    total_square_is_multiplicative,
    wu_formula,
    wu_terms,
)


def _rotulos(base):
    return [I.label() for I in base]


# --- Base de Serre ---

def test_serre_basis_kz4():
    # ι₄, Sq²ι₄, Sq³ι₄, Sq⁴Sq²ι₄
    assert _rotulos(serre_basis(4, 10)) == ["1", "Sq2", "Sq3", "Sq4Sq2"]


def test_serre_basis_kz3():
    assert _rotulos(serre_basis(3, 9)) == ["1", "Sq2", "Sq4Sq2"]


def test_serre_basis_coeficientes_z2():
    base = _rotulos(serre_basis(3, 7, "Z2"))
    assert base == ["1", "Sq1", "Sq2", "Sq2Sq1", "Sq3Sq1"]


def test_serre_basis_argumentos_invalidos():
    with pytest.raises(ValueError):
        serre_basis(0, 5)
    with pytest.raises(UnsupportedError):
        serre_basis(3, 5, "Z3")


# --- Monômios admissíveis e Adem ---

def test_monomio_admissivel():
    I = AdmissibleMonomial((4, 2, 1))
    assert I.degree == 7 and I.excess == 1
    with pytest.raises(ValueError):
        AdmissibleMonomial((1, 2))


def test_admissiveis_de_grau_4():
    assert _rotulos(admissible_monomials(4)) == ["Sq3Sq1", "Sq4"]


@pytest.mark.parametrize("palavra, esperado", [
    ((1, 1), []),
    ((1, 2), ["Sq3"]),
    ((2, 2), ["Sq3Sq1"]),
    ((2, 3), ["Sq4Sq1", "Sq5"]),
    ((3, 2), []),
    ((2, 4), ["Sq5Sq1", "Sq6"]),
])
def test_adem_normalize(palavra, esperado):
    assert _rotulos(adem_normalize(palavra)) == esperado


def test_binomial_mod2():
    assert binomial_mod2(4, 2) == 0
    assert binomial_mod2(5, 1) == 1
    assert binomial_mod2(3, 5) == 0


# --- Fórmula de Wu ---

def test_wu_terms():
    assert wu_terms(1, 2) == [(3, 0), (2, 1)]
    assert wu_terms(1, 2, oriented=True) == [(3, 0)]
    assert wu_terms(2, 3, rank=4) == [(4, 1), (3, 2)]
    assert wu_terms(2, 3, rank=4, oriented=True) == [(3, 2)]
    with pytest.raises(ValueError):
        wu_terms(3, 3)


def test_wu_formula_bso4():
    assert str(wu_formula(2, 3, rank=4, oriented=True)) == "w2*w3"
    assert str(wu_formula(1, 2, rank=4, oriented=True)) == "w3"
    with pytest.raises(ValueError):
        wu_formula(3, 3)
    with pytest.raises(ValueError):
        wu_formula(4, 2, rank=4)


def test_algebra_stiefel_whitney():
    A = stiefel_whitney_algebra(4, cap=8, oriented=True)
    w2, w3 = A.gen("w2"), A.gen("w3")
    assert A.sq(2, w2) == w2 * w2
    assert A.sq(1, w3).is_zero()
    assert total_square_is_multiplicative(A, w2, w3)
    assert not check_adem_relations(A, 8)


# --- Álgebras embarcadas ---

def test_kz4_quadrados():
    A = descriptor_io.load_space("KZ4").algebra
    e4 = A.gen("e4")
    assert A.sq(1, e4).is_zero()
    assert str(A.sq(2, e4)) == "e6p"
    assert str(A.sq(3, e4)) == "e7"
    assert A.sq(4, e4) == e4 * e4
    # Sq¹Sq² = Sq³
    assert A.sq(1, A.gen("e6p")) == A.gen("e7")


def test_su_quadrados():
    A = descriptor_io.load_space("SU").algebra
    assert str(A.sq(2, A.gen("b2"))) == "b3"
    assert str(A.sq(4, A.gen("b3"))) == "b5"
    assert A.sq(2, A.gen("b2") * A.gen("b3")).is_zero()
    assert total_square_is_multiplicative(A, A.gen("b2"), A.gen("b3"))


@pytest.mark.parametrize("nome", descriptor_io.list_names("spaces"))
def test_adem_em_toda_algebra_embarcada(nome):
    A = descriptor_io.load_space(nome).algebra
    assert check_adem_relations(A, min(12, A.cap)) == []
    assert sq1_squares_to_zero(A)


def test_eilenberg_maclane_z2():
    A = eilenberg_maclane_algebra("K(Z2,2)", 2, 6, "Z2")
    i2 = A.gen("i2")
    assert str(A.sq(1, i2)) == "i2_1"
    assert A.sq(2, i2) == i2 * i2
    assert A.basis_names(4) == ["i2^2"]
    assert A.basis_names(5) == ["i2*i2_1", "i2_2_1"]
    assert str(A.sq(2, A.gen("i2_1"))) == "i2_2_1"


# --- Erros ---

def test_teto_de_grau():
    A = GradedF2Algebra("T", [Generator("x", 2)], cap=4)
    x = A.gen("x")
    assert str(x * x) == "x^2"
    with pytest.raises(DegreeOverflowError):
        x * x * x
    with pytest.raises(DegreeOverflowError):
        A.sq(3, x * x)


def test_geradores_invalidos():
    with pytest.raises(DescriptorError):
        Generator("y", 2, kind="truncated", height=1)
    with pytest.raises(DescriptorError):
        GradedF2Algebra("T", [Generator("x", 2)], cap=4, sq_table={"x": {2: "x^2"}})
    A = GradedF2Algebra("T", [Generator("x", 2)], cap=4)
    with pytest.raises(DescriptorError):
        A.parse("y")
