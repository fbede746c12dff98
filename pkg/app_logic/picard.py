# -*- coding: utf-8 -*-
"""
Grupoides de Picard como triplas classificadas (π₀, π₁, q) e o cálculo de
existência/contagem de funtores monoidais simétricos e isomorfismos naturais.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from app_logic.abgrp import (
    AbelianGroup,
    GroupMorphism,
    compose,
    from_presentation,
    hom_group,
)
from app_logic.config import get_logger
from app_logic.errors import MorphismMismatchError, UnsupportedError, WellDefinednessError
from app_logic.groupcoh import (
    Action,
    BilinearForm,
    Cochain,
    QuadraticMap,
    cohomology_class,
    difference_class,
    h2_sym,
    is_cocycle,
    skew_lift,
)

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class PicardGroupoid:
    pi0: AbelianGroup
    pi1: AbelianGroup
    q: QuadraticMap
    name: str = ""
    pi0_names: Tuple[str, ...] = ()
    pi1_names: Tuple[str, ...] = ()
    # quantos geradores iniciais de π₀ vêm do ponto (Ω_n(*) ⊕ reduzido)
    point_rank: int = 0

    def __post_init__(self):
        if (self.q.pi0, self.q.pi1) != (self.pi0, self.pi1):
            raise MorphismMismatchError(
                f"q definida em ({self.q.pi0}, {self.q.pi1}), esperado ({self.pi0}, {self.pi1}).")
        if not self.q.is_linear_quadratic():
            raise WellDefinednessError(f"{self.name or 'Picard'}: q não é linear-quadrática.")
        object.__setattr__(self, 'q', self.q.as_linear())

    @property
    def sigma(self) -> BilinearForm:
        """Simetria antissimétrica escolhida: o levantamento diagonal de q."""
        return skew_lift(self.q)

    def point_inclusion(self) -> GroupMorphism:
        """Inclusão dos primeiros `point_rank` geradores canônicos de π₀."""
        pt = AbelianGroup.from_cyclic(self.pi0.generator_orders[:self.point_rank])
        matriz = [[1 if i == j else 0 for j in range(self.point_rank)] for i in range(self.pi0.ngens)]
        return GroupMorphism(pt, self.pi0, matriz)

    def q_table(self) -> Dict[str, str]:
        """q nos geradores nomeados, como texto (para relatórios)."""
        saida = {}
        for k in range(self.pi0.ngens):
            nome = self.pi0_names[k] if k < len(self.pi0_names) else f"e{k}"
            saida[nome] = _format_element(self.q(self.pi0.generator(k)).coefficients, self.pi1_names)
        return saida


def _format_element(coords: Tuple[int, ...], names: Tuple[str, ...]) -> str:
    termos = []
    for k, c in enumerate(coords):
        if c:
            nome = names[k] if k < len(names) else f"e{k}"
            termos.append(nome if c == 1 else f"{c}{nome}")
    return " + ".join(termos) if termos else "0"


def bordism_picard(pi0: AbelianGroup, pi1: AbelianGroup, alpha1_mult: GroupMorphism,
                   name: str = "", pi0_names: Tuple[str, ...] = (), pi1_names: Tuple[str, ...] = (),
                   point_rank: int = 0) -> PicardGroupoid:
    """Tripla de um grupoide de bordismo: q é a multiplicação por α₁."""
    if (alpha1_mult.domain, alpha1_mult.codomain) != (pi0, pi1):
        raise MorphismMismatchError(
            f"Multiplicação por α₁ deve ir de {pi0.label()} em {pi1.label()}.")
    valores = []
    for k in range(pi0.ngens):
        imagem = alpha1_mult(pi0.generator(k))
        if not (imagem * 2).is_zero():
            raise WellDefinednessError(f"{name or 'bordism_picard'}: 2·q(e{k}) ≠ 0.")
        valores.append(imagem.coefficients)
    q = QuadraticMap(pi0, pi1, tuple(valores))
    logger.debug(f"[bordism_picard] {name}: π₀={pi0.label()}, π₁={pi1.label()}")
    return PicardGroupoid(pi0, pi1, q, name, tuple(pi0_names), tuple(pi1_names), point_rank)


# --- Funtores ---

def _check_pair(P: PicardGroupoid, P2: PicardGroupoid, f0: GroupMorphism, f1: GroupMorphism) -> None:
    if (f0.domain, f0.codomain) != (P.pi0, P2.pi0):
        raise MorphismMismatchError(f"f₀ deve ir de {P.pi0.label()} em {P2.pi0.label()}.")
    if (f1.domain, f1.codomain) != (P.pi1, P2.pi1):
        raise MorphismMismatchError(f"f₁ deve ir de {P.pi1.label()} em {P2.pi1.label()}.")


def functor_exists(P: PicardGroupoid, P2: PicardGroupoid, f0: GroupMorphism, f1: GroupMorphism) -> bool:
    """Existe funtor monoidal simétrico sobre (f₀, f₁) sse q′∘f₀ = f₁∘q."""
    _check_pair(P, P2, f0, f1)
    for k in range(P.pi0.ngens):
        e = P.pi0.generator(k)
        if P2.q(f0(e)) != f1(P.q(e)):
            return False
    return True


def _obstruction_form(P: PicardGroupoid, P2: PicardGroupoid, f0: GroupMorphism,
                      f1: GroupMorphism) -> BilinearForm:
    """(x, y) ↦ σ′(f₀x, f₀y) − f₁σ(x, y), nos geradores de π₀(P)."""
    s, s2 = P.sigma, P2.sigma
    n = P.pi0.ngens
    gens = [P.pi0.generator(k) for k in range(n)]
    valores = tuple(
        tuple((s2(f0(gens[i]), f0(gens[j])) - f1(s(gens[i], gens[j]))).coefficients for j in range(n))
        for i in range(n))
    return BilinearForm(P.pi0, P2.pi1, valores)


def _bilinear_cochain(form: BilinearForm) -> Cochain:
    return Cochain.from_function(2, form.pi0, form.pi1, lambda x, y: form(x, y))


@dataclass
class FunctorData:
    source: PicardGroupoid
    target: PicardGroupoid
    f0: GroupMorphism
    f1: GroupMorphism
    phi: Optional[Cochain] = field(default=None, repr=False)

    def __post_init__(self):
        _check_pair(self.source, self.target, self.f0, self.f1)
        if self.phi is None:
            return
        if (self.phi.degree, self.phi.pi0, self.phi.pi1) != (2, self.source.pi0, self.target.pi1):
            raise MorphismMismatchError("Testemunha φ deve ser 2-cocadeia π₀(P) → π₁(P′).")
        if not is_cocycle(self.phi):
            raise WellDefinednessError("Testemunha φ não é cociclo.")
        beta = _obstruction_form(self.source, self.target, self.f0, self.f1)
        for x in self.source.pi0.elements():
            for y in self.source.pi0.elements():
                if beta(x, y) != self.phi(x, y) - self.phi(y, x):
                    raise WellDefinednessError(
                        f"Testemunha φ viola σ′(f₀x,f₀y) − f₁σ(x,y) = φ(x,y) − φ(y,x) em "
                        f"x={x.coefficients}, y={y.coefficients}.")


def functor_witness(P: PicardGroupoid, P2: PicardGroupoid, f0: GroupMorphism, f1: GroupMorphism) -> FunctorData:
    """
    Um funtor concreto (f₀, f₁, φ) com φ bilinear triangular superior:
    φ(x, y) = Σ_{i<j} x_i y_j β(e_i, e_j) para a forma alternada β de obstrução.
    """
    if not functor_exists(P, P2, f0, f1):
        raise WellDefinednessError("Não existe funtor: q′∘f₀ ≠ f₁∘q.")
    beta = _obstruction_form(P, P2, f0, f1)
    n = P.pi0.ngens
    zero = (0,) * P2.pi1.ngens
    superior = BilinearForm(P.pi0, P2.pi1, tuple(
        tuple(beta.values[i][j] if i < j else zero for j in range(n)) for i in range(n)))
    return FunctorData(P, P2, f0, f1, _bilinear_cochain(superior))


def compose_functors(G: FunctorData, F: FunctorData) -> Tuple[GroupMorphism, GroupMorphism]:
    """Par (f₀, f₁) de G∘F."""
    if F.target is not G.source and (F.target.pi0, F.target.pi1) != (G.source.pi0, G.source.pi1):
        raise MorphismMismatchError("Funtores não componíveis.")
    return compose(G.f0, F.f0), compose(G.f1, F.f1)


def functor_torsor_group(P: PicardGroupoid, P2: PicardGroupoid) -> AbelianGroup:
    """Funtores sobre (f₀, f₁) fixos, a menos de iso, formam torsor sobre H²_sym(π₀(P), π₁(P′))."""
    return h2_sym(P.pi0, P2.pi1)


def nat_iso_torsor_group(P: PicardGroupoid, P2: PicardGroupoid) -> AbelianGroup:
    return hom_group(P.pi0, P2.pi1)


def nat_iso_torsor_group_restricted(P: PicardGroupoid, P2: PicardGroupoid,
                                    point_inclusion: Optional[GroupMorphism] = None) -> AbelianGroup:
    """Hom(coker(parte do ponto → π₀(P)), π₁(P′)): isos que comutam com os funtores do ponto."""
    inclusao = point_inclusion or P.point_inclusion()
    if inclusao.codomain != P.pi0:
        raise MorphismMismatchError("Inclusão do ponto deve terminar em π₀(P).")
    relacoes: List[List[int]] = []
    for k, m in enumerate(P.pi0.generator_orders):
        if m:
            linha = [0] * P.pi0.ngens
            linha[k] = m
            relacoes.append(linha)
    for j in range(inclusao.domain.ngens):
        relacoes.append([int(v) for v in inclusao.matrix[:, j]])
    coker = from_presentation(P.pi0.ngens, relacoes)
    return hom_group(coker, P2.pi1)


def monoidal_iso_exists(F: FunctorData, G: FunctorData) -> bool:
    """Existe iso monoidal F ⇒ G sse a classe-diferença [φ − γ] se anula."""
    if F.f0 != G.f0 or F.f1 != G.f1:
        raise MorphismMismatchError("Funtores com (f₀, f₁) distintos não admitem iso natural.")
    if F.phi is None or G.phi is None:
        raise UnsupportedError("monoidal_iso_exists exige testemunhas φ e γ.")
    _, anula = difference_class(F.phi, G.phi)
    return anula


# --- Grupos categóricos (π₀ finito) ---

@dataclass
class CategoricalGroup:
    pi0: AbelianGroup
    pi1: AbelianGroup
    alpha: Cochain
    action: Optional[Action] = field(default=None, repr=False)

    def __post_init__(self):
        if (self.alpha.degree, self.alpha.pi0, self.alpha.pi1) != (3, self.pi0, self.pi1):
            raise MorphismMismatchError("α deve ser 3-cocadeia π₀³ → π₁.")
        if self.action is not None and self.alpha.action is None:
            self.alpha = Cochain(3, self.pi0, self.pi1, self.alpha.values, self.action)
        if not is_cocycle(self.alpha):
            raise WellDefinednessError("α não é um 3-cociclo.")

    def act(self, x) -> GroupMorphism:
        if self.action is None:
            return GroupMorphism.identity(self.pi1)
        return self.action[x.coefficients]


def catgroup_functor_exists(G: CategoricalGroup, G2: CategoricalGroup,
                            f0: GroupMorphism, f1: GroupMorphism) -> bool:
    """Existe funtor monoidal sobre (f₀, f₁) sse (f₀)*[α′] = (f₁)*[α] em H³(π₀, π₁′)."""
    if (f0.domain, f0.codomain) != (G.pi0, G2.pi0) or (f1.domain, f1.codomain) != (G.pi1, G2.pi1):
        raise MorphismMismatchError("(f₀, f₁) incompatíveis com os grupos categóricos.")
    for x in G.pi0.elements():
        if compose(f1, G.act(x)) != compose(G2.act(f0(x)), f1):
            raise WellDefinednessError(
                f"Ações incompatíveis: f₁∘λ ≠ λ′∘(f₀×f₁) em x={x.coefficients}.")
    acao: Optional[Action] = None
    if G2.action is not None:
        acao = {x.coefficients: G2.act(f0(x)) for x in G.pi0.elements()}
    empurrado = Cochain.from_function(3, G.pi0, G2.pi1, lambda x, y, z: f1(G.alpha(x, y, z)), acao)
    puxado = Cochain.from_function(
        3, G.pi0, G2.pi1,
        lambda x, y, z: G2.alpha(f0(G.pi0.element(x)), f0(G.pi0.element(y)), f0(G.pi0.element(z))),
        acao)
    return cohomology_class(puxado - empurrado).is_zero()
