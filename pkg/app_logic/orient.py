# -*- coding: utf-8 -*-
"""
Números característicos, coordenadas de bordismo, fórmulas de índice e as
decisões de orientabilidade e de estruturas de bandeira.

As fórmulas racionais ficam em data/families como texto para o sympy; toda
avaliação é exata e um valor não inteiro é erro de dados, nunca arredondado.
"""
import itertools
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy
from sympy.parsing.sympy_parser import parse_expr

from app_logic.abgrp import AbelianGroup, cyclic, hom_group
from app_logic.config import get_logger
from app_logic.errors import (
    DescriptorError,
    MissingDataError,
    NonIntegralError,
    UndeterminedEntryError,
    UnsupportedError,
)
from app_logic.spaces import gf2_rank, gf2_span_basis
from app_logic.steenrod import F2Element, GradedF2Algebra

logger = get_logger(__name__)

# nomes de exibição dos geradores com dados próprios
GENERATOR_DISPLAY = {
    "delta": "δ", "epsilon": "ε", "zeta1": "ζ₁", "zeta1_2": "ζ₁/2", "zeta1_4": "ζ₁/4",
    "zeta2": "ζ₂", "zeta2p": "ζ₂′", "zeta3": "ζ₃", "eta": "η",
    "a1zeta2": "α₁ζ₂", "a1zeta2p": "α₁ζ₂′", "a1zeta1_4": "α₁ζ₁/4",
    "rho": "ρ", "varsigma": "ς", "theta1": "ϑ₁", "theta1_2": "ϑ₁/2",
    "theta2": "ϑ₂", "theta3": "ϑ₃", "upsilon": "υ",
}

FUNCTOR_ID = re.compile(r'^(N7|N8|O74|O84)(Z(\d+))?_(SU2|SUm|Spm|E8|SO4|U2|Spin4)(?:_(plus|minus|zero))?$')

UNDETERMINED = "?"


def _integral(valor: sympy.Expr, contexto: str) -> int:
    valor = sympy.nsimplify(valor)
    if not valor.is_integer:
        raise NonIntegralError(f"{contexto}: valor {valor} não é inteiro.")
    return int(valor)


# --- Números característicos e famílias de fórmulas ---

@dataclass(frozen=True)
class CharNumbers:
    """Integrais rotuladas de um representante num contexto (família de dados)."""
    context: str
    values: Dict[str, int]

    def __getitem__(self, label: str) -> int:
        if label not in self.values:
            raise MissingDataError(f"Número característico '{label}' ausente no contexto '{self.context}'.")
        return self.values[label]

    def require(self, labels: Iterable[str]) -> None:
        faltando = [l for l in labels if l not in self.values]
        if faltando:
            raise MissingDataError(f"Contexto '{self.context}': faltam {', '.join(faltando)}.")

    def as_tuple(self, labels: Sequence[str]) -> Tuple[int, ...]:
        self.require(labels)
        return tuple(self.values[l] for l in labels)


@dataclass
class GeneratorClass:
    name: str
    data: Dict[str, CharNumbers] = field(default_factory=dict)
    title: str = ""

    @property
    def display(self) -> str:
        return self.title or GENERATOR_DISPLAY.get(self.name, self.name)

    def charnumbers(self, context: str) -> CharNumbers:
        if context not in self.data:
            raise MissingDataError(f"Gerador '{self.name}' sem dados no contexto '{context}'.")
        return self.data[context]


@dataclass
class FormulaFamily:
    """
    Isomorfismo explícito Ω̃_n(T) → Z^k (ou Z_m quando `modulus` > 0): uma
    fórmula racional por coordenada, nos rótulos de `labels`.
    """
    id: str
    context: str
    degree: int
    labels: List[str]
    formulas: List[str]
    modulus: int = 0
    title: str = ""

    def __post_init__(self):
        self._symbols = {l: sympy.Symbol(l) for l in self.labels}
        try:
            self._exprs = [parse_expr(f, local_dict=dict(self._symbols)) for f in self.formulas]
        except (SyntaxError, TypeError, sympy.SympifyError) as e:
            raise DescriptorError(f"Família '{self.id}': fórmula inválida ({e}).")
        for expr in self._exprs:
            estranhos = {str(s) for s in expr.free_symbols} - set(self.labels)
            if estranhos:
                raise DescriptorError(f"Família '{self.id}': símbolos fora de labels: {sorted(estranhos)}.")

    def evaluate(self, data: CharNumbers) -> Tuple[int, ...]:
        data.require(self.labels)
        valores = {self._symbols[l]: sympy.Integer(data[l]) for l in self.labels}
        saida = []
        for k, expr in enumerate(self._exprs):
            v = _integral(expr.subs(valores), f"{self.id}[{k}]")
            saida.append(v % self.modulus if self.modulus else v)
        return tuple(saida)


def bordism_coordinates(family: FormulaFamily, data: CharNumbers) -> Tuple[int, ...]:
    if data.context != family.context:
        raise DescriptorError(
            f"Família '{family.id}' usa o contexto '{family.context}', dados de '{data.context}'.")
    return family.evaluate(data)


@dataclass(frozen=True)
class Witness:
    generator: str
    family: str
    expected: Tuple[int, ...]


def check_witnesses(families: Dict[str, FormulaFamily], generators: Dict[str, GeneratorClass],
                    witnesses: Sequence[Witness]) -> List[str]:
    """Divergências entre as coordenadas calculadas e as esperadas (vazia se tudo confere)."""
    problemas = []
    for w in witnesses:
        if w.family not in families:
            problemas.append(f"{w.generator}: família '{w.family}' inexistente")
            continue
        familia = families[w.family]
        try:
            valor = bordism_coordinates(familia, generators[w.generator].charnumbers(familia.context))
        except (KeyError, MissingDataError, NonIntegralError) as e:
            problemas.append(f"{w.generator} em {w.family}: {e}")
            continue
        if valor != tuple(w.expected):
            problemas.append(f"{w.generator} em {w.family}: {valor} ≠ {tuple(w.expected)}")
    return problemas


# --- Fórmulas de índice ---

def index_su(m: int, data: CharNumbers) -> int:
    """Índice do Dirac torcido por Ad(P), P um SU(m)-fibrado: (∫p₁c₂, ∫c₂², ∫c₄)."""
    if m < 2:
        raise UnsupportedError(f"index_su exige m ≥ 2 (recebido {m}).")
    p1c2, c2sq, c4 = data.as_tuple(("p1c2", "c2sq", "c4"))
    m_ = sympy.Integer(m)
    valor = m_ / 12 * p1c2 + (m_ + 6) / 6 * c2sq - m_ / 3 * c4
    return _integral(valor, f"index_su(m={m})")


def index_sp(m: int, data: CharNumbers) -> int:
    """Mesmo índice para Sp(m), com c₂ = −q₁ e c₄ = q₂ nos dados (∫p₁q₁, ∫q₁², ∫q₂)."""
    if m < 2:
        raise UnsupportedError(f"index_sp exige m ≥ 2 (recebido {m}).")
    p1q1, q1sq, q2 = data.as_tuple(("p1q1", "q1sq", "q2"))
    p1c2, c2sq, c4 = -p1q1, q1sq, q2
    m_ = sympy.Integer(m)
    valor = (m_ + 1) / 12 * p1c2 + (m_ + 7) / 6 * c2sq - (m_ + 4) / 3 * c4
    return _integral(valor, f"index_sp(m={m})")


def fueter_indices(data: CharNumbers) -> Tuple[int, int, int]:
    """(O⁺, O⁻, O⁰) de uma 4-subvariedade a partir de (∫p₁(TN), ∫e(ν), ∫p₁(ν))."""
    p1, e, p1nu = (sympy.Integer(v) for v in data.as_tuple(("p1_tm", "euler_nu", "p1_nu")))
    mais = _integral(p1 / 12 - e / 2 - p1nu / 4, "O+")
    menos = _integral(p1 / 12 + e / 2 - p1nu / 4, "O-")
    zero = int(e)
    if zero != menos - mais:
        raise NonIntegralError(f"O⁰ = {zero} ≠ O⁻ − O⁺ = {menos - mais}.")
    return mais, menos, zero


# --- Descritores de variedades ---

@dataclass
class IntegralDegree:
    degree: int
    # (nome, ordem); ordem 0 = Z
    classes: List[Tuple[str, int]] = field(default_factory=list)
    # nome -> expressão da redução mod 2 na álgebra Z₂
    rho2: Dict[str, str] = field(default_factory=dict)

    @property
    def group(self) -> AbelianGroup:
        return AbelianGroup.from_cyclic(o for _, o in self.classes)

    @property
    def names(self) -> List[str]:
        return [n for n, _ in self.classes]


@dataclass
class ManifoldDescriptor:
    """
    Variedade spin compacta X dada por H*(X, Z₂) (com Sq), a classe
    fundamental mod 2, os grupos H^k(X, Z) com ρ₂ e, em dimensão 8, a forma
    de interseção em H⁴(X, Z) e p₁(TX).
    """
    name: str
    dimension: int
    algebra: Optional[GradedF2Algebra]
    fundamental: Optional[str]
    integral: Dict[int, IntegralDegree] = field(default_factory=dict)
    # matriz de ∫ x∪y nas classes de H⁴ (torção com entradas nulas)
    form: Optional[List[List[int]]] = None
    p1: Optional[List[int]] = None
    signature: Optional[int] = None
    title: str = ""

    def __post_init__(self):
        if self.algebra is not None:
            if not self.fundamental:
                raise DescriptorError(f"{self.name}: álgebra Z₂ sem classe fundamental.")
            topo = self.algebra.parse(self.fundamental)
            if len(topo.terms) != 1 or topo.degrees() != [self.dimension]:
                raise DescriptorError(f"{self.name}: classe fundamental '{self.fundamental}' fora do grau {self.dimension}.")
            self._top = next(iter(topo.terms))
        h4 = self.integral.get(4)
        if self.form is not None:
            k = len(h4.classes) if h4 else 0
            M = np.array(self.form, dtype=object).reshape(k, k) if k else np.zeros((0, 0), dtype=object)
            if (M != M.T).any():
                raise DescriptorError(f"{self.name}: forma de interseção não simétrica.")
            self._form = M
        if self.p1 is not None and (h4 is None or len(self.p1) != len(h4.classes)):
            raise DescriptorError(f"{self.name}: p₁ com {len(self.p1)} coordenadas para H⁴ com "
                                  f"{len(h4.classes) if h4 else 0} classes.")

    def h(self, k: int) -> IntegralDegree:
        return self.integral.get(k, IntegralDegree(k))

    def _require_algebra(self) -> GradedF2Algebra:
        if self.algebra is None:
            raise MissingDataError(f"{self.name}: sem dados de H*(X, Z₂) e Sq.")
        return self.algebra

    def integrate_z2(self, x: F2Element) -> int:
        """∫_X x ∈ Z₂: coeficiente do monômio fundamental."""
        self._require_algebra()
        return 1 if self._top in x.terms else 0

    def z2_basis(self, k: int) -> List[str]:
        algebra = self._require_algebra()
        return algebra.basis_names(k) if k <= algebra.cap else []

    def z2_elements(self, k: int) -> List[F2Element]:
        algebra = self._require_algebra()
        base = algebra.basis(k) if k <= algebra.cap else []
        saida = []
        for coef in itertools.product((0, 1), repeat=len(base)):
            saida.append(algebra.element({m for m, c in zip(base, coef) if c}))
        return saida

    def rho2_image(self, k: int) -> List[F2Element]:
        """Todos os elementos de ρ₂(H^k(X, Z)) ⊆ H^k(X, Z₂)."""
        algebra = self._require_algebra()
        grau = self.h(k)
        base = algebra.basis(k) if k <= algebra.cap else []
        if not base:
            return [algebra.zero()]
        vetores = []
        for nome, _ in grau.classes:
            expr = grau.rho2.get(nome, "0")
            vetores.append(algebra.coordinates(algebra.parse(expr), k))
        M = np.array(vetores, dtype=np.uint8).reshape(len(vetores), len(base))
        geradores = gf2_span_basis(M, len(base)) if len(vetores) else np.zeros((0, len(base)), dtype=np.uint8)
        saida = []
        for coef in itertools.product((0, 1), repeat=geradores.shape[0]):
            v = np.zeros(len(base), dtype=np.uint8)
            for c, linha in zip(coef, geradores):
                if c:
                    v ^= linha
            saida.append(algebra.element({m for m, c in zip(base, v) if c}))
        return saida

    def rho2_rank(self, k: int) -> int:
        algebra = self._require_algebra()
        grau = self.h(k)
        base = algebra.basis(k) if k <= algebra.cap else []
        if not base or not grau.classes:
            return 0
        vetores = [algebra.coordinates(algebra.parse(grau.rho2.get(n, "0")), k) for n, _ in grau.classes]
        return gf2_rank(np.array(vetores, dtype=np.uint8))

    def h4_vector(self, x: Union[str, Sequence[int]]) -> np.ndarray:
        """Coordenadas de uma classe inteira de H⁴ dada como 'k*u + v' ou lista."""
        nomes = self.h(4).names
        if not isinstance(x, str):
            if len(x) != len(nomes):
                raise DescriptorError(f"{self.name}: vetor de H⁴ com {len(x)} entradas (esperado {len(nomes)}).")
            return np.array([int(c) for c in x], dtype=object)
        simbolos = {n: sympy.Symbol(n) for n in nomes}
        expr = sympy.expand(parse_expr(x, local_dict=dict(simbolos))) if x.strip() not in ("", "0") else sympy.Integer(0)
        estranhos = {str(s) for s in expr.free_symbols} - set(nomes)
        if estranhos:
            raise DescriptorError(f"{self.name}: {sorted(estranhos)} não são classes de H⁴(X, Z).")
        return np.array([int(expr.coeff(simbolos[n])) for n in nomes], dtype=object)


def characteristic_numbers(X: ManifoldDescriptor, alpha: Union[str, Sequence[int]]) -> CharNumbers:
    """(∫α, ∫α², ∫α∪p₁(TX)) de [X, α] em K(Z,4): contexto 'kz4'."""
    if X.dimension != 8 or X.form is None or X.p1 is None:
        raise MissingDataError(f"{X.name}: exige dimensão 8 com forma de interseção e p₁.")
    v = X.h4_vector(alpha)
    Q = X._form
    return CharNumbers("kz4", {
        "alpha2": int(v.dot(Q).dot(v)),
        "alpha_p1": int(v.dot(Q).dot(np.array(X.p1, dtype=object))),
    })


def pontrjagin_square_lifted(X: ManifoldDescriptor, x: Union[str, Sequence[int]]) -> int:
    """∫_X P(ρ₂x̃) = ∫ x̃∪x̃ mod 4 para um levantamento inteiro x̃ ∈ H⁴(X, Z)."""
    if X.dimension != 8:
        raise UnsupportedError(f"{X.name}: quadrado de Pontrjagin exige dimensão 8 (é {X.dimension}).")
    if X.form is None:
        raise MissingDataError(f"{X.name}: sem forma de interseção em H⁴.")
    v = X.h4_vector(x)
    return int(v.dot(X._form).dot(v)) % 4


def _parity(X: ManifoldDescriptor, a: F2Element) -> int:
    algebra = X._require_algebra()
    return X.integrate_z2(a * algebra.sq(2, a))


def loop_xi_parity(X: ManifoldDescriptor, beta: Union[str, F2Element],
                   gamma: Union[str, F2Element, None] = None) -> Tuple[int, int]:
    """
    Invariantes de [X × S¹, β̄⊠[S¹] + γ̄⊠1]: (∫β̄∪Sq²β̄, ∫Sq¹β̄∪γ̄), com β̄ em
    H³(X, Z₂) e γ̄ em H⁴(X, Z₂).
    """
    if X.dimension != 8:
        raise UnsupportedError(f"{X.name}: paridade exige dimensão 8.")
    algebra = X._require_algebra()
    b = algebra.parse(beta) if isinstance(beta, str) else beta
    g = algebra.zero() if gamma is None else (algebra.parse(gamma) if isinstance(gamma, str) else gamma)
    for elem, grau in ((b, 3), (g, 4)):
        if not elem.is_zero() and elem.degrees() != [grau]:
            raise DescriptorError(f"{X.name}: classe {elem} fora do grau {grau}.")
    primeira = _parity(X, b)
    segunda = X.integrate_z2(algebra.sq(1, b) * g)
    return primeira, segunda


def condition_star(X: ManifoldDescriptor) -> bool:
    """Não existe α ∈ H³(X, Z) com ∫ᾱ∪Sq²ᾱ = 1."""
    return not any(_parity(X, a) for a in X.rho2_image(3))


def condition_dagger(X: ManifoldDescriptor) -> bool:
    """Não existe ᾱ ∈ H³(X, Z₂) com ∫ᾱ∪Sq²ᾱ = 1."""
    return not any(_parity(X, a) for a in X.z2_elements(3))


# --- Estruturas de bandeira ---

FLAG_VARIANTS = ("plain", "natural_at_zero", "factor_Z2", "factor_and_natural", "additive")


@dataclass(frozen=True)
class TorsorSize:
    """Cardinal 2^exponent do torsor; `infinite` quando o conjunto índice é infinito."""
    exists: bool
    exponent: Optional[int] = None
    infinite: bool = False
    group: str = ""

    @property
    def size(self) -> Optional[int]:
        if not self.exists or self.infinite:
            return None
        return 2 ** self.exponent

    def label(self) -> str:
        if not self.exists:
            return "sem estrutura de bandeira"
        if self.infinite:
            return f"2^|{self.group}| (infinito)"
        return str(self.size)


NO_FLAG_STRUCTURE = TorsorSize(False)


def flag_torsor_size(X: ManifoldDescriptor, variant: str = "plain", dim: Optional[int] = None) -> TorsorSize:
    """
    Tamanho do torsor de estruturas de bandeira. Em dimensão 8 a existência
    depende de (*) (ou de (†) quando fatora por Z₂); em dimensão 7 sempre existem.
    """
    n = dim if dim is not None else X.dimension
    if variant not in FLAG_VARIANTS:
        raise UnsupportedError(f"Variante desconhecida '{variant}'.")
    if n not in (7, 8):
        raise UnsupportedError(f"Estruturas de bandeira só em dimensão 7 ou 8 (recebido {n}).")
    h4 = X.h(4).group
    fatora = variant in ("factor_Z2", "factor_and_natural")
    if n == 8:
        if variant == "additive":
            raise UnsupportedError("Não há variante aditiva em dimensão 8.")
        existe = condition_dagger(X) if fatora else condition_star(X)
        if not existe:
            logger.info(f"[flag_torsor_size] {X.name}: condição {'(†)' if fatora else '(*)'} falha.")
            return NO_FLAG_STRUCTURE
    if variant == "additive":
        return TorsorSize(True, int(hom_group(h4, cyclic(2)).order()).bit_length() - 1, group="Hom(H⁴(X,Z),Z₂)")
    natural = variant in ("natural_at_zero", "factor_and_natural")
    if fatora:
        indice = 2 ** X.rho2_rank(4)
        nome = "Im(H⁴(X,Z)→H⁴(X,Z₂))"
    else:
        if not h4.is_finite():
            nome = "H⁴(X,Z)∖{0}" if natural else "H⁴(X,Z)"
            return TorsorSize(True, None, True, nome)
        indice = int(h4.order())
        nome = "H⁴(X,Z)"
    if natural:
        return TorsorSize(True, indice - 1, group=f"{nome}∖{{0}}")
    return TorsorSize(True, indice, group=nome)


# --- Functores de orientação ---

@dataclass
class FunctorTable:
    """π₁ de um functor de orientação nos geradores de Ω̃_{n+1}; valores podem depender de m."""
    id: str
    dimension: int
    group: str
    space: str
    values: Dict[str, str]
    title: str = ""
    context: str = ""
    index: str = ""
    m_range: Tuple[int, int] = (0, 0)
    fueter: bool = False

    def __post_init__(self):
        match = FUNCTOR_ID.match(self.id)
        if not match or match.group(2):
            raise DescriptorError(f"Id de tabela de functor inválido: '{self.id}' (sem sufixo de coeficiente).")
        self._m = sympy.Symbol("m")
        self._exprs: Dict[str, Optional[sympy.Expr]] = {}
        for gen, texto in self.values.items():
            texto = str(texto).strip()
            self._exprs[gen] = None if texto == UNDETERMINED else parse_expr(texto, local_dict={"m": self._m})

    @property
    def parametric(self) -> bool:
        return any(e is not None and e.free_symbols for e in self._exprs.values())

    def m_values(self) -> List[int]:
        a, b = self.m_range
        return list(range(a, b + 1)) if a else [0]

    def value(self, generator: str, m: Optional[int] = None) -> int:
        if generator not in self._exprs:
            raise MissingDataError(f"{self.id}: π₁ não tabelado em '{generator}'.")
        expr = self._exprs[generator]
        if expr is None:
            raise UndeterminedEntryError(f"{self.id}: π₁({generator}) indeterminado na tabela.", ["0", "1"])
        if expr.free_symbols:
            if m is None:
                raise MissingDataError(f"{self.id}: valor em '{generator}' depende de m.")
            expr = expr.subs(self._m, m)
        return _integral(expr, f"{self.id}({generator})")


@dataclass(frozen=True)
class FunctorRef:
    id: str
    base: str
    coefficient: int  # 0 = Z
    family: str
    group: str
    sign: Optional[str]

    @property
    def dimension(self) -> int:
        return 7 if self.family in ("N7", "O74") else 8


def parse_functor_id(functor_id: str) -> FunctorRef:
    match = FUNCTOR_ID.match(functor_id)
    if not match:
        raise DescriptorError(f"Id de functor inválido: '{functor_id}'.")
    familia, _, k, grupo, sinal = match.groups()
    coef = int(k) if k else 0
    if k and coef < 2:
        raise DescriptorError(f"{functor_id}: coeficiente Z_{coef} inválido.")
    if familia in ("N8", "O84") and coef % 2:
        raise DescriptorError(f"{functor_id}: em dimensão 8 o coeficiente é Z_2k.")
    if familia in ("O74", "O84") and sinal is None:
        raise DescriptorError(f"{functor_id}: functores de Fueter exigem plus/minus/zero.")
    base = f"{familia}_{grupo}" + (f"_{sinal}" if sinal else "")
    return FunctorRef(functor_id, base, coef, familia, grupo, sinal)


def parse_class(expression: str) -> Dict[str, int]:
    """Soma formal de geradores: '2*zeta2 - zeta2p' -> {'zeta2': 2, 'zeta2p': -1}."""
    texto = expression.strip()
    if texto in ("", "0"):
        return {}
    nomes = set(re.findall(r'[A-Za-z_][A-Za-z0-9_]*', texto))
    simbolos = {n: sympy.Symbol(n) for n in nomes}
    expr = sympy.expand(parse_expr(texto, local_dict=dict(simbolos)))
    saida = {}
    for n, s in simbolos.items():
        c = expr.coeff(s)
        if not c.is_integer:
            raise DescriptorError(f"Classe '{expression}': coeficiente de {n} não inteiro.")
        if c:
            saida[n] = int(c)
    if sympy.expand(expr - sum(c * simbolos[n] for n, c in saida.items())) != 0:
        raise DescriptorError(f"Classe '{expression}' não é combinação linear de geradores.")
    return saida


@dataclass
class OrientCatalog:
    families: Dict[str, FormulaFamily]
    generators: Dict[str, GeneratorClass]
    functors: Dict[str, FunctorTable]
    # espaço -> grau -> geradores de Im ξ̂
    xi_images: Dict[str, Dict[int, List[str]]]
    witnesses: List[Witness] = field(default_factory=list)

    def table(self, ref: FunctorRef) -> FunctorTable:
        if ref.base not in self.functors:
            raise MissingDataError(f"Tabela de π₁ ausente para '{ref.base}'.")
        return self.functors[ref.base]

    def xi(self, space: str, degree: int) -> List[str]:
        if space not in self.xi_images:
            raise MissingDataError(f"Im ξ̂ sem dados para o espaço '{space}'.")
        return list(self.xi_images[space].get(degree, []))


def _reduce(ref: FunctorRef, valor: int) -> int:
    # em dimensão 8, π₁ cai em Z₂ para qualquer Z_2k
    if ref.dimension == 8:
        return valor % 2
    return valor % ref.coefficient if ref.coefficient else valor


def pi1_on_class(catalog: OrientCatalog, functor_id: str, cls: Union[str, Dict[str, int]],
                 m: Optional[int] = None) -> int:
    """Extensão linear da tabela de π₁ a uma soma formal de geradores, reduzida no coeficiente."""
    ref = parse_functor_id(functor_id)
    tabela = catalog.table(ref)
    termos = parse_class(cls) if isinstance(cls, str) else dict(cls)
    if tabela.parametric and m is None:
        raise MissingDataError(f"{functor_id}: informe m ({tabela.m_range[0]}..{tabela.m_range[1]}).")
    total = sum(c * tabela.value(g, m) for g, c in termos.items() if c)
    return _reduce(ref, total)


def in_kernel(catalog: OrientCatalog, functor_id: str, cls: Union[str, Dict[str, int]],
              m: Optional[int] = None) -> bool:
    """Uma classe [X, Q] de coordenadas conhecidas está em Ker π₁(O)?"""
    return pi1_on_class(catalog, functor_id, cls, m) == 0


def orientable_for_all(catalog: OrientCatalog, functor_id: str, m: Optional[int] = None) -> bool:
    """
    O é orientável para toda X sse Im ξ̂ ⊆ Ker π₁(O). Entradas indeterminadas
    só decidem quando nenhum gerador determinado já dá valor não nulo.
    """
    ref = parse_functor_id(functor_id)
    tabela = catalog.table(ref)
    geradores = catalog.xi(tabela.space, ref.dimension + 1)
    valores_m = [m] if m is not None else (tabela.m_values() if tabela.parametric else [None])
    pendentes: List[str] = []
    for mm in valores_m:
        for g in geradores:
            try:
                if pi1_on_class(catalog, functor_id, g, mm) != 0:
                    logger.debug(f"[orientable_for_all] {functor_id}: π₁({g}) ≠ 0 (m={mm}).")
                    return False
            except UndeterminedEntryError:
                pendentes.append(g)
    if pendentes:
        raise UndeterminedEntryError(
            f"{functor_id}: veredito depende de entradas indeterminadas ({', '.join(sorted(set(pendentes)))}).",
            ["orientável", "não orientável"])
    return True


def functor_grid(catalog: OrientCatalog, k_values: Iterable[int] = range(2, 9)) -> List[str]:
    """Ids de todo functor × coeficiente: Z e Z_k (dimensão 7) ou Z_2k (dimensão 8)."""
    ks = list(k_values)
    ids = []
    for base, tabela in sorted(catalog.functors.items()):
        familia, resto = base.split("_", 1)
        ids.append(base)
        for k in ks:
            coef = k if tabela.dimension == 7 else 2 * k
            ids.append(f"{familia}Z{coef}_{resto}")
    return ids


def orientable_grid(catalog: OrientCatalog, k_values: Iterable[int] = range(2, 9)) -> List[str]:
    """Conjunto dos functores orientáveis para toda variedade na grade."""
    saida = []
    for fid in functor_grid(catalog, k_values):
        try:
            if orientable_for_all(catalog, fid):
                saida.append(fid)
        except UndeterminedEntryError as e:
            logger.warning(f"[orientable_grid] {fid}: {e}")
    return sorted(saida)


# --- Verificações cruzadas ---

def check_index_tables(catalog: OrientCatalog) -> List[str]:
    """Fórmulas de índice e de Fueter recalculadas contra as tabelas de π₁."""
    problemas = []
    for base, tabela in sorted(catalog.functors.items()):
        if tabela.dimension != 7 or not (tabela.index or tabela.fueter):
            continue
        for gen in tabela.values:
            if tabela.values[gen].strip() == UNDETERMINED:
                continue
            dados = catalog.generators[gen].charnumbers(tabela.context)
            if tabela.fueter:
                mais, menos, zero = fueter_indices(dados)
                calculado = {"plus": mais, "minus": menos, "zero": zero}[base.rsplit("_", 1)[1]]
                if calculado != tabela.value(gen):
                    problemas.append(f"{base}({gen}): Fueter dá {calculado}, tabela {tabela.value(gen)}")
                continue
            for m in tabela.m_values():
                formula = index_su if tabela.index == "su" else index_sp
                calculado = formula(m, dados)
                if calculado != tabela.value(gen, m):
                    problemas.append(f"{base}({gen}, m={m}): índice {calculado}, tabela {tabela.value(gen, m)}")
    return problemas


def check_mod2_coherence(catalog: OrientCatalog) -> List[str]:
    """π₁ em dimensão 8 sobre α₁·g coincide com π₁ em dimensão 7 sobre g, mod 2."""
    problemas = []
    for base, tabela in sorted(catalog.functors.items()):
        if tabela.dimension != 8:
            continue
        familia, resto = base.split("_", 1)
        par = catalog.functors.get({"N8": "N7", "O84": "O74"}[familia] + "_" + resto)
        if par is None:
            continue
        for gen, texto in tabela.values.items():
            if not gen.startswith("a1") or texto.strip() == UNDETERMINED:
                continue
            g7 = gen[2:]
            if g7 not in par.values:
                continue
            for m in (par.m_values() if par.parametric else [None]):
                if par.value(g7, m) % 2 != tabela.value(gen, m) % 2:
                    problemas.append(f"{base}({gen}) ≠ {par.id}({g7}) mod 2 (m={m})")
    return problemas
