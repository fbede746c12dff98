# -*- coding: utf-8 -*-
"""
Subcomandos da linha de comando. Cada cmd_* recebe o Namespace do argparse,
imprime o relatório (tabela ou JSON) e devolve o código de saída; os erros
sobem como BordismoError e viram código de saída em app_main.
"""
import argparse
from typing import Any, Dict, List, Optional

from app_logic import descriptor_io, report_utils
from app_logic.abgrp import AbelianGroup
from app_logic.ahss import SpectralRun, run_spectral_sequence
from app_logic.config import get_logger, get_setting
from app_logic.errors import DescriptorError, GoldenMismatchError
from app_logic.groupcoh import (
    alt_group,
    brute_force_h2_order,
    cohomology_group,
    h2_sym,
    h2_sym_group,
)
from app_logic.orient import (
    FLAG_VARIANTS,
    CharNumbers,
    bordism_coordinates,
    check_index_tables,
    check_mod2_coherence,
    condition_dagger,
    condition_star,
    flag_torsor_size,
    fueter_indices,
    in_kernel,
    index_sp,
    index_su,
    loop_xi_parity,
    orientable_for_all,
    orientable_grid,
    pi1_on_class,
    pontrjagin_square_lifted,
)
from app_logic.picard import (
    functor_torsor_group,
    nat_iso_torsor_group,
    nat_iso_torsor_group_restricted,
)
from app_logic.spaces import bockstein_e1, validate_descriptor
from app_logic.steenrod import check_adem_relations, serre_basis

logger = get_logger(__name__)

DEFAULT_TARGET = "z2_torsors"


def _emit(args: argparse.Namespace, structured: Dict[str, Any], text: str) -> None:
    formato = getattr(args, "format", None) or get_setting('output_format')
    print(report_utils.to_json(structured) if formato == "structured" else text)


def _charnums(texto: str) -> List[int]:
    try:
        return [int(v) for v in texto.split(",") if v.strip()]
    except ValueError:
        raise DescriptorError(f"--charnums espera inteiros separados por vírgula, recebido '{texto}'.")


# --- groupcoh ---

def cmd_groupcoh(args: argparse.Namespace) -> int:
    pi0 = AbelianGroup.parse(args.pi0)
    pi1 = AbelianGroup.parse(args.pi1)
    dados: Dict[str, Any] = {"pi0": pi0.label(), "pi1": pi1.label()}
    linhas = [f"π₀ = {pi0.label()}, π₁ = {pi1.label()}"]
    reps = []
    if args.h2sym:
        if pi0.is_finite():
            grupo, reps = h2_sym_group(pi0, pi1)
            dados["alt"] = alt_group(pi0, pi1).label()
            linhas.append(f"Alt(π₀, π₁) = {dados['alt']}")
        else:
            grupo = h2_sym(pi0, pi1)
        dados["h2sym"] = grupo.label()
        linhas.insert(1, f"H²_sym = {grupo.label()}")
    else:
        grupo, reps = cohomology_group(args.n, pi0, pi1)
        dados["n"] = args.n
        dados["group"] = grupo.label()
        linhas.append(f"H^{args.n} = {grupo.label()}")
    if args.reps and reps:
        dados["representatives"] = [r.table() for r in reps]
        linhas.extend(f"  rep {k}: {r.table()}" for k, r in enumerate(reps))
    if args.check:
        ordem = brute_force_h2_order(pi0, pi1)
        dados["brute_force_h2_order"] = ordem
        linhas.append(f"|H²| por força bruta = {ordem}")
    _emit(args, dados, "\n".join(linhas))
    return 0


# --- picard ---

def cmd_picard(args: argparse.Namespace) -> int:
    P = descriptor_io.load_picard(args.source)
    P2 = descriptor_io.load_picard(args.target or DEFAULT_TARGET)
    dados = {
        "source": P.name, "target": P2.name,
        "pi0": P.pi0.label(), "pi1": P.pi1.label(), "q": P.q_table(),
        "functor_torsor": functor_torsor_group(P, P2).label(),
        "nat_iso_torsor": nat_iso_torsor_group(P, P2).label(),
        "nat_iso_torsor_restricted": nat_iso_torsor_group_restricted(P, P2).label(),
    }
    df = report_utils.records_frame([{"gerador": k, "q": v} for k, v in dados["q"].items()], "gerador")
    texto = "\n".join([
        f"{P.name}: π₀ = {dados['pi0']}, π₁ = {dados['pi1']}",
        report_utils.frame_text(df),
        f"Funtores para {P2.name} (f₀, f₁ fixos): torsor sobre {dados['functor_torsor']}",
        f"Isomorfismos naturais: torsor sobre {dados['nat_iso_torsor']}",
        f"Isomorfismos compatíveis com o ponto: torsor sobre {dados['nat_iso_torsor_restricted']}",
    ])
    _emit(args, dados, texto)
    return 0


# --- steenrod ---

def cmd_steenrod(args: argparse.Namespace) -> int:
    dados: Dict[str, Any] = {}
    linhas: List[str] = []
    if args.serre is not None:
        base = serre_basis(args.serre, args.cap, args.coefficients)
        dados["serre_basis"] = [I.label() for I in base]
        linhas.append(f"Base de Serre K(π,{args.serre}) até {args.cap}: " + ", ".join(dados["serre_basis"]))
    if args.space:
        algebra = descriptor_io.load_space(args.space).algebra
        if args.sq is not None:
            valor = algebra.sq(args.sq, algebra.parse(args.on))
            dados["sq"] = str(valor)
            linhas.append(f"Sq^{args.sq}({args.on}) = {valor}")
        if args.check_adem:
            violacoes = check_adem_relations(algebra, min(12, algebra.cap))
            dados["adem_violations"] = violacoes
            linhas.append("Adem: ok" if not violacoes else "Adem: " + "; ".join(violacoes))
    if not dados:
        raise DescriptorError("steenrod: informe --serre ou --space.")
    _emit(args, dados, "\n".join(linhas))
    return 0


# --- ahss ---

def run_manifest(manifest: descriptor_io.RunManifest, window: Optional[int] = None) -> SpectralRun:
    descritor = descriptor_io.load_manifest_space(manifest)
    assercoes = descriptor_io.load_assertions(manifest.assertions)
    return run_spectral_sequence(descritor, manifest.coefficient_row(), window or manifest.window,
                                 assercoes.assertions, manifest.degrees)


def _check_golden(diferencas: List[str], ident: str) -> None:
    if diferencas:
        for d in diferencas:
            logger.error(f"[golden] {ident}: {d}")
        raise GoldenMismatchError(f"{ident}: {len(diferencas)} divergência(s) com a tabela golden.", diferencas)


def cmd_ahss(args: argparse.Namespace) -> int:
    manifest = descriptor_io.load_manifest(args.manifest)
    run = run_manifest(manifest, args.window)
    dados = report_utils.run_report(run)
    texto = report_utils.render_run(run, manifest.title or manifest.id)
    if args.xi:
        catalogo = descriptor_io.load_orient_catalog()
        chave = manifest.xi or manifest.space
        dados["xi"] = {str(n): g for n, g in sorted(catalogo.xi_images.get(chave, {}).items())}
        texto += "\n--- Im ξ̂ ---\n" + "\n".join(f"{n}: ⟨{', '.join(g) or '0'}⟩" for n, g in dados["xi"].items())
    _emit(args, dados, texto)
    if args.golden:
        _check_golden(report_utils.golden_diff(run, descriptor_io.load_golden(manifest.golden or manifest.id)),
                      manifest.id)
    return 0


# --- bockstein ---

def cmd_bockstein(args: argparse.Namespace) -> int:
    manifest = descriptor_io.load_manifest(args.manifest)
    descritor = descriptor_io.load_manifest_space(manifest)
    problemas = validate_descriptor(descritor)
    if problemas:
        raise DescriptorError(f"{descritor.name}: descritor inconsistente: {problemas[0]}")
    assercoes = descriptor_io.load_assertions(manifest.assertions)
    relatorio = bockstein_e1(descritor, assercoes.bockstein, args.max_page)
    grupos = relatorio.integral_cohomology()
    dados = {
        "space": relatorio.space,
        "valid_through": relatorio.valid_through,
        "e2": {str(n): v for n, v in sorted(relatorio.pages.get(2, {}).items())},
        "cohomology": {str(n): g.label() for n, g in grupos.items() if n <= relatorio.valid_through},
        "summands": [f"{s.degree}:Z{s.order}<{s.name}>" for s in relatorio.summands],
    }
    df = report_utils.records_frame(
        [{"n": n, "H^n(T,Z)": g.label(), "E₂": ", ".join(relatorio.e2(n))}
         for n, g in sorted(grupos.items()) if n <= relatorio.valid_through], "n")
    texto = f"=== Bockstein {relatorio.space} (válido até {relatorio.valid_through}) ===\n" + report_utils.frame_text(df)
    _emit(args, dados, texto)
    if args.golden:
        tabela = descriptor_io.load_golden(manifest.golden or manifest.id)
        _check_golden(report_utils.cohomology_diff(grupos, tabela), manifest.id)
    return 0


# --- orient ---

def _orient_index(args: argparse.Namespace, dados: Dict[str, Any], linhas: List[str]) -> None:
    valores = _charnums(args.charnums)
    if args.m is None:
        raise DescriptorError("--index exige --m.")
    if args.index == "su":
        valor = index_su(args.m, CharNumbers("bsum", dict(zip(("p1c2", "c2sq", "c4"), valores))))
    else:
        valor = index_sp(args.m, CharNumbers("bspm", dict(zip(("p1q1", "q1sq", "q2"), valores))))
    dados["index"] = valor
    linhas.append(f"índice ({args.index}, m={args.m}) = {valor}")


def cmd_orient(args: argparse.Namespace) -> int:
    dados: Dict[str, Any] = {}
    linhas: List[str] = []
    for opcao, funcao, chave in (("check_star", condition_star, "star"),
                                 ("check_dagger", condition_dagger, "dagger")):
        nome = getattr(args, opcao)
        if nome:
            valor = funcao(descriptor_io.load_manifold(nome))
            dados[chave] = valor
            linhas.append(f"{chave}: {'true' if valor else 'false'}")
    if args.index:
        _orient_index(args, dados, linhas)
    if args.fueter:
        rotulos = ("p1_tm", "euler_nu", "p1_nu")
        mais, menos, zero = fueter_indices(CharNumbers("mso4", dict(zip(rotulos, _charnums(args.charnums)))))
        dados["fueter"] = [mais, menos, zero]
        linhas.append(f"Fueter (+, −, 0) = ({mais}, {menos}, {zero})")
    if args.torsor:
        tamanho = flag_torsor_size(descriptor_io.load_manifold(args.torsor), args.variant, args.dim)
        dados["torsor"] = {"exists": tamanho.exists, "size": tamanho.size, "label": tamanho.label()}
        linhas.append(f"estruturas de bandeira ({args.variant}): {tamanho.label()}")
    if args.parity:
        paridade = loop_xi_parity(descriptor_io.load_manifold(args.parity), args.beta or "0", args.gamma)
        dados["parity"] = list(paridade)
        linhas.append(f"paridade de X × S¹: {paridade}")
    if args.psquare:
        valor = pontrjagin_square_lifted(descriptor_io.load_manifold(args.psquare), args.x or "0")
        dados["pontrjagin_square"] = valor
        linhas.append(f"∫P = {valor} mod 4")

    catalogo = None
    if args.functor or args.grid or args.coords or args.check_tables:
        catalogo = descriptor_io.load_orient_catalog()
    if args.coords:
        familia = catalogo.families.get(args.coords)
        if familia is None:
            raise DescriptorError(f"Família '{args.coords}' inexistente.")
        valores = dict(zip(familia.labels, _charnums(args.charnums)))
        coordenadas = bordism_coordinates(familia, CharNumbers(familia.context, valores))
        dados["coordinates"] = list(coordenadas)
        linhas.append(f"{familia.id}: {coordenadas}")
    if args.functor:
        if args.all_x:
            valor = orientable_for_all(catalogo, args.functor, args.m)
            dados["orientable"] = valor
            linhas.append(f"{args.functor}: {'orientável' if valor else 'não orientável'}")
        if args.cls:
            valor = pi1_on_class(catalogo, args.functor, args.cls, args.m)
            dados["pi1"] = valor
            dados["in_kernel"] = in_kernel(catalogo, args.functor, args.cls, args.m)
            linhas.append(f"π₁({args.cls}) = {valor}")
    if args.grid:
        orientaveis = orientable_grid(catalogo)
        dados["orientable_grid"] = orientaveis
        linhas.append("Orientáveis para toda X:")
        linhas.extend(f"  {f}" for f in orientaveis)
    if args.check_tables:
        problemas = check_index_tables(catalogo) + check_mod2_coherence(catalogo)
        dados["table_problems"] = problemas
        linhas.append("tabelas: ok" if not problemas else "\n".join(problemas))
    if not dados:
        raise DescriptorError("orient: nenhuma operação pedida.")
    _emit(args, dados, "\n".join(linhas))
    return 0


# --- golden ---

def cmd_golden(args: argparse.Namespace) -> int:
    """Roda todos os manifestos com tabela golden e acumula as divergências."""
    divergencias: List[str] = []
    resumo = []
    for nome in descriptor_io.list_names("manifests"):
        manifest = descriptor_io.load_manifest(nome)
        if not manifest.golden:
            continue
        tabela = descriptor_io.load_golden(manifest.golden)
        if manifest.command == "bockstein":
            descritor = descriptor_io.load_manifest_space(manifest)
            relatorio = bockstein_e1(descritor, descriptor_io.load_assertions(manifest.assertions).bockstein)
            diffs = report_utils.cohomology_diff(relatorio.integral_cohomology(), tabela)
        else:
            diffs = report_utils.golden_diff(run_manifest(manifest), tabela)
        resumo.append({"manifesto": nome, "status": "ok" if not diffs else "DIVERGE"})
        divergencias.extend(f"{nome}: {d}" for d in diffs)
    _emit(args, {"runs": resumo, "diffs": divergencias},
          report_utils.frame_text(report_utils.records_frame(resumo, "manifesto")))
    _check_golden(divergencias, "golden")
    return 0


# --- Parser ---

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bordismo", description="Cálculos exatos de bordismo spin.")
    parser.add_argument("--format", choices=("table", "structured"), default=None)
    parser.add_argument("--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("groupcoh", help="Cohomologia de grupos e H²_sym")
    p.add_argument("--pi0", required=True)
    p.add_argument("--pi1", required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--h2sym", action="store_true")
    p.add_argument("--reps", action="store_true")
    p.add_argument("--check", action="store_true", help="confere |H²| por força bruta")

    p = sub.add_parser("picard", help="Torsores de funtores entre grupoides de Picard")
    p.add_argument("--source", required=True)
    p.add_argument("--target", default=None)

    p = sub.add_parser("steenrod", help="Base de Serre, Sqⁱ e relações de Adem")
    p.add_argument("--serre", type=int, default=None)
    p.add_argument("--cap", type=int, default=10)
    p.add_argument("--coefficients", choices=("Z", "Z2"), default="Z")
    p.add_argument("--space", default=None)
    p.add_argument("--sq", type=int, default=None)
    p.add_argument("--on", default="0")
    p.add_argument("--check-adem", action="store_true")

    p = sub.add_parser("ahss", help="Sequência espectral de Atiyah–Hirzebruch")
    p.add_argument("manifest")
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--golden", action="store_true")
    p.add_argument("--xi", action="store_true")

    p = sub.add_parser("bockstein", help="Sequência espectral de Bockstein")
    p.add_argument("manifest")
    p.add_argument("--golden", action="store_true")
    p.add_argument("--max-page", type=int, default=4)

    p = sub.add_parser("orient", help="Orientabilidade, índices e estruturas de bandeira")
    p.add_argument("--check-star", default=None)
    p.add_argument("--check-dagger", default=None)
    p.add_argument("--index", choices=("su", "sp"), default=None)
    p.add_argument("--fueter", action="store_true")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--charnums", default="")
    p.add_argument("--coords", default=None, help="id da família de coordenadas")
    p.add_argument("--functor", default=None)
    p.add_argument("--all-X", dest="all_x", action="store_true")
    p.add_argument("--class", dest="cls", default=None)
    p.add_argument("--grid", action="store_true")
    p.add_argument("--check-tables", action="store_true")
    p.add_argument("--torsor", default=None)
    p.add_argument("--variant", choices=FLAG_VARIANTS, default="plain")
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--parity", default=None)
    p.add_argument("--beta", default=None)
    p.add_argument("--gamma", default=None)
    p.add_argument("--psquare", default=None)
    p.add_argument("--x", default=None)

    sub.add_parser("golden", help="Roda todos os manifestos contra data/golden")
    return parser
