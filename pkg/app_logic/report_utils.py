# -*- coding: utf-8 -*-
import json
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd

from app_logic.abgrp import AbelianGroup
from app_logic.ahss import SpectralPage, SpectralRun
from app_logic.config import get_logger
from app_logic.descriptor_io import GoldenTable

logger = get_logger(__name__)


# --- Função para serializar relatórios estruturados ---
def to_json(data: Any) -> str:
    """JSON determinístico: chaves ordenadas, sem escapar unicode."""
    return json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2, default=str)


def group_label(g: Optional[AbelianGroup]) -> str:
    return "?" if g is None else g.label()


# --- Função para montar a grade p × q de uma página ---
def page_frame(page: SpectralPage) -> pd.DataFrame:
    """Linhas q (de cima para baixo decrescentes), colunas p; células nulas em branco."""
    if not page.cells:
        return pd.DataFrame()
    ps = range(page.min_p, page.window + 1)
    qs = sorted({q for _, q in page.cells}, reverse=True)
    linhas = []
    for q in qs:
        linha = {}
        for p in ps:
            celula = page.cell(p, q)
            linha[p] = "" if celula is None or (not celula.undetermined and celula.is_zero()) else celula.label()
        linhas.append(linha)
    df = pd.DataFrame(linhas, index=[f"q={q}" for q in qs])
    df.columns = [f"p={p}" for p in ps]
    return df


def page_dict(page: SpectralPage) -> Dict[str, str]:
    return {f"{p},{q}": label for (p, q), label in page.table().items()}


def groups_frame(groups: Dict[int, Optional[AbelianGroup]], ambiguities: Dict[int, List[str]],
                 undetermined: Optional[Dict[int, List[str]]] = None) -> pd.DataFrame:
    indeterminados = undetermined or {}
    linhas = []
    for n in sorted(groups):
        if n in ambiguities:
            texto = " ou ".join(ambiguities[n])
        elif n in indeterminados:
            texto = "indeterminado: " + ", ".join(indeterminados[n])
        else:
            texto = group_label(groups[n])
        linhas.append({"n": n, "Ω̃_n": texto})
    return pd.DataFrame(linhas).set_index("n") if linhas else pd.DataFrame()


def run_report(run: SpectralRun) -> Dict[str, Any]:
    """Versão estruturada de uma execução completa da sequência espectral."""
    paginas = {"E2": page_dict(run.e2)}
    if run.e3 is not None:
        paginas["E3"] = page_dict(run.e3)
    paginas["Einf"] = page_dict(run.final)
    return {
        "space": run.final.space,
        "window": run.final.window,
        "pages": paginas,
        "groups": {str(n): group_label(g) for n, g in run.groups.items()},
        "ambiguities": {str(n): c for n, c in run.ambiguities.items()},
        "undetermined": {str(n): c for n, c in run.undetermined.items()},
        "differentials": sorted(
            {f"{d.key}:{d.origin}" for d in run.final.differentials if not d.is_zero()}),
        "unresolved": run.final.unresolved_keys(),
    }


def render_run(run: SpectralRun, title: str = "") -> str:
    blocos = [f"=== {title or run.final.space} ==="]
    paginas = [("E²", run.e2)] + ([("E³", run.e3)] if run.e3 is not None else []) + [("E^∞", run.final)]
    for nome, pagina in paginas:
        df = page_frame(pagina)
        blocos.append(f"--- {nome} ---")
        blocos.append(df.to_string() if not df.empty else "(página nula)")
    naonulos = [d for d in run.final.differentials if not d.is_zero()]
    if naonulos:
        blocos.append("--- diferenciais não nulos ---")
        blocos.extend(f"{d.key} ({d.origin}{': ' + d.provenance if d.provenance else ''})" for d in naonulos)
    if run.final.unresolved:
        blocos.append("pendentes: " + ", ".join(run.final.unresolved_keys()))
    blocos.append("--- Ω̃_n ---")
    blocos.append(groups_frame(run.groups, run.ambiguities, run.undetermined).to_string())
    return "\n".join(blocos)


# --- Função para comparar uma execução com a tabela golden ---
def golden_diff(run: SpectralRun, golden: GoldenTable) -> List[str]:
    diferencas = []
    for n, esperado in sorted(golden.groups.items()):
        obtido = run.groups.get(n)
        if n in run.ambiguities or n in run.undetermined or obtido is None:
            diferencas.append(f"n={n}: esperado {esperado}, obtido {run.ambiguities.get(n) or run.undetermined.get(n)}")
        elif obtido != AbelianGroup.parse(esperado):
            diferencas.append(f"n={n}: esperado {esperado}, obtido {obtido.label()}")
    for n, candidatos in sorted(golden.ambiguous.items()):
        obtido = run.ambiguities.get(n)
        if sorted(candidatos) != (obtido or []):
            diferencas.append(f"n={n}: ambiguidade esperada {sorted(candidatos)}, obtida {obtido}")
    for n, candidatos in sorted(golden.undetermined.items()):
        obtido = run.undetermined.get(n)
        if sorted(candidatos) != sorted(obtido or []):
            diferencas.append(f"n={n}: indeterminação esperada {sorted(candidatos)}, obtida {obtido}")
    # graus calculados que a tabela não menciona também divergem
    listados = set(golden.groups) | set(golden.ambiguous) | set(golden.undetermined)
    calculados = set(run.groups) | set(run.ambiguities) | set(run.undetermined)
    for n in sorted(calculados - listados):
        obtido = run.groups.get(n)
        rotulo = obtido.label() if obtido is not None else (run.ambiguities.get(n) or run.undetermined.get(n))
        diferencas.append(f"n={n}: calculado {rotulo}, ausente da tabela golden")
    if diferencas:
        logger.warning(f"[golden_diff] {golden.id}: {len(diferencas)} divergência(s).")
    return diferencas


def cohomology_diff(groups: Dict[int, AbelianGroup], golden: GoldenTable) -> List[str]:
    diferencas = []
    for n, esperado in sorted(golden.cohomology.items()):
        obtido = groups.get(n, AbelianGroup())
        if obtido != AbelianGroup.parse(esperado):
            diferencas.append(f"H^{n}: esperado {esperado}, obtido {obtido.label()}")
    return diferencas


def records_frame(records: Iterable[Dict[str, Any]], index: Optional[str] = None) -> pd.DataFrame:
    df = pd.DataFrame(list(records))
    if index and not df.empty:
        df = df.set_index(index)
    return df


def frame_text(df: pd.DataFrame) -> str:
    return df.to_string() if not df.empty else "(vazio)"
