# -*- coding: utf-8 -*-
import json

import pytest

import app_main
from app_logic import report_utils


def _rodar(capsys, *argv):
    codigo = app_main.main(list(argv))
    saida = capsys.readouterr()
    return codigo, saida.out, saida.err


# --- groupcoh / picard / steenrod ---

def test_groupcoh_h2sym(capsys):
    codigo, out, _ = _rodar(capsys, "groupcoh", "--pi0", "Z4", "--pi1", "Z2", "--h2sym")
    assert codigo == 0
    assert "H²_sym = Z2" in out


def test_groupcoh_estruturado_com_pi0_livre(capsys):
    codigo, out, _ = _rodar(capsys, "--format", "structured", "groupcoh", "--pi0", "Z^2", "--pi1", "Z2", "--h2sym")
    assert codigo == 0
    assert json.loads(out)["h2sym"] == "0"


def test_groupcoh_pi0_trivial(capsys):
    codigo, out, _ = _rodar(capsys, "groupcoh", "--pi0", "0", "--pi1", "Z2")
    assert codigo == 0
    assert "H^2 = 0" in out


def test_groupcoh_pi0_infinito_e_erro(capsys):
    codigo, _, err = _rodar(capsys, "groupcoh", "--pi0", "Z", "--pi1", "Z2", "--n", "2")
    assert codigo == 1
    assert "ERRO" in err


def test_picard_estruturado(capsys):
    codigo, out, _ = _rodar(capsys, "--format", "structured", "picard", "--source", "BSU2_8")
    assert codigo == 0
    dados = json.loads(out)
    assert dados["nat_iso_torsor"] == "Z2^4"
    assert dados["nat_iso_torsor_restricted"] == "Z2^2"
    assert dados["functor_torsor"] == "0"


def test_steenrod(capsys):
    codigo, out, _ = _rodar(capsys, "steenrod", "--serre", "4")
    assert codigo == 0
    assert "Sq4Sq2" in out
    codigo, out, _ = _rodar(capsys, "steenrod", "--space", "KZ4", "--sq", "2", "--on", "e4", "--check-adem")
    assert codigo == 0
    assert "Sq^2(e4) = e6p" in out and "Adem: ok" in out
    codigo, _, _ = _rodar(capsys, "steenrod")
    assert codigo == 1


# --- ahss / bockstein / golden ---

def test_ahss_confere_golden(capsys):
    codigo, out, _ = _rodar(capsys, "ahss", "KZ2_4", "--golden")
    assert codigo == 0
    assert out


def test_ahss_com_xi(capsys):
    codigo, out, _ = _rodar(capsys, "--format", "structured", "ahss", "MSU2", "--xi")
    assert codigo == 0
    assert json.loads(out)["xi"]["8"] == ["zeta1", "2*zeta2"]


def test_bockstein_confere_golden(capsys):
    codigo, _, _ = _rodar(capsys, "bockstein", "KZ2_4_bock", "--golden")
    assert codigo == 0


def test_divergencia_golden(capsys, monkeypatch):
    monkeypatch.setattr(report_utils, "golden_diff", lambda run, golden: ["grau 3: divergente"])
    codigo, _, err = _rodar(capsys, "ahss", "SU", "--golden")
    assert codigo == 2
    assert "golden" in err


def test_manifesto_inexistente(capsys):
    codigo, _, _ = _rodar(capsys, "ahss", "nao_existe")
    assert codigo == 1


def test_janela_alem_do_descritor(capsys):
    codigo, _, err = _rodar(capsys, "ahss", "SU2", "--window", "20")
    assert codigo == 1
    assert "janela" in err


def test_golden_completo(capsys):
    codigo, out, _ = _rodar(capsys, "golden")
    assert codigo == 0
    assert "DIVERGE" not in out


# --- orient ---

def test_orient_estrela(capsys):
    codigo, out, _ = _rodar(capsys, "orient", "--check-star", "su3")
    assert codigo == 0
    assert "star: false" in out


def test_orient_indice(capsys):
    codigo, out, _ = _rodar(capsys, "orient", "--index", "su", "--m", "5", "--charnums=-2,1,0")
    assert codigo == 0
    assert "índice (su, m=5) = 1" in out


def test_orient_functor_para_toda_variedade(capsys):
    codigo, out, _ = _rodar(capsys, "orient", "--functor", "N7Z2_E8", "--all-X")
    assert codigo == 0
    assert "orientável" in out and "não orientável" not in out


def test_orient_entrada_indeterminada(capsys):
    codigo, _, err = _rodar(capsys, "orient", "--functor", "O84_SO4_plus", "--class", "eta")
    assert codigo == 3
    assert "INDETERMINADO" in err


def test_orient_torsor_e_tabelas(capsys):
    codigo, out, _ = _rodar(capsys, "--format", "structured", "orient",
                            "--torsor", "rp7_s1", "--variant", "natural_at_zero", "--check-tables")
    assert codigo == 0
    dados = json.loads(out)
    assert dados["torsor"]["size"] == 2
    assert dados["table_problems"] == []


def test_orient_sem_operacao(capsys):
    codigo, _, _ = _rodar(capsys, "orient")
    assert codigo == 1


def test_subcomando_obrigatorio():
    with pytest.raises(SystemExit):
        app_main.main([])
