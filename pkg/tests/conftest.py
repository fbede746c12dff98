# -*- coding: utf-8 -*-
import os
import sys

import pytest

RAIZ = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if RAIZ not in sys.path:
    sys.path.insert(0, RAIZ)

from app_logic import descriptor_io  # noqa: E402


@pytest.fixture(autouse=True)
def _dados_padrao(monkeypatch):
    """Os testes sempre leem os dados embarcados em data/."""
    monkeypatch.delenv("BORDISMO_DATA_DIR", raising=False)


@pytest.fixture(scope="session")
def catalog():
    return descriptor_io.load_orient_catalog()


@pytest.fixture(scope="session")
def manifolds():
    return {nome: descriptor_io.load_manifold(nome) for nome in descriptor_io.list_names("manifolds")}


@pytest.fixture(scope="session")
def z2_torsors():
    return descriptor_io.load_picard("z2_torsors")
