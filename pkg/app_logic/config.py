# -*- coding: utf-8 -*-
import os
import logging
from typing import Any, Dict, Optional

import toml

_LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def get_logger(name: str) -> logging.Logger:
    """
    Logger padrão dos módulos de app_logic: nível WARNING e um único StreamHandler.
    """
    logger = logging.getLogger(name)
    logger.setLevel(_log_level())
    if not logger.handlers:
        handler = logging.StreamHandler()
        formatter = logging.Formatter(_LOG_FORMAT)
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    return logger


def _log_level() -> int:
    nivel = os.getenv("BORDISMO_LOG_LEVEL", "WARNING").upper()
    return getattr(logging, nivel, logging.WARNING)


logger = get_logger(__name__)

# --- Caminhos ---
_DEFAULT_DATA_FOLDER = "data"
_CONFIG_FILE_NAME = "bordismo.toml"

_base_path = os.path.dirname(os.path.abspath(__file__))
_app_root_path = os.path.dirname(_base_path) if os.path.basename(_base_path) == 'app_logic' else _base_path

# Valores padrão; podem ser sobrescritos pela seção [defaults] de bordismo.toml
DEFAULTS: Dict[str, Any] = {
    "window": 10,
    "degree_cap": 12,
    "output_format": "table",
    "max_pi0_degree2": 16,
    "max_pi0_degree3": 8,
    "max_extension_choices": 4096,
}


def get_data_dir() -> str:
    """Diretório de dados; a variável BORDISMO_DATA_DIR tem prioridade."""
    override = os.getenv("BORDISMO_DATA_DIR")
    if override:
        return os.path.abspath(override)
    return os.path.join(_app_root_path, _DEFAULT_DATA_FOLDER)


def data_path(*parts: str) -> str:
    return os.path.join(get_data_dir(), *parts)


def load_settings(data_dir: Optional[str] = None) -> Dict[str, Any]:
    settings = dict(DEFAULTS)
    config_path = os.path.join(data_dir or get_data_dir(), _CONFIG_FILE_NAME)
    if not os.path.exists(config_path):
        logger.debug(f"config.py: {config_path} não encontrado, usando padrões.")
        return settings
    try:
        conteudo = toml.load(config_path)
    except toml.TomlDecodeError as e:
        logger.error(f"config.py: Erro ao ler {config_path}: {e}. Usando padrões.")
        return settings
    for chave, valor in conteudo.get("defaults", {}).items():
        if chave not in DEFAULTS:
            logger.warning(f"config.py: Chave desconhecida em [defaults]: '{chave}'. Ignorada.")
            continue
        settings[chave] = valor
    return settings


def get_setting(key: str) -> Any:
    return load_settings()[key]
