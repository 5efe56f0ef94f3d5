"""
Módulo de configuração central do sistema.
Responsável por variáveis de ambiente, padrões globais e logging.
Segue Single Responsibility Principle (SOLID).
"""

import logging
import os
from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    """
    Lê inteiro de variável de ambiente com fallback.

    Args:
        name: Nome da variável
        default: Valor usado se ausente ou inválida

    Returns:
        Valor inteiro
    """
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw.strip())
    except ValueError:
        logging.getLogger(__name__).warning("%s inválido (%r), usando %d", name, raw, default)
        return default


def get_default_jobs() -> int:
    """
    Obtém número padrão de workers.

    Prioridade de busca:
    1. Variável LATTICE_DFT_JOBS (ambiente ou .env)
    2. 1 worker

    Returns:
        int: Número de workers (mínimo 1)
    """
    return max(1, _env_int("LATTICE_DFT_JOBS", 1))


def get_default_seed() -> int:
    """Semente padrão dos otimizadores multi-start."""
    return _env_int("LATTICE_DFT_SEED", 0)


def setup_logging(level: str | None = None) -> None:
    """
    Configura logging global (stderr).

    Args:
        level: Nível (DEBUG, INFO, WARNING...). Usa LATTICE_DFT_LOG_LEVEL se None.
    """
    level_name = (level or os.getenv("LATTICE_DFT_LOG_LEVEL", "WARNING")).upper()
    logging.basicConfig(
        level=getattr(logging, level_name, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


# Configurações da aplicação
APP_NAME = "lattice-dft"
APP_VERSION = "1.0.0"
APP_DESCRIPTION = "DFT em grafos: espectros, densidades, v-representabilidade e funcionais"
