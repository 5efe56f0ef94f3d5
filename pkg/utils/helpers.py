"""
Funções auxiliares gerais do sistema.
Utilidades que não se encaixam em outras categorias.
"""

import json
import re
import unicodedata
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from pathlib import Path
from typing import Callable, List, Sequence, TypeVar

import numpy as np

from utils.constants import MAX_FILENAME_LENGTH
from utils.exceptions import InvalidInputError

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> List[R]:
    """
    Aplica fn a cada item preservando a ordem de entrada.

    Args:
        fn: Função pura
        items: Entradas
        jobs: Número de workers (1 = sequencial)

    Returns:
        Resultados na ordem dos itens
    """
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(fn, items))


def make_rng(seed: int) -> np.random.Generator:
    """Gerador determinístico a partir da semente."""
    return np.random.default_rng(seed)


def parse_vector(text: str) -> List[float]:
    """
    Converte "2,1,0" ou "2 1 0" em lista de floats.

    Raises:
        InvalidInputError: Texto não numérico
    """
    parts = [p for p in re.split(r"[,\s;]+", text.strip()) if p]
    if not parts:
        raise InvalidInputError("Vetor vazio")
    try:
        return [float(p) for p in parts]
    except ValueError as e:
        raise InvalidInputError(f"Vetor inválido {text!r}: {e}") from e


def load_vector(source: str) -> List[float]:
    """
    Vetor inline ou de arquivo (.json com lista, ou texto).

    Args:
        source: "2,1,0" ou caminho

    Returns:
        Lista de floats
    """
    path = Path(source)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
        if path.suffix.lower() == ".json":
            try:
                data = json.loads(text)
            except json.JSONDecodeError as e:
                raise InvalidInputError(f"JSON inválido em {source}: {e}") from e
            if not isinstance(data, list):
                raise InvalidInputError(f"{source} deve conter uma lista JSON")
            return [float(x) for x in data]
        return parse_vector(text)
    return parse_vector(source)


def load_matrix(path: str) -> np.ndarray:
    """
    Matriz de arquivo JSON (lista de listas) ou CSV/texto.

    Raises:
        InvalidInputError: Arquivo ausente ou malformado
    """
    file = Path(path)
    if not file.is_file():
        raise InvalidInputError(f"Arquivo de matriz não encontrado: {path}")
    text = file.read_text(encoding="utf-8")
    try:
        if file.suffix.lower() == ".json":
            matrix = np.array(json.loads(text), dtype=float)
        else:
            matrix = np.array([parse_vector(line) for line in text.splitlines() if line.strip()], dtype=float)
    except (ValueError, json.JSONDecodeError) as e:
        raise InvalidInputError(f"Matriz malformada em {path}: {e}") from e
    if matrix.ndim != 2:
        raise InvalidInputError(f"Matriz em {path} não é bidimensional")
    return matrix


def sanitize_filename(filename: str, max_length: int = MAX_FILENAME_LENGTH) -> str:
    """
    Remove caracteres inválidos e limita tamanho do nome de arquivo.
    Usado pelos exportadores.

    Args:
        filename: Nome original
        max_length: Comprimento máximo

    Returns:
        Nome sanitizado
    """
    filename = unicodedata.normalize('NFKD', filename)
    filename = filename.encode('ASCII', 'ignore').decode('ASCII')
    filename = re.sub(r'[^\w\s-]', '', filename)
    filename = re.sub(r'[\s]+', '-', filename)
    filename = re.sub(r'-+', '-', filename).strip('-')
    return filename[:max_length].lower() or "resultado"


def timestamp() -> str:
    return datetime.now().strftime("%Y%m%d_%H%M%S")
