"""
Módulo de validação de entradas numéricas.
Responsável por validar densidades, potenciais e parâmetros antes do processamento.
Segue Single Responsibility Principle.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from utils.constants import DENSITY_TOL


def validate_density(rho: Sequence[float], n: int, tol: float = DENSITY_TOL) -> Tuple[bool, str]:
    """
    Valida pertinência ao hipersimplexo P_{M,N}.

    Args:
        rho: Vetor de densidade
        n: Número de partículas esperado
        tol: Tolerância absoluta

    Returns:
        Tupla (is_valid, error_message) nomeando a restrição violada
    """
    rho = np.asarray(rho, dtype=float).reshape(-1)
    if rho.size == 0:
        return False, "Densidade vazia"

    if not np.all(np.isfinite(rho)):
        return False, "Densidade contém valores não finitos"

    low = int(np.argmin(rho))
    if rho[low] < -tol:
        return False, f"ρ_{low + 1} = {rho[low]:.6g} < 0"

    high = int(np.argmax(rho))
    if rho[high] > 1.0 + tol:
        return False, f"ρ_{high + 1} = {rho[high]:.6g} > 1"

    total = float(rho.sum())
    if abs(total - n) > tol:
        return False, f"Σρ_i = {total:.12g} difere de N = {n}"

    return True, ""


def validate_interior(rho: Sequence[float], tol: float = DENSITY_TOL) -> Tuple[bool, str]:
    """
    Valida que 0 < ρ_i < 1 para todo i.

    Returns:
        Tupla (is_valid, error_message)
    """
    rho = np.asarray(rho, dtype=float).reshape(-1)
    for i, x in enumerate(rho):
        if x <= tol:
            return False, f"ρ_{i + 1} = {x:.6g} está na fronteira (ocupação nula)"
        if x >= 1.0 - tol:
            return False, f"ρ_{i + 1} = {x:.6g} está na fronteira (ocupação plena)"
    return True, ""


def validate_vector_length(values: Optional[Sequence[float]], m: int, nome_campo: str) -> Tuple[bool, str]:
    """
    Valida comprimento M de um vetor por vértice.

    Returns:
        Tupla (is_valid, error_message)
    """
    if values is None:
        return True, ""
    if len(values) != m:
        return False, f"{nome_campo} tem {len(values)} entradas, esperado M = {m}"
    return True, ""


def validate_job(
    m: int,
    n: int,
    potential: Optional[Sequence[float]] = None,
    rho: Optional[Sequence[float]] = None
) -> Tuple[bool, List[str]]:
    """
    Valida a combinação grafo/N/potencial/densidade de um job.

    Args:
        m: Número de vértices do grafo
        n: Número de partículas
        potential: Potencial opcional
        rho: Densidade alvo opcional

    Returns:
        Tupla (is_valid, list_of_errors)
    """
    errors = []

    if not 1 <= n < m:
        errors.append(f"N deve satisfazer 1 <= N < M (M={m}, N={n})")

    valid, error = validate_vector_length(potential, m, "Potencial")
    if not valid:
        errors.append(error)

    valid, error = validate_vector_length(rho, m, "Densidade")
    if not valid:
        errors.append(error)

    return len(errors) == 0, errors
