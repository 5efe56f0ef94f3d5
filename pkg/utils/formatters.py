"""
Formatadores de saída e de mensagens de erro.
Segue Single Responsibility Principle.
"""

import json
import math
from enum import Enum
from typing import Any, Dict

import numpy as np


def to_serializable(value: Any) -> Any:
    """
    Converte arrays numpy, complexos, enums e infinitos em tipos JSON.

    Complexos viram [re, im]; ±inf e nan viram as strings "inf", "-inf", "nan".

    Args:
        value: Estrutura arbitrária de dicts, listas e escalares

    Returns:
        Estrutura serializável por json.dumps
    """
    if isinstance(value, dict):
        return {str(k): to_serializable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_serializable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_serializable(value.tolist())
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (complex, np.complexfloating)):
        return [to_serializable(float(value.real)), to_serializable(float(value.imag))]
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    return value


def format_to_json(data: Any) -> str:
    """
    Formata um resultado como JSON indentado.

    Args:
        data: Resultado (dict, lista, arrays)

    Returns:
        String JSON
    """
    return json.dumps(to_serializable(data), ensure_ascii=False, indent=2)


def format_number(value: Any) -> Any:
    """Floats com precisão dupla completa (repr); demais valores inalterados."""
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, Enum):
        return value.value
    return value


def format_error_message(error_type: str, technical_details: str = "") -> Dict[str, str]:
    """
    Formata mensagens de erro de forma amigável.

    Args:
        error_type: Tipo do erro (invalid_input, boundary_density, non_convergence, generic)
        technical_details: Detalhes técnicos do erro (opcional)

    Returns:
        Dict com título, mensagem e sugestão
    """
    error_messages = {
        "invalid_input": {
            "title": "Entrada Inválida",
            "message": f"Os dados de entrada foram rejeitados: {technical_details}",
            "suggestion": "Verifique o grafo, N, o potencial e a densidade (0 <= ρ_i <= 1, Σρ_i = N)."
        },
        "boundary_density": {
            "title": "Densidade na Fronteira",
            "message": f"A densidade não é interior: {technical_details}",
            "suggestion": "A inversão só é garantida para 0 < ρ_i < 1; afaste a densidade da fronteira."
        },
        "non_convergence": {
            "title": "Não Convergência Numérica",
            "message": f"O cálculo não atingiu a tolerância exigida: {technical_details}",
            "suggestion": "Reduza o tamanho do problema ou ajuste as tolerâncias."
        },
        "generic": {
            "title": "Erro Inesperado",
            "message": f"Ocorreu um erro durante o cálculo: {technical_details}",
            "suggestion": "Execute com LATTICE_DFT_LOG_LEVEL=DEBUG e reporte o stack trace."
        }
    }

    return error_messages.get(error_type, error_messages["generic"])
