"""
Exportadores para diferentes formatos.
Implementa Strategy Pattern para exportação flexível.
"""

from .base_exporter import BaseExporter
from .csv_exporter import CSVExporter
from .json_exporter import JSONExporter
from .excel_exporter import ExcelExporter, EXCEL_AVAILABLE

EXPORTERS = {
    "json": JSONExporter,
    "csv": CSVExporter,
    "xlsx": ExcelExporter,
}


def get_exporter(fmt: str) -> BaseExporter:
    """
    Exportador para o formato pedido.

    Raises:
        ValueError: Formato desconhecido
    """
    try:
        return EXPORTERS[fmt]()
    except KeyError:
        raise ValueError(f"Formato desconhecido: {fmt} (use {', '.join(EXPORTERS)})")


__all__ = [
    'BaseExporter',
    'CSVExporter',
    'JSONExporter',
    'ExcelExporter',
    'EXCEL_AVAILABLE',
    'EXPORTERS',
    'get_exporter'
]
