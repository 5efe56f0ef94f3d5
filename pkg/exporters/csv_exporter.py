"""
Exportador para formato CSV (tabelas de densidade, atlas e superfície).
"""

import csv
import io
from typing import Any, Dict, List

from utils.formatters import format_number
from .base_exporter import BaseExporter


class CSVExporter(BaseExporter):
    """Exporta linhas em CSV com cabeçalho"""

    def export(self, rows: List[Dict[str, Any]]) -> bytes:
        buffer = io.StringIO()
        columns = self.columns(rows)
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: format_number(row.get(key, "")) for key in columns})
        return buffer.getvalue().encode('utf-8')

    def get_filename(self, base_name: str, timestamp: str) -> str:
        return f"{base_name}-{timestamp}.csv"

    def get_mime_type(self) -> str:
        return "text/csv"
