"""
Exportador para formato JSON.
"""

import json
from typing import Any, Dict, List

from utils.formatters import to_serializable
from .base_exporter import BaseExporter


class JSONExporter(BaseExporter):
    """Exporta resultados em JSON com precisão dupla completa"""

    def export(self, rows: List[Dict[str, Any]]) -> bytes:
        # Um único resultado vira objeto; vários, array
        data = rows[0] if len(rows) == 1 else rows
        json_str = json.dumps(to_serializable(data), ensure_ascii=False, indent=2)
        return json_str.encode('utf-8')

    def get_filename(self, base_name: str, timestamp: str) -> str:
        return f"{base_name}-{timestamp}.json"

    def get_mime_type(self) -> str:
        return "application/json"
