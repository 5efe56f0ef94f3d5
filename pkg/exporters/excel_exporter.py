"""
Exportador para formato Excel (.xlsx).
Requer: pip install openpyxl
"""

import math
from enum import Enum
from io import BytesIO
from typing import Any, Dict, List

from .base_exporter import BaseExporter

try:
    from openpyxl import Workbook
    from openpyxl.styles import Alignment, Font, PatternFill
    EXCEL_AVAILABLE = True
except ImportError:
    EXCEL_AVAILABLE = False

FLOAT_FORMAT = "0.000000000000E+00"
MAX_COLUMN_WIDTH = 24


class ExcelExporter(BaseExporter):
    """Tabela de resultados em uma planilha, cabeçalho congelado e floats em notação científica."""

    def __init__(self, sheet_title: str = "Resultados"):
        self.sheet_title = sheet_title

    def export(self, rows: List[Dict[str, Any]]) -> bytes:
        if not EXCEL_AVAILABLE:
            raise ImportError("openpyxl não instalado. Execute: pip install openpyxl")

        wb = Workbook()
        ws = wb.active
        ws.title = self.sheet_title

        columns = self.columns(rows)
        self._write_header(ws, columns)
        for row in rows:
            ws.append([self._cell_value(row.get(key)) for key in columns])

        for cells in ws.iter_cols(min_row=2):
            for cell in cells:
                if isinstance(cell.value, float):
                    cell.number_format = FLOAT_FORMAT
        for index, name in enumerate(columns, start=1):
            letter = ws.cell(row=1, column=index).column_letter
            ws.column_dimensions[letter].width = min(max(len(name), len(FLOAT_FORMAT)) + 2, MAX_COLUMN_WIDTH)
        ws.freeze_panes = "A2"

        buffer = BytesIO()
        wb.save(buffer)
        return buffer.getvalue()

    def _write_header(self, ws, columns: List[str]) -> None:
        ws.append(columns)
        fill = PatternFill(start_color="4472C4", end_color="4472C4", fill_type="solid")
        for cell in ws[1]:
            cell.fill = fill
            cell.font = Font(bold=True, color="FFFFFF")
            cell.alignment = Alignment(horizontal="center")

    def _cell_value(self, value: Any) -> Any:
        if isinstance(value, Enum):
            return value.value
        if hasattr(value, "item"):
            value = value.item()
        # ±inf e nan viram texto
        if isinstance(value, float) and not math.isfinite(value):
            return str(value)
        if value is None or isinstance(value, (int, float, str, bool)):
            return value
        return str(value)

    def get_filename(self, base_name: str, timestamp: str) -> str:
        return f"{base_name}-{timestamp}.xlsx"

    def get_mime_type(self) -> str:
        return "application/vnd.openxmlformats-officedocument.spreadsheetml.sheet"
