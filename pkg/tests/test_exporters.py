"""Testes dos exportadores e formatadores."""

import json
from enum import Enum

import numpy as np
import pytest

from exporters import EXPORTERS, get_exporter
from utils.formatters import format_error_message, format_number, to_serializable
from utils.helpers import sanitize_filename


class Status(str, Enum):
    OK = "ok"


def test_json_single_row_is_object():
    data = json.loads(get_exporter("json").export([{"a": 1}]))
    assert data == {"a": 1}


def test_json_many_rows_is_array():
    data = json.loads(get_exporter("json").export([{"a": 1}, {"a": 2}]))
    assert data == [{"a": 1}, {"a": 2}]


def test_csv_full_precision():
    value = 1.0 / 3.0
    text = get_exporter("csv").export([{"x": value, "status": Status.OK}]).decode("utf-8")
    header, line = text.splitlines()
    assert header == "x,status"
    assert float(line.split(",")[0]) == value
    assert line.endswith(",ok")


def test_csv_columns_in_first_seen_order():
    text = get_exporter("csv").export([{"b": 1}, {"a": 2, "b": 3}]).decode("utf-8")
    assert text.splitlines()[0] == "b,a"


def test_xlsx_round_trip():
    openpyxl = pytest.importorskip("openpyxl")
    from io import BytesIO

    data = get_exporter("xlsx").export([{"k": 1, "value": np.float64(2.5)}])
    sheet = openpyxl.load_workbook(BytesIO(data)).active
    assert [c.value for c in sheet[1]] == ["k", "value"]
    assert [c.value for c in sheet[2]] == [1, 2.5]


def test_unknown_format():
    with pytest.raises(ValueError):
        get_exporter("parquet")


@pytest.mark.parametrize("fmt", sorted(EXPORTERS))
def test_filenames_carry_extension(fmt):
    exporter = get_exporter(fmt)
    assert exporter.get_filename("atlas", "20260101_000000") == f"atlas-20260101_000000.{fmt}"
    assert exporter.get_mime_type()


def test_to_serializable():
    data = to_serializable({
        "inf": float("inf"),
        "neg": -np.inf,
        "z": 1 + 2j,
        "arr": np.array([1, 2]),
        "status": Status.OK,
        "flag": np.bool_(True),
    })
    assert data == {"inf": "inf", "neg": "-inf", "z": [1.0, 2.0], "arr": [1, 2], "status": "ok", "flag": True}
    json.dumps(data)


def test_format_number_keeps_non_floats():
    assert format_number(3) == 3
    assert format_number(0.1) == "0.1"


def test_error_message_fallback():
    error = format_error_message("desconhecido", "x")
    assert error["title"] == "Erro Inesperado"
    assert "x" in format_error_message("boundary_density", "x")["message"]


def test_sanitize_filename():
    assert sanitize_filename("Triângulo F̃ / atlas") == "triangulo-f-atlas"
    assert sanitize_filename("???") == "resultado"


def test_xlsx_non_finite_as_text():
    openpyxl = pytest.importorskip("openpyxl")
    from io import BytesIO

    data = get_exporter("xlsx").export([{"value": float("inf")}])
    sheet = openpyxl.load_workbook(BytesIO(data)).active
    assert sheet["A2"].value == "inf"
    assert sheet.freeze_panes == "A2"
