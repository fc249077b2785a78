"""
Table renderers for classification rows: json, csv and markdown.

The markdown layout follows the published tables (type | basket | r_P) and
prints baskets as comma-joined (r,v) or (r,v,b) tuples.
"""

import csv
import io
import json
from typing import Any, Dict, List, Tuple

from tabulate import tabulate

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from data.models import Basket, ClassificationRow, DeltaVerdict, Stage
from services.basket import basket_to_document
from utils.config import AppConfig
from utils.helpers import FormatHelper


def row_to_dict(row: ClassificationRow) -> Dict[str, Any]:
    if row.stage is Stage.JTILDE:
        entries = basket_to_document(row.basket)["entries"]
    else:
        entries = [{"r": r, "v": v} for r, v in row.data]
    return {
        "type": row.label,
        "stage": row.stage.value,
        "entries": entries,
        "r_P": row.r_P,
        "verdict": row.verdict.value,
    }


def render_json(rows: List[ClassificationRow]) -> str:
    return json.dumps([row_to_dict(row) for row in rows], indent=2, ensure_ascii=False)


def render_csv(rows: List[ClassificationRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(AppConfig.TABLE_HEADERS)
    for row in rows:
        basket = FormatHelper.format_tuples(row.data, AppConfig.CSV_BASKET_SEPARATOR, empty="")
        writer.writerow([row.label, basket, row.r_P])
    return buffer.getvalue()


def render_markdown(rows: List[ClassificationRow]) -> str:
    table = [
        [row.label, FormatHelper.format_tuples(row.data, AppConfig.MARKDOWN_BASKET_SEPARATOR), str(row.r_P)]
        for row in rows
    ]
    return tabulate(table, headers=AppConfig.TABLE_HEADERS, tablefmt="pipe", disable_numparse=True)


RENDERERS = {
    "json": render_json,
    "csv": render_csv,
    "markdown": render_markdown,
}


def render_rows(rows: List[ClassificationRow], output_format: str) -> str:
    return RENDERERS[output_format](rows)


def describe_verdict(verdict: DeltaVerdict) -> str:
    if verdict.consistent:
        return "consistent"
    return (
        f"inconsistent at i={verdict.witness}: "
        f"lhs {FormatHelper.format_fraction(verdict.lhs)}, "
        f"rhs {FormatHelper.format_fraction(verdict.rhs)}"
    )


def render_elimination(label: str, report: List[Tuple[Basket, DeltaVerdict]]) -> str:
    lines = [f"type {label}: {len(report)} b-assignments"]
    for basket, verdict in report:
        lines.append(f"  {basket}: {describe_verdict(verdict)}")
    return "\n".join(lines)
