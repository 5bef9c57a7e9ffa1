"""
Moduł eksportu raportów: JSON, tekst (pandas) i CSV
"""

import json
import logging
import os
import sys
from typing import Dict, List, Optional

import pandas as pd
from colorama import Fore, Style

from ..config.settings import REPORT_SCHEMA_VERSION

# Klucze raportu, pod którymi leżą listy rekordów tabelarycznych
TABLE_KEYS = ("relations", "records", "elements", "matches", "unexpected", "rows", "valuations", "inputs")


def finalize_report(report: Dict, timings: Optional[Dict[str, float]] = None) -> Dict:
    """Dodaje schemaVersion; czasy tylko na życzenie, aby raporty były powtarzalne."""
    out = dict(report)
    out["schemaVersion"] = REPORT_SCHEMA_VERSION
    if timings is not None:
        out["timings"] = {k: round(v, 3) for k, v in timings.items()}
    return out


def report_to_json(report: Dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


def report_tables(report: Dict) -> Dict[str, pd.DataFrame]:
    """Tabelaryczne części raportu jako ramki danych."""
    tables = {}
    for key in TABLE_KEYS:
        value = report.get(key)
        if isinstance(value, list) and value and all(isinstance(r, dict) for r in value):
            tables[key] = pd.DataFrame(value)
    return tables


def report_to_text(report: Dict) -> str:
    """Czytelna projekcja tego samego raportu: pola skalarne, potem tabele."""
    lines = []
    for key in sorted(report):
        value = report[key]
        if key in TABLE_KEYS or isinstance(value, dict):
            continue
        if isinstance(value, list):
            if value and not any(isinstance(v, (dict, list)) for v in value):
                lines.append(f"{key}: {', '.join(str(v) for v in value)}")
            continue
        lines.append(f"{key}: {value}")
    for key, df in report_tables(report).items():
        lines.append("")
        lines.append(f"[{key}]")
        lines.append(df.to_string(index=False))
    return "\n".join(lines) + "\n"


def write_report(report: Dict, fmt: str, output_path: Optional[str]) -> str:
    text = report_to_json(report) + "\n" if fmt == "json" else report_to_text(report)
    if output_path:
        with open(output_path, "w", encoding="utf-8") as f:
            f.write(text)
        print(f"{Fore.GREEN}Raport zapisano w: {os.path.abspath(output_path)}{Style.RESET_ALL}", file=sys.stderr)
        logging.info(f"Zapisano raport ({fmt}) do {output_path}")
    else:
        print(text, end="")
    return text


def export_to_csv(report: Dict, csv_path: str) -> List[str]:
    """
    Eksportuje tabele raportu do CSV (średnik, brakujące wartości jako 'brak_danych').
    Przy kilku tabelach każda trafia do pliku z sufiksem `_{klucz}`.
    """
    tables = report_tables(report)
    if not tables:
        print(f"{Fore.YELLOW}Brak danych tabelarycznych do zapisu w CSV.{Style.RESET_ALL}", file=sys.stderr)
        return []
    written = []
    base, ext = os.path.splitext(csv_path)
    for key, df in tables.items():
        path = csv_path if len(tables) == 1 else f"{base}_{key}{ext or '.csv'}"
        df.to_csv(path, sep=";", index=False, na_rep="brak_danych")
        written.append(path)
        print(f"{Fore.GREEN}Tabelę '{key}' zapisano w: {os.path.abspath(path)}{Style.RESET_ALL}", file=sys.stderr)
    return written
